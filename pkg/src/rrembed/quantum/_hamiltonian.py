from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import scipy.linalg
import scipy.sparse
import scipy.sparse.linalg

from ..errors import ConfigurationError, ConvergenceError
from ._grid import Wavefunction

_logger = logging.getLogger(__name__)

#: 4th order central stencil of the second derivative, offsets -2 .. 2
stencil = (-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12)

#: largest grid diagonalized densely
dense_limit = 4000

residual_tolerance = 1e-8
overlap_tolerance = 1e-10


def kinetic_operator(grid, particle):
    """Sparse ``-1/(2m) d^2/dx^2`` with hard-wall boundaries."""
    if grid.n_points < len(stencil):
        raise ConfigurationError('grid of %d points is too small for the 5 point stencil' % grid.n_points)

    n = grid.n_points
    scale = -0.5 / (particle.mass * grid.spacing ** 2)

    diagonals = [np.full(n - abs(offset), scale * c) for offset, c in zip(range(-2, 3), stencil)]
    return scipy.sparse.diags(diagonals, range(-2, 3), shape=(n, n), format='csr')


def build_hamiltonian(grid, particle, potential):
    """Sparse real symmetric Hamiltonian for a sampled potential."""
    potential = np.asarray(potential, dtype=float)

    if potential.shape != (grid.n_points,):
        raise ConfigurationError('potential has shape %s, expected (%d,)' % (potential.shape, grid.n_points))

    return (kinetic_operator(grid, particle) + scipy.sparse.diags(potential, format='csr')).tocsr()


class EigenSolution(object):
    """Lowest eigenpairs, ascending, with states normalized on the grid."""
    def __init__(self, energies, states, residuals):
        self.energies = np.asarray(energies)
        self.states = list(states)
        self.residuals = np.asarray(residuals)

    def __len__(self):
        return len(self.states)

    def __repr__(self):
        return 'EigenSolution(energies={!r})'.format(self.energies)

    @property
    def ground(self):
        return self.states[0]

    def gap(self, i=0, j=1):
        return float(self.energies[j] - self.energies[i])


def solve_eigenstates(H, k, grid):
    """Lowest ``k`` eigenpairs of the symmetric operator ``H``.

    Dense LAPACK up to :data:`dense_limit` points, ARPACK beyond. Each state
    is scaled such that ``int |psi|^2 dx = 1`` and its largest component is
    positive.

    :raises ConvergenceError: when a residual or overlap bound is violated.
    """
    n = H.shape[0]

    if not 1 <= k <= n:
        raise ConfigurationError('cannot compute %d eigenstates of a %d point grid' % (k, n))

    if n <= dense_limit or k >= n - 1:
        dense = H.toarray() if scipy.sparse.issparse(H) else np.asarray(H)
        energies, vectors = scipy.linalg.eigh(dense, subset_by_index=[0, k - 1])

    else:
        _logger.info('iterative eigensolve of %d states on %d points', k, n)
        energies, vectors = scipy.sparse.linalg.eigsh(H, k=k, which='SA')
        order = np.argsort(energies)
        energies, vectors = energies[order], vectors[:, order]

    idx = np.argmax(np.abs(vectors), axis=0)
    vectors = vectors * np.sign(vectors[idx, np.arange(k)])

    residuals = np.linalg.norm(H @ vectors - vectors * energies, axis=0)
    overlap_error = np.max(np.abs(vectors.T @ vectors - np.eye(k)))

    if np.any(residuals > residual_tolerance) or overlap_error > overlap_tolerance:
        raise ConvergenceError(
            'eigensolve did not converge: max residual %.3g, max overlap error %.3g' % (
                np.max(residuals), overlap_error,
            ),
            residuals=residuals,
        )

    states = [Wavefunction(vectors[:, i] / np.sqrt(grid.spacing), grid) for i in range(k)]
    return EigenSolution(energies, states, residuals)
