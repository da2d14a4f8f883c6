"""Arrowhead Hamiltonian of a cavity coupled to an ensemble and one distinct molecule.

Basis order of the full matrix: photon, ``N`` ensemble emitters, molecule.
The bright block uses ``bright ensemble state, photon, molecule``.
"""
from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import pandas as pd
import scipy.linalg

from ..errors import ConfigurationError
from ..util import Record, to_ev

_logger = logging.getLogger(__name__)

#: largest matrix handed to the dense eigensolver
dense_limit = 2002

#: column order of the weight tables
weight_columns = ['photon', 'ensemble', 'molecule']


class HopfieldSpec(Record):
    """Energies and couplings in Hartree, ``N`` identical ensemble emitters."""
    __fields__ = ['omega_c', 'omega_E', 'omega_m', 'g', 'g_m', 'N']
    __types__ = [float, float, float, float, float, int]
    __defaults__ = {'g_m': 0.0, 'N': 0}

    def validate(self):
        for name in ('omega_c', 'omega_E', 'omega_m'):
            value = getattr(self, name)
            if value is None or not value > 0:
                raise ConfigurationError('%s must be positive, got %s' % (name, value))

        if self.g is None:
            raise ConfigurationError('missing ensemble coupling g')

        if self.N < 0:
            raise ConfigurationError('ensemble size must be non-negative, got %s' % self.N)

    @property
    def collective_coupling(self):
        return self.g * np.sqrt(self.N)


def build_arrowhead(spec):
    """The real symmetric ``(N + 2) x (N + 2)`` matrix."""
    n = spec.N + 2
    matrix = np.zeros((n, n))

    matrix[np.diag_indices(n)] = [spec.omega_c] + [spec.omega_E] * spec.N + [spec.omega_m]
    matrix[0, 1:n - 1] = matrix[1:n - 1, 0] = spec.g
    matrix[0, n - 1] = matrix[n - 1, 0] = spec.g_m
    return matrix


def bright_dark_reduce(spec):
    """Bright ``3 x 3`` block and the degeneracy ``N - 1`` of the dark states at ``omega_E``."""
    if spec.N < 1:
        raise ConfigurationError('bright state reduction needs at least one ensemble emitter, got N=%d' % spec.N)

    G = spec.collective_coupling
    bright = np.array([
        [spec.omega_E, G, 0.0],
        [G, spec.omega_c, spec.g_m],
        [0.0, spec.g_m, spec.omega_m],
    ])
    return bright, spec.N - 1


def eigenvalues(spec, dense_limit=dense_limit):
    """All ``N + 2`` eigenvalues, ascending.

    Beyond ``dense_limit`` the bright block eigenvalues are joined with the
    dark states, which is exact for identical emitters.
    """
    if spec.N + 2 <= dense_limit or spec.N == 0:
        return scipy.linalg.eigvalsh(build_arrowhead(spec))

    bright, n_dark = bright_dark_reduce(spec)
    return np.sort(np.concatenate([scipy.linalg.eigvalsh(bright), np.full(n_dark, spec.omega_E)]))


def polariton_weights(matrix, layout='arrowhead'):
    """Eigenvalues and squared eigenvector components grouped by subsystem.

    :param str layout: ``arrowhead`` for matrices of :func:`build_arrowhead`,
        ``bright`` for the block of :func:`bright_dark_reduce`.

    :returns: a dataframe with columns ``branch, energy, photon, ensemble,
        molecule``, one row per eigenvector in ascending energy.
    """
    matrix = np.asarray(matrix, dtype=float)

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ConfigurationError('expected a square matrix, got shape %s' % (matrix.shape,))

    if not np.allclose(matrix, matrix.T):
        raise ConfigurationError('polariton weights need a symmetric matrix')

    energies, vectors = scipy.linalg.eigh(matrix)
    weights = vectors ** 2

    if layout == 'arrowhead':
        if matrix.shape[0] < 2:
            raise ConfigurationError('arrowhead matrices have at least photon and molecule')

        photon = weights[0]
        ensemble = weights[1:-1].sum(axis=0)
        molecule = weights[-1]

    elif layout == 'bright':
        if matrix.shape != (3, 3):
            raise ConfigurationError('bright blocks are 3 x 3, got shape %s' % (matrix.shape,))

        ensemble, photon, molecule = weights

    else:
        raise ConfigurationError('unknown layout %s, expected arrowhead or bright' % layout)

    return pd.DataFrame({
        'branch': np.arange(energies.shape[0]),
        'energy': energies,
        'photon': photon,
        'ensemble': ensemble,
        'molecule': molecule,
    }, columns=['branch', 'energy'] + weight_columns)


def hopfield_sweep(spec, N_values):
    """Bright branches and their weights as the ensemble grows.

    :returns: a tidy dataframe with columns ``N, g_sqrt_N_eV, branch,
        energy_eV, photon, ensemble, molecule``. Dark states are not listed.
    """
    parts = []

    for N in N_values:
        point = spec.update(N=int(N))

        if point.N == 0:
            df = polariton_weights(build_arrowhead(point), layout='arrowhead')

        else:
            df = polariton_weights(bright_dark_reduce(point)[0], layout='bright')

        df['energy'] = to_ev(df['energy'])
        df = df.rename(columns={'energy': 'energy_eV'})
        df.insert(0, 'g_sqrt_N_eV', to_ev(point.collective_coupling))
        df.insert(0, 'N', point.N)
        parts.append(df)

    _logger.info('hopfield sweep over %d ensemble sizes', len(parts))
    return pd.concat(parts, ignore_index=True)
