"""Real time radiation-reaction memory kernel."""
from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import pandas as pd

from ..errors import ConfigurationError, SymmetryError
from ..util import MU_0, blocks, derivative, inverse, to_fs
from ._cavity import bare_green, check_resolution
from ._dyson import dress_green

_logger = logging.getLogger(__name__)

symmetry_tolerance = 1e-8


class MemoryKernel(object):
    """``K(t_j)`` on the propagation time axis ``t_j = j dt``."""
    def __init__(self, values, dt):
        self.values = np.asarray(values, dtype=float)
        self.dt = float(dt)

    def __len__(self):
        return self.values.shape[0]

    def __repr__(self):
        return 'MemoryKernel(n={}, dt={}, max={:.6g})'.format(len(self), self.dt, self.max())

    @property
    def times(self):
        return self.dt * np.arange(len(self))

    def max(self):
        return float(np.max(np.abs(self.values))) if len(self) else 0.0

    def is_zero(self):
        return not np.any(self.values)

    def to_frame(self):
        return pd.DataFrame({'t_fs': to_fs(self.times), 'K': self.values}, columns=['t_fs', 'K'])


def kernel_from_green(g, sgrid, method='derivative'):
    """Transform ``mu0 i omega g(omega)`` into the real time kernel.

    ``derivative`` evaluates ``-mu0 d/dt F^-1[g]`` with fourth order finite
    differences, which keeps the overtones of the truncated ``i omega``
    factor out of the kernel. ``direct`` transforms ``i omega g`` and is only
    kept for comparison.

    Only the leading samples of the inverse transform are kept, enough for the
    interior stencil to reach the last propagation step.

    :raises SymmetryError: when ``g(0)`` is not real, i.e. the Hermitian
        extension ``g(-omega) = conj(g(omega))`` does not hold.
    """
    n = sgrid.n_fft
    values = np.asarray(g.values)

    if values.shape[0] != n // 2 + 1:
        raise ConfigurationError('green function has %d samples, spectral grid expects %d' % (
            values.shape[0], n // 2 + 1,
        ))

    scale = max(np.max(np.abs(values[sel])) for sel in blocks(values.shape[0]))
    if scale == 0:
        return MemoryKernel(np.zeros(sgrid.n_steps), sgrid.dt)

    if abs(values[0].imag) > symmetry_tolerance * scale:
        raise SymmetryError('g(0) has an imaginary part of %.3g relative, the time domain kernel would not be real' % (
            abs(values[0].imag) / scale,
        ))

    if method == 'derivative':
        head = sgrid.n_steps + 4 if n >= sgrid.n_steps + 4 else n
        kernel = -MU_0 * derivative(inverse(values, sgrid.dt, n, head=head), sgrid.dt)

    elif method == 'direct':
        weighted = np.empty_like(values)
        for sel in blocks(values.shape[0]):
            weighted[sel] = 1j * g.omega_at(sel) * values[sel]

        kernel = MU_0 * inverse(weighted, sgrid.dt, n, head=sgrid.n_steps)
        del weighted

    else:
        raise ValueError('unknown kernel method %s' % method)

    return MemoryKernel(kernel[:sgrid.n_steps], sgrid.dt)


def radiation_reaction_kernel(cavity, chi, sgrid, g0=None, method='derivative', check=True):
    """Kernel of a cavity dressed by ``chi``, ``None`` without a cavity.

    Without ``g0`` the bare function is built here and dressed in place.

    :returns: a tuple ``(kernel, g)`` of the kernel and the dressed Green
        function.
    """
    if cavity is None:
        return None, None

    overwrite = g0 is None
    if g0 is None:
        g0 = bare_green(cavity, sgrid)

        if check:
            check_resolution(g0, cavity)

    g = dress_green(g0, chi, sgrid, overwrite=overwrite)
    kernel = kernel_from_green(g, sgrid, method=method)

    _logger.info('memory kernel: %d samples, max |K| = %.4g', len(kernel), kernel.max())
    return kernel, g
