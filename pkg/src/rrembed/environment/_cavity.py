"""Bare cavity: mode parameters, spectral grid and the bare Green function."""
from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import pandas as pd

from ..errors import ConfigurationError, ResolutionError
from ..util import EPSILON_0, SPEED_OF_LIGHT, Record, blocks, forward, half_axis, to_ev

_logger = logging.getLogger(__name__)


class CavitySpec(Record):
    """Lossy cavity with ``n_modes`` harmonics ``k * omega_c`` and mode volume ``volume``."""
    __fields__ = ['omega_c', 'eta', 'volume', 'n_modes']
    __types__ = [float, float, float, int]
    __defaults__ = {'eta': 0.0, 'n_modes': 1}

    def validate(self):
        if self.omega_c is None or not self.omega_c > 0:
            raise ConfigurationError('cavity frequency must be positive, got %s' % self.omega_c)

        if self.eta < 0:
            raise ConfigurationError('cavity loss eta must be non-negative, got %s' % self.eta)

        if self.volume is None or not self.volume > 0:
            raise ConfigurationError('mode volume must be positive, got %s' % self.volume)

        if self.n_modes < 1:
            raise ConfigurationError('need at least one cavity mode, got %s' % self.n_modes)

    @classmethod
    def from_coupling(cls, omega_c, eta, g_ratio, d01, omega_ref=None, n_modes=1):
        """Cavity whose mode volume realizes ``g0 / omega_ref = g_ratio``."""
        omega_ref = omega_c if omega_ref is None else omega_ref
        volume = coupling_volume(g_ratio, omega_ref, d01)
        return cls(omega_c=omega_c, eta=eta, volume=volume, n_modes=n_modes)

    @property
    def mode_frequencies(self):
        return self.omega_c * np.arange(1, self.n_modes + 1)

    @property
    def prefactor(self):
        """Amplitude ``2 c^2 / V`` of the damped mode sum."""
        return 2.0 * SPEED_OF_LIGHT ** 2 / self.volume


def coupling_volume(g_ratio, omega, d01):
    """Mode volume for ``g0 = d01 sqrt(omega / (eps0 V))`` and ``g0 / omega = g_ratio``."""
    if not g_ratio > 0:
        raise ConfigurationError('coupling ratio must be positive to define a mode volume, got %s' % g_ratio)

    if d01 == 0:
        raise ConfigurationError('vanishing transition dipole, cannot map coupling onto a mode volume')

    return abs(d01) ** 2 / (EPSILON_0 * g_ratio ** 2 * omega)


def coupling_ratio(volume, omega, d01):
    """Inverse of :func:`coupling_volume`."""
    return abs(d01) / np.sqrt(EPSILON_0 * volume * omega)


class SpectralGrid(Record):
    """Time step, number of propagation samples and spectral oversampling."""
    __fields__ = ['dt', 'n_steps', 'oversampling']
    __types__ = [float, int, int]
    __defaults__ = {'oversampling': 1}

    def validate(self):
        if self.dt is None or not self.dt > 0:
            raise ConfigurationError('time step must be positive, got %s' % self.dt)

        if self.n_steps is None or self.n_steps < 1:
            raise ConfigurationError('need at least one time step, got %s' % self.n_steps)

        if self.oversampling < 1:
            raise ConfigurationError('oversampling must be >= 1, got %s' % self.oversampling)

    @property
    def n_fft(self):
        return self.oversampling * self.n_steps

    @property
    def domega(self):
        return 2.0 * np.pi / (self.n_fft * self.dt)

    @property
    def omega(self):
        return half_axis(self.n_fft, self.dt)

    @property
    def times(self):
        return self.dt * np.arange(self.n_fft)


class GreenFunction(object):
    """Scalar Green function on the non-negative half axis of a spectral grid.

    ``omega`` is either the frequency array or the :class:`SpectralGrid` the
    values were computed on. For a grid the frequencies are generated on
    demand, block by block in the long-axis code paths.
    """
    def __init__(self, omega, values, cavity=None, chi=None):
        self.values = np.asarray(values, dtype=complex)
        self.cavity = cavity
        self.chi = chi

        if isinstance(omega, SpectralGrid):
            self.sgrid = omega
            self._omega = None
            shape = (omega.n_fft // 2 + 1,)

        else:
            self.sgrid = None
            self._omega = np.asarray(omega, dtype=float)
            shape = self._omega.shape

        if shape != self.values.shape:
            raise ConfigurationError('omega and values differ in shape: %s != %s' % (shape, self.values.shape))

    def __len__(self):
        return self.values.shape[0]

    def __repr__(self):
        return 'GreenFunction(n_omega={}, cavity={!r}, chi={!r})'.format(len(self), self.cavity, self.chi)

    @property
    def axis(self):
        """What to pass as ``omega`` for a Green function on the same axis."""
        return self._omega if self.sgrid is None else self.sgrid

    @property
    def omega(self):
        return self._omega if self.sgrid is None else self.sgrid.omega

    @property
    def domega(self):
        if self.sgrid is not None:
            return self.sgrid.domega

        return self._omega[1] - self._omega[0] if len(self) > 1 else np.inf

    def omega_at(self, sel):
        """Frequencies of the samples selected by the slice ``sel``."""
        if self.sgrid is None:
            return self._omega[sel]

        start, stop, _ = sel.indices(len(self))
        return half_axis(self.sgrid.n_fft, self.sgrid.dt, start, stop)

    def blocks(self):
        return blocks(len(self))

    def count_below(self, omega_max):
        """Number of leading samples with ``omega <= omega_max``."""
        if self.sgrid is None:
            return int(np.count_nonzero(self._omega <= omega_max))

        stop = min(len(self), int(np.floor(omega_max / self.sgrid.domega)) + 2)
        return int(np.count_nonzero(self.omega_at(slice(0, stop)) <= omega_max))

    def to_frame(self, omega_max=None):
        sel = slice(None) if omega_max is None else slice(0, self.count_below(omega_max))
        omega = self.omega_at(sel)
        values = self.values[sel]

        return pd.DataFrame({
            'omega_eV': to_ev(omega),
            're_g': values.real,
            'im_g': values.imag,
            'abs_im_g': np.abs(values.imag),
        }, columns=['omega_eV', 're_g', 'im_g', 'abs_im_g'])


def bare_green(cavity, sgrid):
    """Bare Green function from the damped mode sum sampled in time.

    ``f(t) = 2 c^2 / V exp(-eta t) sum_k sin(omega_k t) / omega_k`` is sampled
    on the oversampled time axis and transformed with
    :func:`rrembed.util.forward`. The signal is filled in blocks and dropped
    after the transform, so only the signal and the transform coexist.
    """
    n = sgrid.n_fft
    _logger.info('bare green function: %d modes on %d samples', cavity.n_modes, n)

    signal = np.empty(n)
    for sel in blocks(n):
        t = sgrid.dt * np.arange(sel.start, sel.stop)
        block = np.zeros_like(t)

        for omega_k in cavity.mode_frequencies:
            block += np.sin(omega_k * t) / omega_k

        block *= cavity.prefactor * np.exp(-cavity.eta * t)
        signal[sel] = block

    values = forward(signal, sgrid.dt)
    del signal

    return GreenFunction(sgrid, values, cavity=cavity)


def bare_green_analytic(cavity, omega):
    """Closed form ``2 c^2 / V sum_k 1 / ((eta - i omega)^2 + omega_k^2)``."""
    omega = np.asarray(omega, dtype=float)
    z = (cavity.eta - 1j * omega) ** 2

    result = np.zeros(omega.shape, dtype=complex)
    for omega_k in cavity.mode_frequencies:
        result += 1.0 / (z + omega_k ** 2)

    return cavity.prefactor * result


def check_resolution(g0, cavity, sgrid=None, tolerance=1e-6):
    """Detect under-resolved resonances of a sampled bare Green function.

    A converged ``Im g0`` is positive for positive frequencies. A sign change
    within ``10 eta`` of a mode indicates that the oversampled time window is
    too short.

    :raises ResolutionError: naming the offending resonance.
    """
    domega = g0.domega
    omega_last = g0.omega_at(slice(len(g0) - 1, len(g0)))[0]
    scale = max(np.max(np.abs(g0.values[sel].imag)) for sel in g0.blocks())

    if cavity.eta > 0 and domega > cavity.eta / 5:
        _logger.warning(
            'frequency resolution %.3g Ha is coarser than eta / 5 = %.3g Ha, consider raising the oversampling',
            domega, cavity.eta / 5,
        )

    for k, omega_k in enumerate(cavity.mode_frequencies, 1):
        if omega_k > omega_last:
            continue

        half_width = max(10 * cavity.eta, 3 * domega)
        sel = _window(g0, omega_k - half_width, omega_k + half_width)

        omega = g0.omega_at(sel)
        window = (np.abs(omega - omega_k) <= half_width) & (omega > 0)

        if np.any(g0.values[sel].imag[window] < -tolerance * scale):
            raise ResolutionError(
                'Im g0 changes sign near cavity resonance %d (%.6g eV): '
                'the spectral grid does not resolve eta = %.3g eV, increase the oversampling (domega = %.3g eV)' % (
                    k, to_ev(omega_k), to_ev(cavity.eta), to_ev(domega),
                )
            )

    return True


def _window(g, omega_min, omega_max):
    """Index slice covering ``[omega_min, omega_max]``, padded by one sample."""
    if g.sgrid is None:
        lo, hi = np.searchsorted(g.omega, [omega_min, omega_max])
        return slice(max(0, lo - 1), min(len(g), hi + 1))

    lo = int(np.floor(omega_min / g.domega)) - 1
    hi = int(np.ceil(omega_max / g.domega)) + 2
    return slice(max(0, lo), min(len(g), max(0, hi)))
