"""Kick spectroscopy: polarizability and photoabsorption cross section."""
from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import pandas as pd
import scipy.fft
import scipy.integrate
import scipy.signal

from ..environment import SpectralGrid, radiation_reaction_kernel
from ..errors import ConfigurationError
from ..propagation import propagate
from ..util import SPEED_OF_LIGHT, ev, exponential_window, forward, half_axis, to_ev, transform_at

_logger = logging.getLogger(__name__)

#: relative deviation of the doubled-kick response that triggers a warning
linearity_tolerance = 0.02

#: frequency samples per window half width of the padded transform
samples_per_width = 20


class SpectrumResult(object):
    """Linear response on the requested frequency grid (atomic units)."""
    def __init__(self, omega, alpha, warnings=()):
        self.omega = np.asarray(omega, dtype=float)
        self.alpha = np.asarray(alpha, dtype=complex)
        self.warnings = list(warnings)

        self.trace = None
        self.observables = None
        self.kernel = None
        self.green = None

    def __repr__(self):
        return 'SpectrumResult(n_omega={}, warnings={!r})'.format(self.omega.shape[0], self.warnings)

    @property
    def omega_ev(self):
        return to_ev(self.omega)

    @property
    def sigma(self):
        return 4 * np.pi * self.omega / SPEED_OF_LIGHT * self.alpha.imag

    def peaks(self, prominence=0.05):
        """Peak frequencies in Hartree, ``prominence`` relative to the largest ``sigma``."""
        sigma = self.sigma
        scale = np.max(np.abs(sigma)) if sigma.size else 0.0

        if scale == 0:
            return np.array([])

        idx, _ = scipy.signal.find_peaks(sigma, prominence=prominence * scale)
        return self.omega[idx]

    def integrated(self, omega_min=None, omega_max=None):
        """``int sigma d omega`` over a frequency interval."""
        sel = np.ones(self.omega.shape, dtype=bool)

        if omega_min is not None:
            sel &= self.omega >= omega_min

        if omega_max is not None:
            sel &= self.omega <= omega_max

        if np.count_nonzero(sel) < 2:
            return 0.0

        return float(scipy.integrate.trapezoid(self.sigma[sel], self.omega[sel]))

    def to_frame(self):
        return pd.DataFrame({
            'omega_eV': self.omega_ev,
            'sigma': self.sigma,
            're_alpha': self.alpha.real,
            'im_alpha': self.alpha.imag,
        }, columns=['omega_eV', 'sigma', 're_alpha', 'im_alpha'])


def kick_field(kick, charge, omega):
    """Transform of the kick field ``E(t) = K / q * lorentzian(t)``."""
    omega = np.asarray(omega, dtype=float)
    return kick.strength / charge * np.exp(1j * omega * kick.center - kick.width * omega)


def response_transform(R, dt, omega, window=ev(0.05), transform='fft'):
    """Windowed transform of the dipole response ``R(t) - R(0)``."""
    R = np.asarray(R, dtype=float)
    signal = (R - R[0]) * exponential_window(R.shape[0], dt, window)

    if transform == 'direct':
        return transform_at(signal, dt, omega)

    elif transform != 'fft':
        raise ConfigurationError('unknown transform %s, expected fft or direct' % transform)

    n = signal.shape[0]
    if window > 0:
        n = max(n, int(np.ceil(2 * np.pi * samples_per_width / (dt * window))))

    n = scipy.fft.next_fast_len(n, real=True)
    axis = half_axis(n, dt)
    values = forward(signal, dt, n)

    return (
        np.interp(omega, axis, values.real, left=0.0, right=0.0) +
        1j * np.interp(omega, axis, values.imag, left=0.0, right=0.0)
    )


def spectrum_from_trace(trace, kick, charge, omega, window=ev(0.05), transform='fft'):
    """Polarizability ``alpha = R(omega) / (2 pi E(omega))`` of a kicked trajectory.

    Dividing by the transform of the finite width kick removes its roll-off,
    for an ideal delta kick ``E(omega) = K / q``.
    """
    omega = np.asarray(omega, dtype=float)
    response = response_transform(trace.R, trace.dt, omega, window=window, transform=transform)
    alpha = response / (2 * np.pi * kick_field(kick, charge, omega))
    return SpectrumResult(omega, alpha)


def run_spectrum(
    system, propagation, cavity=None, chi=None, omega=None, oversampling=10, window=ev(0.05),
    transform='fft', check_linearity=False, kernel_method='derivative', kernel=None,
):
    """Kick the emitter ground state and return its linear response.

    :param EmitterSystem system: the explicit emitter.
    :param PropagationConfig propagation: must carry a kick.
    :param Optional[CavitySpec] cavity: no radiation reaction without cavity.
    :param chi: ensemble susceptibility model dressing the cavity.
    :param omega: frequency grid in Hartree, defaults to ``[0, 20] eV``.
    :param kernel: a precomputed :class:`MemoryKernel`, skips the Green
        function pipeline.

    :returns: a :class:`SpectrumResult` carrying the trajectory, the kernel
        and the dressed Green function as attributes.
    """
    if propagation.kick is None:
        raise ConfigurationError('spectrum runs need a kick')

    if omega is None:
        omega = np.linspace(0.0, ev(20.0), 4001)

    green = None
    if kernel is None:
        sgrid = SpectralGrid(propagation.dt, propagation.n_steps, oversampling)
        kernel, green = radiation_reaction_kernel(cavity, chi, sgrid, method=kernel_method)

    charge = system.particle.charge
    trace, observables = propagate(system.ground, system.hamiltonian, kernel, propagation)
    result = spectrum_from_trace(trace, propagation.kick, charge, omega, window=window, transform=transform)

    if check_linearity:
        doubled = propagation.update(kick=propagation.kick.update(strength=2 * propagation.kick.strength))
        trace2, _ = propagate(system.ground, system.hamiltonian, kernel, doubled)

        deviation = linearity_deviation(trace, trace2, omega, window=window, transform=transform)
        if deviation > linearity_tolerance:
            message = 'response is nonlinear: doubling the kick changes max|R(omega)| by a factor off by %.2g%%' % (
                100 * deviation
            )
            _logger.warning(message)
            result.warnings.append(message)

    result.trace = trace
    result.observables = observables
    result.kernel = kernel
    result.green = green

    peaks = result.peaks()
    _logger.info('spectrum peaks at %s eV', ', '.join('%.4f' % p for p in to_ev(peaks)) or 'none')
    return result


def linearity_deviation(trace, doubled, omega, window=ev(0.05), transform='fft'):
    """Relative deviation of ``max|R_2K(omega)| / max|R_K(omega)|`` from 2."""
    single = np.max(np.abs(response_transform(trace.R, trace.dt, omega, window, transform)))
    double = np.max(np.abs(response_transform(doubled.R, doubled.dt, omega, window, transform)))

    if single == 0:
        return 0.0 if double == 0 else np.inf

    return abs(double / single / 2.0 - 1.0)
