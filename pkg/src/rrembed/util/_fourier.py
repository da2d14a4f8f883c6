"""The single Fourier convention used throughout rrembed.

Forward transform of a causal signal sampled at ``t_j = j * dt``::

    F[f](w) = int_0^inf dt f(t) exp(+i w t)   ->   G_m = dt * sum_j f_j exp(+2 pi i m j / n)

The inverse assumes the Hermitian extension ``G(-w) = conj(G(w))``::

    f(t) = 1/(2 pi) int dw exp(-i w t) G(w)   ->   f_j = irfft(conj(G), n)_j / dt

so ``inverse(forward(f, dt), dt, n)`` returns ``f`` up to round-off. Only the
non-negative half axis ``w_m = 2 pi m / (n dt)`` with ``m = 0 .. n // 2`` is
stored.
"""
from __future__ import print_function, division, absolute_import

import numpy as np
import scipy.fft

#: samples per block of the blockwise evaluations on long frequency or time axes
block_size = 2 ** 16


def half_axis(n, dt, start=0, stop=None):
    """Non-negative angular frequencies of an ``n`` point transform.

    ``start`` and ``stop`` select a block of the axis, bit-identical to the
    corresponding slice of the full axis.
    """
    stop = n // 2 + 1 if stop is None else stop
    return 2.0 * np.pi * np.arange(start, stop) / (n * dt)


def blocks(n, size=block_size):
    """Consecutive ``slice`` objects of at most ``size`` covering ``range(n)``."""
    for start in range(0, n, size):
        yield slice(start, min(n, start + size))


def forward(f, dt, n=None):
    """Transform a real causal signal, zero padded to ``n`` samples."""
    result = scipy.fft.rfft(np.asarray(f, dtype=float), n)
    np.conjugate(result, out=result)
    result *= dt
    return result


def inverse(g, dt, n, head=None):
    """Inverse of :func:`forward` for the half-axis values ``g``.

    With ``head`` only the first ``head`` time samples are returned. They are
    read off the time reversed ``irfft(g)``, so no conjugated copy of ``g`` is
    made.
    """
    g = np.asarray(g, dtype=complex)

    if g.shape[0] != n // 2 + 1:
        raise ValueError('expected %d half-axis samples for n=%d, got %d' % (n // 2 + 1, n, g.shape[0]))

    if head is None:
        return scipy.fft.irfft(np.conj(g), n) / dt

    reversed_ = scipy.fft.irfft(g, n)
    return reversed_[(-np.arange(min(head, n))) % n] / dt


def transform_at(f, dt, omega, chunk_size=None):
    """Direct transform of ``f`` at arbitrary frequencies ``omega``.

    Used for spectra on user supplied frequency grids. Evaluated in chunks of
    frequencies to bound the size of the phase matrix.
    """
    f = np.asarray(f)
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    t = dt * np.arange(f.shape[0])

    if chunk_size is None:
        chunk_size = max(1, 2 ** 22 // max(1, f.shape[0]))

    result = np.empty(omega.shape[0], dtype=complex)
    for start in range(0, omega.shape[0], chunk_size):
        part = omega[start:start + chunk_size]
        result[start:start + chunk_size] = dt * np.exp(1j * np.outer(part, t)) @ f

    return result


def derivative(f, dt):
    """Fourth order finite difference derivative.

    Central differences in the interior, one-sided fourth order differences at
    the two first and two last samples.
    """
    f = np.asarray(f)
    n = f.shape[0]

    if n < 5:
        raise ValueError('need at least 5 samples for a fourth order derivative, got %d' % n)

    result = np.empty_like(f)
    result[2:-2] = (f[:-4] - 8 * f[1:-3] + 8 * f[3:-1] - f[4:]) / (12 * dt)

    for j in (0, 1):
        result[j] = (-25 * f[j] + 48 * f[j + 1] - 36 * f[j + 2] + 16 * f[j + 3] - 3 * f[j + 4]) / (12 * dt)

    for j in (n - 1, n - 2):
        result[j] = (25 * f[j] - 48 * f[j - 1] + 36 * f[j - 2] - 16 * f[j - 3] + 3 * f[j - 4]) / (12 * dt)

    return result


def exponential_window(n, dt, gamma):
    """Damping window ``exp(-gamma t)``, a Lorentzian of half width ``gamma`` in frequency."""
    return np.exp(-gamma * dt * np.arange(n))
