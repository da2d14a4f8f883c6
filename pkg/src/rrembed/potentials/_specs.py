"""Parameter records of the model potentials.

Coefficients are in Hartree with ``x`` counted in bohr, times in atomic
units. Use :func:`rrembed.util.fs` to convert femtoseconds.
"""
from __future__ import print_function, division, absolute_import

import numpy as np

from ..errors import ConfigurationError
from ..util import Record, fs


class SoftCoulomb(Record):
    """``-1 / sqrt(x^2 + softening)``, the one-dimensional hydrogen model."""
    __fields__ = ['softening']
    __types__ = [float]
    __defaults__ = {'softening': 1.0}

    def validate(self):
        if not self.softening > 0:
            raise ConfigurationError('softening must be positive, got %s' % self.softening)


class TiltedDoubleWell(Record):
    """Asymmetric double well whose quartic confinement is raised in time.

    ``v(x, t) = c1 x - c2 x^2 + c4 x^4 (1 + amplitude * sigmoid((t - t0) / tau))``
    """
    __fields__ = ['c1', 'c2', 'c4', 'amplitude', 't0', 'tau']
    __types__ = [float] * 6
    __defaults__ = {
        'c1': 1e-3,
        'c2': 1.25e-3,
        'c4': 1e-4,
        'amplitude': 0.4,
        't0': fs(60.0),
        'tau': fs(10.0),
    }

    def validate(self):
        if not self.tau > 0:
            raise ConfigurationError('deformation time tau must be positive, got %s' % self.tau)

        if not self.c4 > 0:
            raise ConfigurationError('quartic coefficient c4 must be positive to confine, got %s' % self.c4)

        if self.amplitude <= -1:
            raise ConfigurationError('amplitude <= -1 removes the quartic confinement')


class DeltaKick(Record):
    """Lorentzian shaped impulse ``-K (1/pi) w / ((t - t_k)^2 + w^2) x``."""
    __fields__ = ['strength', 'center', 'width']
    __types__ = [float, float, float]
    __defaults__ = {'strength': 1e-4, 'center': 1.0, 'width': 1e-2}

    def validate(self):
        if not self.width > 0:
            raise ConfigurationError('kick width must be positive, got %s' % self.width)


class Sampled(Record):
    """A static potential given by its values on the grid."""
    __fields__ = ['values']
    __types__ = [lambda values: tuple(float(v) for v in np.ravel(values))]

    def validate(self):
        if not self.values:
            raise ConfigurationError('sampled potential without values')


def fast_deformation_variant(base=None):
    """The double well deformed around 5 fs within 1 fs."""
    if base is None:
        base = TiltedDoubleWell()

    return base.update(t0=fs(5.0), tau=fs(1.0))


def lorentzian(spec, t):
    """Normalized time profile of a kick."""
    return spec.width / np.pi / ((t - spec.center) ** 2 + spec.width ** 2)


def kick_impulse(spec, t_end, t_start=0.0):
    """Analytic ``int K * lorentzian dt`` over ``[t_start, t_end]``."""
    upper = np.arctan((t_end - spec.center) / spec.width)
    lower = np.arctan((t_start - spec.center) / spec.width)
    return spec.strength * (upper - lower) / np.pi
