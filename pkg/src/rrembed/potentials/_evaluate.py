from __future__ import print_function, division, absolute_import

import numpy as np
from scipy.special import expit

from ..errors import ConfigurationError
from ..util import _monadic as m
from ._specs import DeltaKick, Sampled, SoftCoulomb, TiltedDoubleWell, lorentzian

evaluate = m.RuleSet(name='evaluate')
is_time_dependent = m.RuleSet(name='is_time_dependent')


@evaluate.rule(m.instanceof(SoftCoulomb))
def evaluate_soft_coulomb(evaluate, spec, grid, t=0.0):
    return -1.0 / np.sqrt(grid.x ** 2 + spec.softening)


@evaluate.rule(m.instanceof(TiltedDoubleWell))
def evaluate_tilted_double_well(evaluate, spec, grid, t=0.0):
    x = grid.x
    return spec.c1 * x - spec.c2 * x ** 2 + quartic_coefficient(spec, t) * x ** 4


@evaluate.rule(m.instanceof(DeltaKick))
def evaluate_delta_kick(evaluate, spec, grid, t=0.0):
    return -spec.strength * lorentzian(spec, t) * grid.x


@evaluate.rule(m.instanceof(Sampled))
def evaluate_sampled(evaluate, spec, grid, t=0.0):
    values = np.asarray(spec.values)

    if values.shape != (grid.n_points,):
        raise ConfigurationError('sampled potential has %d values, grid has %d points' % (
            values.shape[0], grid.n_points,
        ))

    return values


@is_time_dependent.rule(m.instanceof((TiltedDoubleWell, DeltaKick)))
def is_time_dependent_true(is_time_dependent, spec):
    return True


@is_time_dependent.rule(m.instanceof((SoftCoulomb, Sampled)))
def is_time_dependent_false(is_time_dependent, spec):
    return False


def quartic_coefficient(spec, t):
    """Effective ``x^4`` coefficient of a double well at time ``t``."""
    return spec.c4 * (1.0 + spec.amplitude * expit((t - spec.t0) / spec.tau))
