"""Model potentials and perturbations of the explicit emitter."""
from __future__ import print_function, division, absolute_import

from ._evaluate import evaluate, is_time_dependent, quartic_coefficient
from ._specs import (
    DeltaKick,
    Sampled,
    SoftCoulomb,
    TiltedDoubleWell,

    fast_deformation_variant,
    kick_impulse,
    lorentzian,
)

__all__ = [
    'DeltaKick',
    'Sampled',
    'SoftCoulomb',
    'TiltedDoubleWell',
    'evaluate',
    'fast_deformation_variant',
    'is_time_dependent',
    'kick_impulse',
    'lorentzian',
    'quartic_coefficient',
]
