"""Physical constants and unit conversions.

Everything inside the package is in Hartree atomic units. Conversions to and
from eV, fs and angstrom only happen at the input/output boundary.
"""
from __future__ import print_function, division, absolute_import

import numpy as np

from ..errors import UnitError

HARTREE_EV = 27.211386
AU_TIME_FS = 0.02418884
FS_AU = 41.34137
BOHR_ANGSTROM = 0.529177

SPEED_OF_LIGHT = 137.036
EPSILON_0 = 1.0 / (4.0 * np.pi)
MU_0 = 4.0 * np.pi / SPEED_OF_LIGHT ** 2

PROTON_MASS = 1836.15267

#: unit name (lower case) -> factor to atomic units, per dimension
units = {
    'energy': {
        'ha': 1.0,
        'hartree': 1.0,
        'au': 1.0,
        'ev': 1.0 / HARTREE_EV,
        'mev': 1e-3 / HARTREE_EV,
    },
    'time': {
        'au': 1.0,
        'fs': FS_AU,
        'ps': 1e3 * FS_AU,
    },
    'length': {
        'au': 1.0,
        'bohr': 1.0,
        'a0': 1.0,
        'angstrom': 1.0 / BOHR_ANGSTROM,
    },
    'volume': {
        'au': 1.0,
        'bohr3': 1.0,
        'angstrom3': BOHR_ANGSTROM ** -3,
    },
}


def to_atomic(value, unit, dimension):
    """Convert ``value`` given in ``unit`` into atomic units of ``dimension``."""
    if dimension not in units:
        raise UnitError('quantity with unit %s given where a plain number is expected' % unit)

    factors = units[dimension]
    if unit is None:
        return float(value)

    try:
        factor = factors[unit.lower()]

    except KeyError:
        raise UnitError('unit %s is not a valid %s unit, expected one of %s' % (
            unit, dimension, ', '.join(sorted(factors)),
        ))

    return float(value) * factor


def ev(value):
    return value / HARTREE_EV


def to_ev(value):
    return np.asarray(value) * HARTREE_EV if np.ndim(value) else float(value) * HARTREE_EV


def fs(value):
    return value * FS_AU


def to_fs(value):
    return np.asarray(value) * AU_TIME_FS if np.ndim(value) else float(value) * AU_TIME_FS
