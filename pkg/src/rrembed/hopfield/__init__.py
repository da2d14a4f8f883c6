"""Hopfield model cross-check of the collective strong coupling."""
from __future__ import print_function, division, absolute_import

from ._hopfield import (
    HopfieldSpec,

    bright_dark_reduce,
    build_arrowhead,
    eigenvalues,
    hopfield_sweep,
    polariton_weights,
)

__all__ = [
    'HopfieldSpec',
    'bright_dark_reduce',
    'build_arrowhead',
    'eigenvalues',
    'hopfield_sweep',
    'polariton_weights',
]
