"""Kick spectroscopy, reactivity and sweep drivers."""
from __future__ import print_function, division, absolute_import

from ._reactivity import ReactivityResult, check_localized, crossed_fraction, run_reactivity, run_reference
from ._setup import (
    EmitterSystem,

    build_cavity,
    build_ensemble,
    build_grid,
    build_kick,
    build_omega,
    build_particle,
    build_potential,
    build_propagation,
    build_spectral_grid,
    build_system,
)
from ._spectrum import (
    SpectrumResult,

    kick_field,
    linearity_deviation,
    response_transform,
    run_spectrum,
    spectrum_from_trace,
)
from ._surface import run_surface
from ._sweep import apply_axis, reactivity_from_config, run_point, spectrum_from_config, sweep, sweep_point

__all__ = [
    'EmitterSystem',
    'ReactivityResult',
    'SpectrumResult',
    'apply_axis',
    'build_cavity',
    'build_ensemble',
    'build_grid',
    'build_kick',
    'build_omega',
    'build_particle',
    'build_potential',
    'build_propagation',
    'build_spectral_grid',
    'build_system',
    'check_localized',
    'crossed_fraction',
    'kick_field',
    'linearity_deviation',
    'reactivity_from_config',
    'response_transform',
    'run_point',
    'run_reactivity',
    'run_reference',
    'run_spectrum',
    'run_surface',
    'spectrum_from_config',
    'spectrum_from_trace',
    'sweep',
    'sweep_point',
]
