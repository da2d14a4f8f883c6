"""Electromagnetic environment: bare and dressed cavity Green functions and the memory kernel."""
from __future__ import print_function, division, absolute_import

from ._cavity import (
    CavitySpec,
    GreenFunction,
    SpectralGrid,

    bare_green,
    bare_green_analytic,
    check_resolution,
    coupling_ratio,
    coupling_volume,
)
from ._dyson import dress_green, dressed_inverse, dressed_poles
from ._kernel import MemoryKernel, kernel_from_green, radiation_reaction_kernel
from ._susceptibility import (
    DrudeLorentz,
    Tabulated,

    check_causality,
    chi_drude_lorentz,
    chi_from_polarizability,
    clausius_mossotti,
    interpolate_alpha,
    read_polarizability,
    susceptibility,
)

__all__ = [
    'CavitySpec',
    'DrudeLorentz',
    'GreenFunction',
    'MemoryKernel',
    'SpectralGrid',
    'Tabulated',
    'bare_green',
    'bare_green_analytic',
    'check_causality',
    'check_resolution',
    'chi_drude_lorentz',
    'chi_from_polarizability',
    'clausius_mossotti',
    'coupling_ratio',
    'coupling_volume',
    'dress_green',
    'dressed_inverse',
    'dressed_poles',
    'interpolate_alpha',
    'kernel_from_green',
    'radiation_reaction_kernel',
    'read_polarizability',
    'susceptibility',
]
