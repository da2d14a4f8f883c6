"""Real time propagation with the self-consistent radiation-reaction potential."""
from __future__ import print_function, division, absolute_import

from ._config import PropagationConfig
from ._hamiltonian import TimeDependentHamiltonian
from ._propagate import DipoleTrace, propagate, rk4_step, rr_field

__all__ = ['DipoleTrace', 'PropagationConfig', 'TimeDependentHamiltonian', 'propagate', 'rk4_step', 'rr_field']
