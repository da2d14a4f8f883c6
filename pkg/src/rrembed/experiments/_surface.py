from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import pandas as pd

from ..quantum import solve_eigenstates
from ..util import to_ev

_logger = logging.getLogger(__name__)


def run_surface(system, t_after, n_states=6):
    """Potential and lowest levels of the emitter at ``t = 0`` and at ``t_after``.

    :returns: a tuple ``(potential, levels)`` of dataframes with columns
        ``x_bohr, v_before_eV, v_after_eV`` and
        ``state, E_before_eV, E_after_eV``.
    """
    hamiltonian = system.hamiltonian
    grid = system.grid

    before = solve_eigenstates(hamiltonian.matrix(0.0), n_states, grid)
    after = solve_eigenstates(hamiltonian.matrix(t_after), n_states, grid)

    _logger.info(
        'deformation shifts the first excitation from %.6g eV to %.6g eV',
        to_ev(before.gap(0, 1)), to_ev(after.gap(0, 1)),
    )

    potential = pd.DataFrame({
        'x_bohr': grid.x,
        'v_before_eV': to_ev(hamiltonian.potential(0.0)),
        'v_after_eV': to_ev(hamiltonian.potential(t_after)),
    }, columns=['x_bohr', 'v_before_eV', 'v_after_eV'])

    levels = pd.DataFrame({
        'state': np.arange(n_states),
        'E_before_eV': to_ev(before.energies),
        'E_after_eV': to_ev(after.energies),
    }, columns=['state', 'E_before_eV', 'E_after_eV'])

    return potential, levels
