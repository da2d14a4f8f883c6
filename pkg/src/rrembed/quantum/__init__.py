"""Real-space quantum mechanics of the single explicit emitter."""
from __future__ import print_function, division, absolute_import

from ._grid import ELECTRON, PROTON, Grid1D, ParticleSpec, Wavefunction
from ._hamiltonian import EigenSolution, build_hamiltonian, kinetic_operator, solve_eigenstates
from ._observables import dipole, energy, side_populations, transition_dipole

__all__ = [
    'ELECTRON',
    'EigenSolution',
    'Grid1D',
    'PROTON',
    'ParticleSpec',
    'Wavefunction',
    'build_hamiltonian',
    'dipole',
    'energy',
    'kinetic_operator',
    'side_populations',
    'solve_eigenstates',
    'transition_dipole',
]
