from __future__ import print_function, division, absolute_import

import numpy as np

from ..potentials import DeltaKick, evaluate, is_time_dependent
from ..quantum import build_hamiltonian, kinetic_operator


class TimeDependentHamiltonian(object):
    """Kinetic operator plus a sum of potential specs evaluated at time ``t``.

    With ``deform=False`` time dependent potentials other than kicks are
    frozen at ``t = 0``. Static contributions are summed once.
    """
    def __init__(self, grid, particle, potentials, deform=True):
        self.grid = grid
        self.particle = particle
        self.potentials = tuple(potentials)
        self.deform = bool(deform)

        self.kinetic = kinetic_operator(grid, particle)
        self.static_potential = np.zeros(grid.n_points)
        self.dynamic = []

        for spec in self.potentials:
            if is_time_dependent(spec) and (self.deform or isinstance(spec, DeltaKick)):
                self.dynamic.append(spec)

            else:
                self.static_potential = self.static_potential + evaluate(spec, grid, 0.0)

    def __repr__(self):
        return 'TimeDependentHamiltonian(potentials={!r}, deform={})'.format(self.potentials, self.deform)

    def configure(self, kick=None, deform=None):
        """A copy with an extra kick and/or a different deformation switch."""
        potentials = self.potentials if kick is None else self.potentials + (kick,)
        deform = self.deform if deform is None else deform
        return TimeDependentHamiltonian(self.grid, self.particle, potentials, deform=deform)

    @property
    def is_static(self):
        return not self.dynamic

    def potential(self, t):
        result = self.static_potential
        for spec in self.dynamic:
            result = result + evaluate(spec, self.grid, t)

        return result

    def apply(self, amplitudes, t, extra=None):
        """``H(t) psi``, ``extra`` is an additional local potential."""
        potential = self.potential(t)
        if extra is not None:
            potential = potential + extra

        return self.kinetic @ amplitudes + potential * amplitudes

    def matrix(self, t=0.0):
        return build_hamiltonian(self.grid, self.particle, self.potential(t))
