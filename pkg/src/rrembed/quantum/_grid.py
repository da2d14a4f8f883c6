from __future__ import print_function, division, absolute_import

import numpy as np

from ..errors import ConfigurationError
from ..util import PROTON_MASS, Record


class Grid1D(Record):
    """A uniform grid centered at ``x = 0``.

    Points are located at ``x_i = (i - (n_points - 1) / 2) * spacing``, so odd
    grids contain the origin.
    """
    __fields__ = ['n_points', 'spacing']
    __types__ = [int, float]

    def validate(self):
        if self.n_points is None or self.n_points < 5:
            raise ConfigurationError('grid needs at least 5 points for the 4th order stencil, got %s' % self.n_points)

        if self.spacing is None or not self.spacing > 0:
            raise ConfigurationError('grid spacing must be positive, got %s' % self.spacing)

    @property
    def x(self):
        return (np.arange(self.n_points) - 0.5 * (self.n_points - 1)) * self.spacing

    @property
    def length(self):
        return (self.n_points - 1) * self.spacing


class ParticleSpec(Record):
    __fields__ = ['mass', 'charge']
    __types__ = [float, float]

    def validate(self):
        if self.mass is None or not self.mass > 0:
            raise ConfigurationError('particle mass must be positive, got %s' % self.mass)

        if self.charge is None or self.charge == 0:
            raise ConfigurationError('particle charge must be nonzero, got %s' % self.charge)


ELECTRON = ParticleSpec(mass=1.0, charge=-1.0)
PROTON = ParticleSpec(mass=PROTON_MASS, charge=1.0)


class Wavefunction(object):
    """Complex amplitudes on a :class:`Grid1D`, normalized as ``int |psi|^2 dx``."""
    def __init__(self, amplitudes, grid):
        amplitudes = np.asarray(amplitudes, dtype=complex)

        if amplitudes.shape != (grid.n_points,):
            raise ConfigurationError('expected %d amplitudes, got shape %s' % (grid.n_points, amplitudes.shape))

        self.amplitudes = amplitudes
        self.grid = grid

    def __repr__(self):
        return 'Wavefunction(n_points={}, norm={:.12g})'.format(self.grid.n_points, self.norm())

    def copy(self):
        return Wavefunction(self.amplitudes.copy(), self.grid)

    def density(self):
        return np.abs(self.amplitudes) ** 2

    def norm(self):
        return float(self.grid.spacing * np.sum(self.density()))

    def normalize(self):
        norm = self.norm()
        if norm == 0:
            raise ConfigurationError('cannot normalize a vanishing wavefunction')

        return Wavefunction(self.amplitudes / np.sqrt(norm), self.grid)

    @classmethod
    def gaussian(cls, grid, center=0.0, width=1.0, momentum=0.0):
        x = grid.x
        amplitudes = np.exp(-0.5 * ((x - center) / width) ** 2 + 1j * momentum * x)
        return cls(amplitudes, grid).normalize()
