from __future__ import print_function, division, absolute_import

from ..errors import ConfigurationError
from ..util import Record


class PropagationConfig(Record):
    """Time stepping of one trajectory.

    ``n_steps`` counts time samples including ``t = 0``, the trajectory ends at
    ``(n_steps - 1) * dt``. ``deform`` switches the time dependence of
    deformable potentials, kicks are always applied.
    """
    __fields__ = ['dt', 'n_steps', 'record_stride', 'kick', 'deform']
    __types__ = [float, int, int, None, bool]
    __defaults__ = {'record_stride': 10, 'deform': True}

    def validate(self):
        if self.dt is None or not self.dt > 0:
            raise ConfigurationError('time step must be positive, got %s' % self.dt)

        if self.n_steps is None or self.n_steps < 1:
            raise ConfigurationError('need at least one time step, got %s' % self.n_steps)

        if self.record_stride < 1:
            raise ConfigurationError('record stride must be >= 1, got %s' % self.record_stride)

    @property
    def duration(self):
        return (self.n_steps - 1) * self.dt
