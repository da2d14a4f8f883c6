from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import pandas as pd

from ..errors import ConfigurationError, StabilityError
from ..quantum import Wavefunction, side_populations
from ..util import to_fs

_logger = logging.getLogger(__name__)

norm_tolerance = 1e-6


class DipoleTrace(object):
    """Dipole ``R(t)`` and its derivative at every time step of a trajectory."""
    def __init__(self, times, R, Rdot, final_state=None):
        self.times = np.asarray(times, dtype=float)
        self.R = np.asarray(R, dtype=float)
        self.Rdot = np.asarray(Rdot, dtype=float)
        self.final_state = final_state

    def __len__(self):
        return self.times.shape[0]

    def __repr__(self):
        return 'DipoleTrace(n={})'.format(len(self))

    @property
    def dt(self):
        return float(self.times[1] - self.times[0]) if len(self) > 1 else 0.0

    def to_frame(self):
        return pd.DataFrame(
            {'t_fs': to_fs(self.times), 'R_au': self.R, 'Rdot_au': self.Rdot},
            columns=['t_fs', 'R_au', 'Rdot_au'],
        )


def rr_field(kernel, trace, n):
    """Radiation-reaction field at step ``n`` from the velocity history.

    ``E_rr(t_n) = dt sum_m w_m K(t_n - t_m) Rdot(t_m)`` with trapezoidal end
    weights ``w_0 = w_n = 1/2``.
    """
    if n >= len(kernel):
        raise ConfigurationError('kernel of %d samples is shorter than the elapsed %d steps' % (len(kernel), n + 1))

    return _memory_field(kernel.values, np.asarray(trace.Rdot), n, kernel.dt)


def _memory_field(K, rdot, n, dt):
    if n == 0:
        return 0.0

    return dt * (np.dot(K[n::-1], rdot[:n + 1]) - 0.5 * (K[n] * rdot[0] + K[0] * rdot[n]))


def rk4_step(hamiltonian, psi, t, dt, extra=None):
    k1 = -1j * hamiltonian.apply(psi, t, extra)
    k2 = -1j * hamiltonian.apply(psi + 0.5 * dt * k1, t + 0.5 * dt, extra)
    k3 = -1j * hamiltonian.apply(psi + 0.5 * dt * k2, t + 0.5 * dt, extra)
    k4 = -1j * hamiltonian.apply(psi + dt * k3, t + dt, extra)
    return psi + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)


def propagate(psi0, hamiltonian, kernel, config):
    """Propagate ``psi0`` under ``hamiltonian`` plus the radiation-reaction potential.

    Each step first evaluates the dipole, its trailing difference and the
    memory field ``E_rr`` from the history up to the current time. The field
    enters as ``-q x E_rr`` and is held fixed during the four Runge-Kutta
    stages. A missing or vanishing kernel skips the radiation-reaction term.

    :param Wavefunction psi0: the normalized initial state.
    :param TimeDependentHamiltonian hamiltonian: the emitter Hamiltonian, the
        kick and deformation switch of ``config`` are applied on top.
    :param Optional[MemoryKernel] kernel: sampled at ``config.dt``.
    :param PropagationConfig config:

    :returns: a tuple ``(trace, observables)`` of the full resolution
        :class:`DipoleTrace` and a dataframe of the recorded steps with
        columns ``t, R, Rdot, norm, pop_left, pop_right, E_rr``.

    :raises StabilityError: if the norm drifts by more than ``1e-6``.
    """
    hamiltonian = hamiltonian.configure(kick=config.kick, deform=config.deform)
    grid = hamiltonian.grid
    charge = hamiltonian.particle.charge

    dt = config.dt
    n_steps = config.n_steps
    stride = config.record_stride

    active = kernel is not None and not kernel.is_zero()

    if active:
        if abs(kernel.dt - dt) > 1e-12 * dt:
            raise ConfigurationError('kernel sampled at dt=%g but propagation uses dt=%g' % (kernel.dt, dt))

        if len(kernel) < n_steps:
            raise ConfigurationError('kernel of %d samples is shorter than the %d propagation steps' % (
                len(kernel), n_steps,
            ))

        K = kernel.values

    x = grid.x
    qx = charge * grid.spacing * x

    psi = np.array(psi0.amplitudes, dtype=complex)
    R = np.zeros(n_steps)
    rdot = np.zeros(n_steps)
    field = np.zeros(n_steps)

    recorded = []
    norms = []
    populations = []

    _logger.info('propagating %d steps of dt=%g (radiation reaction %s)', n_steps, dt, 'on' if active else 'off')

    for n in range(n_steps):
        t = n * dt
        density = psi.real ** 2 + psi.imag ** 2
        R[n] = np.dot(qx, density)

        if n:
            rdot[n] = (R[n] - R[n - 1]) / dt

        if active:
            field[n] = _memory_field(K, rdot, n, dt)

        if n % stride == 0 or n == n_steps - 1:
            norm = grid.spacing * np.sum(density)

            if not abs(norm - 1.0) <= norm_tolerance:
                raise StabilityError('norm drifted to %.10g at t=%.6g fs, use a smaller time step' % (
                    norm, to_fs(t),
                ))

            recorded.append(n)
            norms.append(norm)
            populations.append(side_populations(Wavefunction(psi, grid)))

        if n == n_steps - 1:
            break

        extra = -charge * x * field[n] if active else None
        psi = rk4_step(hamiltonian, psi, t, dt, extra)

    times = dt * np.arange(n_steps)
    Rdot = np.gradient(R, dt) if n_steps > 1 else np.zeros(1)

    recorded = np.asarray(recorded)
    populations = np.asarray(populations).reshape(-1, 2)

    observables = pd.DataFrame({
        't': times[recorded],
        'R': R[recorded],
        'Rdot': Rdot[recorded],
        'norm': norms,
        'pop_left': populations[:, 0],
        'pop_right': populations[:, 1],
        'E_rr': field[recorded],
    }, columns=['t', 'R', 'Rdot', 'norm', 'pop_left', 'pop_right', 'E_rr'])

    _logger.info('propagation done, final norm %.12g', norms[-1])
    return DipoleTrace(times, R, Rdot, final_state=Wavefunction(psi, grid)), observables
