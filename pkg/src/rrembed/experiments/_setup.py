"""Build the simulation objects of an experiment from a resolved config."""
from __future__ import print_function, division, absolute_import

import logging

import numpy as np

from ..environment import CavitySpec, DrudeLorentz, SpectralGrid, chi_from_polarizability, read_polarizability
from ..errors import ConfigurationError
from ..potentials import DeltaKick, Sampled, SoftCoulomb, TiltedDoubleWell, fast_deformation_variant
from ..propagation import PropagationConfig, TimeDependentHamiltonian
from ..quantum import ELECTRON, PROTON, Grid1D, ParticleSpec, solve_eigenstates, transition_dipole
from ..util import read_table, to_ev

_logger = logging.getLogger(__name__)


class EmitterSystem(object):
    """The explicit emitter with its static eigenstates at ``t = 0``."""
    def __init__(self, grid, particle, potential, n_states=2):
        self.grid = grid
        self.particle = particle
        self.potential = potential
        self.hamiltonian = TimeDependentHamiltonian(grid, particle, [potential])
        self.eigen = solve_eigenstates(self.hamiltonian.matrix(0.0), n_states, grid)

        _logger.info(
            'emitter on %d points: E0 = %.8g Ha, excitation %.6g eV, |d01| = %.6g',
            grid.n_points, self.eigen.energies[0], to_ev(self.omega01), self.d01,
        )

    def __repr__(self):
        return 'EmitterSystem({!r}, {!r}, {!r})'.format(self.grid, self.particle, self.potential)

    @property
    def ground(self):
        return self.eigen.ground

    @property
    def omega01(self):
        return self.eigen.gap(0, 1)

    @property
    def d01(self):
        return abs(transition_dipole(self.eigen.states[0], self.eigen.states[1], self.particle))


def build_grid(config):
    return Grid1D(config.grid['n_points'], config.grid['spacing'])


def build_particle(config):
    section = config.particle
    base = {'electron': ELECTRON, 'proton': PROTON, 'custom': None}[section['kind']]

    overrides = {k: section[k] for k in ('mass', 'charge') if section[k] is not None}
    if base is None:
        return ParticleSpec(**overrides)

    return base.update(**overrides) if overrides else base


def build_potential(config, grid=None):
    section = config.potential
    kind = section['kind']

    if kind == 'soft_coulomb':
        return SoftCoulomb(softening=section['softening'])

    elif kind == 'tilted_double_well':
        spec = TiltedDoubleWell(**{k: section[k] for k in ('c1', 'c2', 'c4', 'amplitude', 't0', 'tau')})
        return fast_deformation_variant(spec) if section['fast'] else spec

    elif kind == 'sampled':
        df, _ = read_table(section['file'], columns=['v'])
        spec = Sampled(df['v'].to_numpy(dtype=float))

        if grid is not None and len(spec.values) != grid.n_points:
            raise ConfigurationError('%s has %d values but the grid has %d points' % (
                section['file'], len(spec.values), grid.n_points,
            ))

        return spec

    raise ConfigurationError('unknown potential %s' % kind)


def build_system(config, n_states=2):
    grid = build_grid(config)
    return EmitterSystem(grid, build_particle(config), build_potential(config, grid), n_states=n_states)


def build_cavity(config, system):
    """Cavity of the config or ``None`` when disabled or uncoupled.

    Without an explicit ``omega_c`` the cavity is aligned to the first
    excitation of the emitter. The mode volume follows from ``g_ratio``
    at the aligned frequency, so detuning keeps the volume fixed.
    """
    section = config.cavity

    if not section['enabled'] or section['g_ratio'] == 0:
        return None

    omega_ref = section['omega_c'] if section['omega_c'] is not None else system.omega01
    omega_c = omega_ref + section['detuning']
    eta = section['eta'] if section['eta'] is not None else section['eta_ratio'] * omega_c

    if section['volume'] is not None:
        return CavitySpec(omega_c=omega_c, eta=eta, volume=section['volume'], n_modes=section['n_modes'])

    return CavitySpec.from_coupling(
        omega_c, eta, section['g_ratio'], system.d01, omega_ref=omega_ref, n_modes=section['n_modes'],
    )


def build_ensemble(config, cavity):
    """Ensemble susceptibility model, ``None`` without ensemble or cavity."""
    section = config.ensemble

    if not section['enabled'] or cavity is None:
        return None

    if section['model'] == 'drude_lorentz':
        omega_0 = section['omega_0'] if section['omega_0'] is not None else cavity.omega_c
        gamma = section['gamma'] if section['gamma'] is not None else section['gamma_ratio'] * omega_0

        return DrudeLorentz(
            omega_p=section['omega_p'],
            omega_0=omega_0,
            gamma=gamma,
            N_ensemble=section['N_ensemble'],
            volume_ratio=section['volume_ratio'],
            local_field=section['local_field'],
            volume=cavity.volume,
        )

    omega, alpha = read_polarizability(section['table'])
    volume_E = section['volume_E'] if section['volume_E'] is not None else section['volume_ratio'] * cavity.volume
    return chi_from_polarizability(omega, alpha, section['N_ensemble'], volume_E, dilute=section['dilute'])


def build_kick(config):
    section = config.kick

    if not section['enabled']:
        return None

    return DeltaKick(strength=section['strength'], center=section['center'], width=section['width'])


def build_propagation(config):
    section = config.propagation
    return PropagationConfig(
        dt=section['dt'],
        n_steps=section['n_steps'],
        record_stride=section['record_stride'],
        kick=build_kick(config),
        deform=section['deform'],
    )


def build_spectral_grid(config):
    section = config.propagation
    return SpectralGrid(section['dt'], section['n_steps'], section['oversampling'])


def build_omega(config):
    section = config.spectrum
    return np.linspace(section['omega_min'], section['omega_max'], section['n_omega'])
