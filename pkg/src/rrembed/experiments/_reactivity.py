"""Cavity influence on the proton tunneling of a deforming double well."""
from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import pandas as pd
import scipy.integrate

from ..environment import SpectralGrid, radiation_reaction_kernel
from ..errors import ConfigurationError, SetupError
from ..propagation import propagate
from ..quantum import side_populations
from ..util import to_fs

_logger = logging.getLogger(__name__)

#: minimal left population of the initial state
localization_threshold = 0.9


class ReactivityResult(object):
    """CR per ensemble size together with the population traces of every run."""
    def __init__(self, N_values, cr_coupled, cr_reference, traces, reference):
        self.N_values = np.asarray(N_values, dtype=int)
        self.cr_coupled = np.asarray(cr_coupled, dtype=float)
        self.cr_reference = float(cr_reference)
        self.traces = traces
        self.reference = reference

    def __repr__(self):
        return 'ReactivityResult(N_values={!r}, CR={!r})'.format(list(self.N_values), list(self.CR))

    @property
    def CR(self):
        return self.cr_coupled - self.cr_reference

    def to_frame(self):
        return pd.DataFrame({
            'N': self.N_values,
            'CR': self.CR,
            'cr_coupled': self.cr_coupled,
            'cr_reference': np.full(self.N_values.shape, self.cr_reference),
        }, columns=['N', 'CR', 'cr_coupled', 'cr_reference'])

    def traces_frame(self):
        """Tidy ``(run, N, t_fs, pop_left, pop_right, delta_pop)`` table, the uncoupled run first."""
        parts = [_population_frame('reference', 0, self.reference)]
        parts.extend(_population_frame('coupled', N, self.traces[N]) for N in self.N_values)
        return pd.concat(parts, ignore_index=True)


def _population_frame(run, N, observables):
    df = pd.DataFrame({
        't_fs': to_fs(observables['t'].to_numpy()),
        'pop_left': observables['pop_left'].to_numpy(),
        'pop_right': observables['pop_right'].to_numpy(),
    }, columns=['t_fs', 'pop_left', 'pop_right'])

    df['delta_pop'] = df['pop_left'] - df['pop_right']
    df.insert(0, 'N', int(N))
    df.insert(0, 'run', run)
    return df


def crossed_fraction(observables):
    """Time average of ``1 - (pop_left - pop_right)`` over the recorded samples."""
    t = observables['t'].to_numpy()
    crossed = 1.0 - (observables['pop_left'].to_numpy() - observables['pop_right'].to_numpy())

    if t.shape[0] < 2:
        return float(crossed[0])

    return float(scipy.integrate.trapezoid(crossed, t) / (t[-1] - t[0]))


def check_localized(system):
    left, _ = side_populations(system.ground)

    if left < localization_threshold:
        raise SetupError('initial state is not localized in the left well: pop_left = %.4f < %.2f' % (
            left, localization_threshold,
        ))

    return left


def run_reference(system, propagation):
    """Observables of the trajectory without radiation reaction."""
    check_localized(system)
    _, observables = propagate(system.ground, system.hamiltonian, None, propagation)
    return observables


def run_reactivity(
    system, propagation, cavity=None, chi=None, oversampling=2000, N_values=None, reference=None,
    kernel_method='derivative',
):
    """CR of coupled runs relative to the uncoupled reference.

    Every ensemble size in ``N_values`` shares the uncoupled reference
    trajectory. The bare Green function is rebuilt and dressed in place for
    each size, so a single full length spectrum is alive at a time. Its
    resolution is checked once. Without a cavity the coupled run is the
    reference and CR vanishes identically.

    :param reference: observables of a previous :func:`run_reference` with the
        same system and propagation, recomputed when missing.

    :raises SetupError: if the initial state is not left localized.
    """
    check_localized(system)

    if N_values is None:
        N_values = [chi.N_ensemble if chi is not None else 0]

    N_values = [int(N) for N in N_values]
    if chi is None and any(N_values):
        raise ConfigurationError('ensemble sizes %s need an ensemble model' % N_values)

    if reference is None:
        reference = run_reference(system, propagation)

    cr_reference = crossed_fraction(reference)

    sgrid = SpectralGrid(propagation.dt, propagation.n_steps, oversampling)

    traces = {}
    cr_coupled = []

    for i, N in enumerate(N_values):
        if cavity is None:
            observables = reference

        else:
            chi_N = chi.update(N_ensemble=N) if chi is not None else None
            kernel, _ = radiation_reaction_kernel(
                cavity, chi_N, sgrid, method=kernel_method, check=i == 0,
            )
            _, observables = propagate(system.ground, system.hamiltonian, kernel, propagation)

        traces[N] = observables
        cr_coupled.append(crossed_fraction(observables))
        _logger.info('N_ensemble = %d: CR = %.6g', N, cr_coupled[-1] - cr_reference)

    return ReactivityResult(N_values, cr_coupled, cr_reference, traces, reference)
