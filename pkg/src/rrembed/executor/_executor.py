"""Run experiments described by a :class:`rrembed.config.RunConfig`.

Every experiment produces a mapping of table names to dataframes. The
executor writes them together with a provenance record of the resolved
configuration.
"""
from __future__ import print_function, division, absolute_import

import logging
import time

import numpy as np
import pandas as pd

from ..errors import ConfigurationError
from ..experiments import (
    build_cavity,
    build_ensemble,
    build_spectral_grid,
    build_system,
    reactivity_from_config,
    run_surface,
    spectrum_from_config,
    sweep,
)
from ..environment import radiation_reaction_kernel
from ..hopfield import HopfieldSpec, bright_dark_reduce, build_arrowhead, hopfield_sweep, polariton_weights
from ..util import _monadic as m, to_ev, to_fs
from ._output import write_error, write_outputs

_logger = logging.getLogger(__name__)


class Executor(object):
    """A persistent executor, reusing the emitter eigensolution across runs.

    :param RunConfig config:
        the resolved configuration.

    :param Optional[str] out:
        directory of the written tables, nothing is written if missing.

    :param model:
        the model evaluating sweep points, see :func:`get_model`. Defaults to
        the ``output.jobs`` and ``output.scheduler`` keys of ``config``.
    """
    def __init__(self, config, out=None, model=None):
        self.config = config
        self.out = out
        self.model = get_model(
            model if model is not None else _default_model(config),
            jobs=config.output['jobs'] or None,
            scheduler=config.output['scheduler'],
        )

        self._system = None
        self.warnings = []

    def __repr__(self):
        return 'Executor(experiment={!r}, out={!r}, model={!r})'.format(self.config.experiment, self.out, self.model)

    @property
    def system(self):
        if self._system is None:
            self._system = build_system(self.config)

        return self._system

    def run(self):
        """Run the configured experiment and return its tables."""
        _logger.info('running %s', self.config.experiment)
        return run_experiment(self.config.experiment, self)

    def execute(self):
        """Run and write tables plus provenance into ``out``."""
        start = time.time()

        try:
            tables = self.run()

        except Exception as exc:
            if self.out is not None:
                write_error(exc, self.out)
            raise

        wall_time = time.time() - start
        _logger.info('%s finished in %.1f s', self.config.experiment, wall_time)

        if self.out is not None:
            write_outputs(
                tables, self.out, self.config, wall_time=wall_time, warnings=self.warnings,
                plot_scripts=self.config.output['plot_scripts'],
            )

        return tables


def execute(config, out=None, model=None):
    """Shortcut for ``Executor(config, out, model).execute()``."""
    return Executor(config, out=out, model=model).execute()


class Model(object):
    """Evaluates independent sweep points, results in input order."""
    name = None

    def map(self, func, items):
        raise NotImplementedError()

    def __repr__(self):
        return '{}()'.format(type(self).__name__)


def _default_model(config):
    return 'serial' if config.output['jobs'] == 1 else 'dask'


def get_model(model, jobs=None, scheduler='processes'):
    if not isinstance(model, str):
        return model

    if model == 'serial':
        from ._serial import SerialModel
        return SerialModel()

    elif model == 'dask':
        try:
            from ._dask import DaskModel

        except ImportError:
            _logger.warning('dask is not installed, evaluating sweep points serially')
            from ._serial import SerialModel
            return SerialModel()

        return DaskModel(scheduler=scheduler, num_workers=jobs)

    else:
        raise ConfigurationError('unknown model: {}'.format(model))


run_experiment = m.RuleSet(name='run_experiment')


@run_experiment.rule(m.eq('spectrum'))
def run_experiment_spectrum(run_experiment, experiment, executor):
    config = executor.config
    result = spectrum_from_config(config, system=executor.system)
    executor.warnings.extend(result.warnings)

    tables = {'spectrum': result.to_frame()}

    if config.output['traces']:
        tables['trace'] = trace_frame(result.observables)

    if config.output['export_green'] and result.green is not None:
        tables['green'] = green_frame(result.green)

    return tables


@run_experiment.rule(m.eq('react'))
def run_experiment_react(run_experiment, experiment, executor):
    config = executor.config
    result = reactivity_from_config(config, system=executor.system, N_values=config.reactivity['N_values'])

    tables = {'reactivity': result.to_frame()}

    if config.output['traces']:
        tables['populations'] = result.traces_frame()

    return tables


@run_experiment.rule(m.eq('sweep'))
def run_experiment_sweep(run_experiment, experiment, executor):
    config = executor.config
    df = sweep(config.sweep['axis'], config.sweep['values'], config, model=executor.model)

    failed = df['error'].astype(bool)
    if failed.any():
        message = '%d of %d sweep rows failed' % (failed.sum(), len(df))
        _logger.warning(message)
        executor.warnings.append(message)

    return {'sweep': df}


@run_experiment.rule(m.eq('hopfield'))
def run_experiment_hopfield(run_experiment, experiment, executor):
    section = executor.config.hopfield
    spec = HopfieldSpec(**{k: section[k] for k in ('omega_c', 'omega_E', 'omega_m', 'g', 'g_m', 'N')})

    if spec.N + 2 <= section['dense_limit'] or spec.N == 0:
        states = polariton_weights(build_arrowhead(spec), layout='arrowhead')

    else:
        _logger.info('N = %d exceeds the dense limit, listing the bright states only', spec.N)
        states = polariton_weights(bright_dark_reduce(spec)[0], layout='bright')

    states['energy'] = to_ev(states['energy'])
    states = states.rename(columns={'energy': 'energy_eV'})

    return {
        'hopfield': hopfield_sweep(spec, section['N_values']),
        'eigenstates': states,
    }


@run_experiment.rule(m.eq('kernel'))
def run_experiment_kernel(run_experiment, experiment, executor):
    config = executor.config
    cavity = build_cavity(config, executor.system)

    if cavity is None:
        raise ConfigurationError('the kernel experiment needs an enabled cavity with nonzero coupling')

    kernel, green = radiation_reaction_kernel(
        cavity, build_ensemble(config, cavity), build_spectral_grid(config),
        method=config.propagation['kernel_method'],
    )

    tables = {'kernel': kernel.to_frame()}

    if config.output['export_green']:
        tables['green'] = green_frame(green)

    return tables


@run_experiment.rule(m.eq('surface'))
def run_experiment_surface(run_experiment, experiment, executor):
    propagation = executor.config.propagation
    t_after = (propagation['n_steps'] - 1) * propagation['dt']
    potential, levels = run_surface(executor.system, t_after)
    return {'surface': potential, 'levels': levels}


#: exported green functions cover this many cavity harmonics
green_export_range = 3.0


def green_frame(green, omega_max=None):
    """Green function table restricted to the frequencies around the cavity modes."""
    if omega_max is None:
        cavity = green.cavity
        omega_max = green_export_range * cavity.n_modes * cavity.omega_c

    return green.to_frame(omega_max=omega_max)


def trace_frame(observables):
    """Recorded observables of a propagation with units in the column names."""
    return pd.DataFrame({
        't_fs': to_fs(observables['t'].to_numpy()),
        'R_au': observables['R'].to_numpy(),
        'Rdot_au': observables['Rdot'].to_numpy(),
        'norm': observables['norm'].to_numpy(),
        'pop_left': observables['pop_left'].to_numpy(),
        'pop_right': observables['pop_right'].to_numpy(),
        'E_rr_au': np.asarray(observables['E_rr'].to_numpy(), dtype=float),
    }, columns=['t_fs', 'R_au', 'Rdot_au', 'norm', 'pop_left', 'pop_right', 'E_rr_au'])
