"""Parameter sweeps over reactivity or spectrum runs."""
from __future__ import print_function, division, absolute_import

import functools
import logging

import pandas as pd

from ..config import sweep_axes
from ..errors import ConfigurationError, Error
from ._reactivity import run_reactivity, run_reference
from ._setup import (
    build_cavity,
    build_ensemble,
    build_omega,
    build_propagation,
    build_system,
)
from ._spectrum import run_spectrum

_logger = logging.getLogger(__name__)


def spectrum_from_config(config, system=None):
    system = build_system(config) if system is None else system
    cavity = build_cavity(config, system)

    return run_spectrum(
        system,
        build_propagation(config),
        cavity=cavity,
        chi=build_ensemble(config, cavity),
        omega=build_omega(config),
        oversampling=config.propagation['oversampling'],
        window=config.spectrum['window'],
        transform=config.spectrum['transform'],
        check_linearity=config.spectrum['check_linearity'],
        kernel_method=config.propagation['kernel_method'],
    )


def reactivity_from_config(config, system=None, reference=None, N_values=None):
    system = build_system(config) if system is None else system
    cavity = build_cavity(config, system)

    return run_reactivity(
        system,
        build_propagation(config),
        cavity=cavity,
        chi=build_ensemble(config, cavity),
        oversampling=config.propagation['oversampling'],
        N_values=N_values,
        reference=reference,
        kernel_method=config.propagation['kernel_method'],
    )


def apply_axis(config, axis, value):
    """The config of a single sweep point.

    A deformation speed sweep moves the deformation centre along with its
    width, ``t0 = sweep.deformation_delay * tau``, and switches off the fast
    variant.
    """
    if axis not in sweep_axes:
        raise ConfigurationError('unknown sweep axis %s, expected one of %s' % (axis, ', '.join(sorted(sweep_axes))))

    key, _ = sweep_axes[axis]
    config = config.set(key, value)

    if axis == 'deformation_speed':
        config = config.set('potential.t0', config.sweep['deformation_delay'] * value)
        config = config.set('potential.fast', False)

    return config


def run_point(config, reference=None):
    """Tabular result of one sweep point, columns depend on ``sweep.target``."""
    if config.sweep['target'] == 'spectrum':
        return spectrum_from_config(config).to_frame()

    return reactivity_from_config(config, reference=reference).to_frame()


def sweep_point(value, base_config, axis, reference=None):
    """Run one point, errors are reported in the ``error`` column."""
    _logger.info('sweep %s = %r', axis, value)

    try:
        df = run_point(apply_axis(base_config, axis, value), reference=reference)
        df['error'] = ''

    except Exception as exc:
        _logger.warning('sweep point %s = %r failed: %s', axis, value, exc, exc_info=not isinstance(exc, Error))
        df = pd.DataFrame({'error': ['%s: %s' % (type(exc).__name__, exc)]})

    df.insert(0, axis, [value] * len(df))
    return df


def shares_reference(axis, base_config):
    return base_config.sweep['target'] == 'react' and axis != 'deformation_speed'


def sweep(axis, values, base_config, model=None):
    """Run :func:`run_point` for every value and merge the results in value order.

    Reactivity sweeps that leave the emitter untouched compute the uncoupled
    reference once and share it with every point.

    :param model: an object with a ``map(func, items)`` method, such as the
        executor models; serial evaluation when missing.
    """
    values = list(values)
    if not values:
        raise ConfigurationError('sweep needs at least one value')

    reference = None
    if shares_reference(axis, base_config):
        reference = run_reference(build_system(base_config), build_propagation(base_config))

    func = functools.partial(sweep_point, base_config=base_config, axis=axis, reference=reference)
    parts = model.map(func, values) if model is not None else [func(value) for value in values]

    df = pd.concat(parts, ignore_index=True, sort=False)
    columns = [c for c in df.columns if c != 'error'] + ['error']
    return df[columns]
