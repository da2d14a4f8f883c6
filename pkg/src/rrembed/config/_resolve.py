from __future__ import print_function, division, absolute_import

import logging
import numbers
import os.path

from ..errors import ConfigParseError, UnitError
from ..util import to_atomic
from . import ast as a
from ._parser import load_json, load_text, parse_value
from ._schema import RunConfig, choice, experiment_defaults, experiments, optional_sections, schema, sweep_axes

_logger = logging.getLogger(__name__)

required_keys = {
    None: ['experiment'],
    'sweep': ['sweep.axis', 'sweep.values'],
}


def parse_config(path, experiment=None):
    """Read and resolve a config file.

    Files ending in ``.json`` are read as JSON, everything else as the
    sectioned key-value format. Relative file references are resolved
    against the directory of ``path``. A given ``experiment`` replaces the
    tag of the file before defaults are applied.

    :returns: a :class:`RunConfig` in atomic units.
    """
    path = os.path.abspath(path)

    if not os.path.exists(path):
        raise ConfigParseError('config file %s does not exist' % path)

    with open(path) as fobj:
        text = fobj.read()

    raw = load_json(text) if path.endswith('.json') else load_text(text)
    if experiment is not None:
        raw = dict(raw, experiment=experiment)

    _logger.info('resolving config %s', path)
    return resolve(raw, base_path=os.path.dirname(path))


def parse_config_text(text, base_path='.', format='text'):
    raw = load_json(text) if format == 'json' else load_text(text)
    return resolve(raw, base_path=base_path)


def resolve(raw, base_path='.'):
    """Apply defaults, check keys and convert units of a raw config dict."""
    if not raw or 'experiment' not in raw:
        raise ConfigParseError(
            'missing required keys: %s' % ', '.join(required_keys[None]),
            key='experiment', expected='one of %s' % ', '.join(experiments),
        )

    unknown = set(raw) - set(schema) - {'experiment'}
    if unknown:
        raise ConfigParseError('unknown sections: %s' % ', '.join(sorted(unknown)), key=sorted(unknown)[0])

    experiment = convert(choice(*experiments), raw['experiment'], 'experiment', base_path)

    sections = {}
    for name, fields in sorted(schema.items()):
        user = raw.get(name, {})

        if user is None:
            user = {}

        if not isinstance(user, dict):
            raise ConfigParseError('%s must be a section, got %r' % (name, user), key=name, expected='section')

        unknown = set(user) - set(fields)
        if unknown:
            key = '%s.%s' % (name, sorted(unknown)[0])
            raise ConfigParseError('unknown key %s, expected one of %s' % (key, ', '.join(sorted(fields))), key=key)

        sections[name] = {
            key: convert(fields[key], value, '%s.%s' % (name, key), base_path)
            for key, value in user.items()
        }

    target = sections['sweep'].get('target')
    resolved = experiment_defaults(experiment, target)

    for name, user in sections.items():
        if name in optional_sections and name in raw and 'enabled' not in user:
            user = dict(user, enabled=True)

        if name == 'cavity' and 'volume' in user and 'g_ratio' not in user:
            user = dict(user, g_ratio=None)

        resolved[name].update(user)

    if experiment == 'sweep':
        _check_required(resolved, required_keys['sweep'])

    if resolved['sweep']['values'] is not None:
        _check_required(resolved, ['sweep.axis'])

        _, kind = sweep_axes[resolved['sweep']['axis']]
        resolved['sweep']['values'] = [
            convert(kind, value, 'sweep.values', base_path) for value in resolved['sweep']['values']
        ]

        if not resolved['sweep']['values']:
            raise ConfigParseError('sweep.values needs at least one value', key='sweep.values', expected='list')

    _check_consistency(resolved)
    return RunConfig(experiment=experiment, **resolved)


def _check_required(resolved, keys):
    missing = [key for key in keys if _lookup(resolved, key) is None]

    if missing:
        raise ConfigParseError('missing required keys: %s' % ', '.join(missing), key=missing[0])


def _lookup(resolved, key):
    section, _, name = key.partition('.')
    return resolved[section].get(name)


def _check_consistency(resolved):
    particle = resolved['particle']
    if particle['kind'] == 'custom' and (particle['mass'] is None or particle['charge'] is None):
        raise ConfigParseError('custom particles need mass and charge', key='particle.mass', expected='float')

    if resolved['potential']['kind'] == 'sampled' and resolved['potential']['file'] is None:
        raise ConfigParseError('sampled potentials need a file', key='potential.file', expected='existing file')

    ensemble = resolved['ensemble']
    if ensemble['enabled'] and ensemble['model'] == 'tabulated' and ensemble['table'] is None:
        raise ConfigParseError('tabulated ensembles need a table', key='ensemble.table', expected='existing file')

    cavity = resolved['cavity']
    if cavity['volume'] is not None and cavity['g_ratio'] is not None:
        raise ConfigParseError(
            'give either cavity.volume or cavity.g_ratio, not both', key='cavity.volume', expected='one of two',
        )


def convert(field, value, key, base_path='.'):
    """Convert a raw value according to its schema field."""
    if value is None:
        return None

    if field.kind in dimensions:
        return _convert_dimension(field.kind, value, key)

    elif field.kind in _simple:
        return _simple[field.kind](value, field, key, base_path)

    raise ConfigParseError('unknown kind %s of key %s' % (field.kind, key), key=key)


dimensions = ('energy', 'time', 'length', 'volume')


def _convert_dimension(dimension, value, key):
    if isinstance(value, str):
        value = _parse_embedded(value, key, dimension)

    if isinstance(value, a.Quantity):
        try:
            return to_atomic(value.value, value.unit, dimension)

        except UnitError as exc:
            raise UnitError('%s: %s' % (key, exc))

    return _number(value, key, dimension)


def _parse_embedded(value, key, expected):
    try:
        return parse_value(value)

    except Exception:
        raise ConfigParseError('%s: cannot parse %r as %s' % (key, value, expected), key=key, expected=expected)


def _number(value, key, expected='float'):
    if isinstance(value, a.Quantity):
        raise UnitError('%s: expected a plain number, got unit %s' % (key, value.unit))

    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ConfigParseError('%s: expected %s, got %r' % (key, expected, value), key=key, expected=expected)

    return float(value)


def _convert_float(value, field, key, base_path):
    if isinstance(value, str):
        value = _parse_embedded(value, key, 'float')

    return _number(value, key)


def _convert_int(value, field, key, base_path):
    if isinstance(value, str):
        value = _parse_embedded(value, key, 'int')

    number = _number(value, key, 'int')
    if number != int(number):
        raise ConfigParseError('%s: expected int, got %r' % (key, value), key=key, expected='int')

    return int(number)


def _convert_bool(value, field, key, base_path):
    if not isinstance(value, bool):
        raise ConfigParseError('%s: expected bool, got %r' % (key, value), key=key, expected='bool')

    return value


def _convert_choice(value, field, key, base_path):
    if value not in field.choices:
        raise ConfigParseError(
            '%s: expected one of %s, got %r' % (key, ', '.join(field.choices), value),
            key=key, expected='one of %s' % ', '.join(field.choices),
        )

    return value


def _convert_path(value, field, key, base_path):
    if not isinstance(value, str):
        raise ConfigParseError('%s: expected a file name, got %r' % (key, value), key=key, expected='existing file')

    path = os.path.abspath(os.path.join(base_path, value))
    if not os.path.exists(path):
        raise ConfigParseError('%s: file %s does not exist' % (key, path), key=key, expected='existing file')

    return path


def _convert_int_list(value, field, key, base_path):
    return [_convert_int(item, field, key, base_path) for item in _as_list(value, key)]


def _convert_list(value, field, key, base_path):
    return list(_as_list(value, key))


def _as_list(value, key):
    if not isinstance(value, (list, tuple)):
        raise ConfigParseError('%s: expected a list, got %r' % (key, value), key=key, expected='list')

    return value


_simple = {
    'float': _convert_float,
    'int': _convert_int,
    'bool': _convert_bool,
    'choice': _convert_choice,
    'path': _convert_path,
    'int_list': _convert_int_list,
    'list': _convert_list,
}
