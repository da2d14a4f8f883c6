"""Keys, kinds and per-experiment defaults of run configurations.

Dimensioned kinds (``energy``, ``time``, ``length``, ``volume``) accept plain
numbers in atomic units or quantities with a unit suffix.
"""
from __future__ import print_function, division, absolute_import

import copy
import json

import numpy as np

from ..errors import ConfigParseError
from ..util import Record, ev, fs


class Field(Record):
    __fields__ = ['kind', 'choices']
    __types__ = [str, tuple]


def choice(*choices):
    return Field('choice', choices)


energy = Field('energy')
time = Field('time')
length = Field('length')
volume = Field('volume')
real = Field('float')
integer = Field('int')
flag = Field('bool')
path = Field('path')
int_list = Field('int_list')
value_list = Field('list')

experiments = ('spectrum', 'react', 'sweep', 'hopfield', 'kernel', 'surface')

#: sections that can be switched off with ``enabled = false``
optional_sections = ('kick', 'cavity', 'ensemble')

schema = {
    'grid': {
        'n_points': integer,
        'spacing': length,
    },
    'particle': {
        'kind': choice('electron', 'proton', 'custom'),
        'mass': real,
        'charge': real,
    },
    'potential': {
        'kind': choice('soft_coulomb', 'tilted_double_well', 'sampled'),
        'softening': real,
        'c1': energy,
        'c2': energy,
        'c4': energy,
        'amplitude': real,
        't0': time,
        'tau': time,
        'fast': flag,
        'file': path,
    },
    'kick': {
        'enabled': flag,
        'strength': real,
        'center': time,
        'width': time,
    },
    'cavity': {
        'enabled': flag,
        'omega_c': energy,
        'detuning': energy,
        'eta': energy,
        'eta_ratio': real,
        'g_ratio': real,
        'volume': volume,
        'n_modes': integer,
    },
    'ensemble': {
        'enabled': flag,
        'model': choice('drude_lorentz', 'tabulated'),
        'omega_p': energy,
        'omega_0': energy,
        'gamma': energy,
        'gamma_ratio': real,
        'N_ensemble': integer,
        'volume_ratio': real,
        'local_field': flag,
        'table': path,
        'volume_E': volume,
        'dilute': flag,
    },
    'propagation': {
        'dt': time,
        'n_steps': integer,
        'record_stride': integer,
        'deform': flag,
        'oversampling': integer,
        'kernel_method': choice('derivative', 'direct'),
    },
    'spectrum': {
        'window': energy,
        'omega_min': energy,
        'omega_max': energy,
        'n_omega': integer,
        'check_linearity': flag,
        'transform': choice('fft', 'direct'),
    },
    'reactivity': {
        'N_values': int_list,
    },
    'sweep': {
        'axis': choice('N_ensemble', 'detuning', 'gamma_e', 'g0', 'deformation_speed'),
        'values': value_list,
        'target': choice('react', 'spectrum'),
        'deformation_delay': real,
    },
    'hopfield': {
        'omega_c': energy,
        'omega_E': energy,
        'omega_m': energy,
        'g': energy,
        'g_m': energy,
        'N': integer,
        'N_values': int_list,
        'dense_limit': integer,
    },
    'output': {
        'plot_scripts': flag,
        'traces': flag,
        'export_green': flag,
        'jobs': integer,
        'scheduler': choice('processes', 'threads', 'synchronous'),
    },
}

#: sweep axis -> (config key, kind of the swept values)
sweep_axes = {
    'N_ensemble': ('ensemble.N_ensemble', integer),
    'detuning': ('cavity.detuning', energy),
    'gamma_e': ('ensemble.gamma_ratio', real),
    'g0': ('cavity.g_ratio', real),
    'deformation_speed': ('potential.tau', time),
}

_common = {
    'output': {
        'plot_scripts': False,
        'traces': True,
        'export_green': False,
        'jobs': 0,
        'scheduler': 'processes',
    },
    'reactivity': {'N_values': None},
    'sweep': {'axis': None, 'values': None, 'target': 'react', 'deformation_delay': 6.0},
    'hopfield': {
        'omega_c': ev(11.7),
        'omega_E': ev(11.7),
        'omega_m': ev(10.746),
        'g': ev(0.011),
        'g_m': ev(0.011),
        'N': 1,
        'N_values': list(range(0, 10001, 250)),
        'dense_limit': 2002,
    },
    'spectrum': {
        'window': ev(0.05),
        'omega_min': 0.0,
        'omega_max': ev(20.0),
        'n_omega': 4001,
        'check_linearity': False,
        'transform': 'fft',
    },
}

_double_well = {
    'kind': 'tilted_double_well',
    'softening': 1.0,
    'c1': 1e-3,
    'c2': 1.25e-3,
    'c4': 1e-4,
    'amplitude': 0.4,
    't0': fs(60.0),
    'tau': fs(10.0),
    'fast': False,
    'file': None,
}

_spectrum_defaults = {
    'grid': {'n_points': 301, 'spacing': 0.1},
    'particle': {'kind': 'electron', 'mass': None, 'charge': None},
    'potential': dict(_double_well, kind='soft_coulomb'),
    'kick': {'enabled': True, 'strength': 1e-4, 'center': 1.0, 'width': 1e-2},
    'cavity': {
        'enabled': False,
        'omega_c': None,
        'detuning': 0.0,
        'eta': None,
        'eta_ratio': 1e-2,
        'g_ratio': 0.0563,
        'volume': None,
        'n_modes': 1,
    },
    'ensemble': {
        'enabled': False,
        'model': 'drude_lorentz',
        'omega_p': ev(3 * np.sqrt(10) / 200),
        'omega_0': None,
        'gamma': None,
        'gamma_ratio': 0.1,
        'N_ensemble': 0,
        'volume_ratio': 1.0,
        'local_field': False,
        'table': None,
        'volume_E': None,
        'dilute': True,
    },
    'propagation': {
        'dt': 0.01,
        'n_steps': 800001,
        'record_stride': 10,
        'deform': False,
        'oversampling': 10,
        'kernel_method': 'derivative',
    },
}

_react_defaults = {
    'grid': {'n_points': 301, 'spacing': 0.04},
    'particle': {'kind': 'proton', 'mass': None, 'charge': None},
    'potential': dict(_double_well),
    'kick': dict(_spectrum_defaults['kick'], enabled=False),
    'cavity': dict(_spectrum_defaults['cavity'], enabled=True, g_ratio=0.0135, eta_ratio=1e-4),
    'ensemble': dict(_spectrum_defaults['ensemble'], enabled=True, omega_p=ev(6.387e-4)),
    'propagation': {
        'dt': 0.5,
        'n_steps': 100001,
        'record_stride': 10,
        'deform': True,
        'oversampling': 2000,
        'kernel_method': 'derivative',
    },
}

defaults = {
    'spectrum': _spectrum_defaults,
    'react': _react_defaults,
    'surface': _react_defaults,
    'hopfield': _react_defaults,
    'kernel': dict(
        _react_defaults,
        propagation=dict(_react_defaults['propagation'], oversampling=150),
        output=dict(_common['output'], export_green=True),
    ),
}


def experiment_defaults(experiment, target=None):
    """Complete default sections of an experiment, ``target`` selects the sweep family."""
    family = (target or 'react') if experiment == 'sweep' else experiment
    sections = copy.deepcopy(_common)
    sections.update(copy.deepcopy(defaults[family]))
    return sections


class RunConfig(Record):
    """Fully resolved run configuration, all values in atomic units."""
    __fields__ = ['experiment'] + sorted(schema)
    __hash__ = None

    def to_dict(self):
        return {k: copy.deepcopy(v) for k, v in self.items()}

    def to_json(self, **kwargs):
        kwargs.setdefault('indent', 2)
        kwargs.setdefault('sort_keys', True)
        return json.dumps(self.to_dict(), **kwargs)

    def get(self, key):
        section, name = _split_key(key)
        return getattr(self, section)[name]

    def set(self, key, value):
        """A copy with the dotted ``key`` replaced."""
        section, name = _split_key(key)
        updated = dict(getattr(self, section))
        updated[name] = value
        return self.update(**{section: updated})


def _split_key(key):
    section, _, name = key.partition('.')

    if section not in schema or name not in schema[section]:
        raise ConfigParseError('unknown config key %s' % key, key=key)

    return section, name
