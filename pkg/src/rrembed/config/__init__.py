"""Run configuration: parsing, defaults and unit resolution."""
from __future__ import print_function, division, absolute_import

from . import ast
from ._parser import load_json, load_text, parse, parse_value, tokenize
from ._resolve import convert, parse_config, parse_config_text, resolve
from ._schema import RunConfig, experiment_defaults, experiments, schema, sweep_axes

__all__ = [
    'RunConfig',
    'ast',
    'convert',
    'experiment_defaults',
    'experiments',
    'load_json',
    'load_text',
    'parse',
    'parse_config',
    'parse_config_text',
    'parse_value',
    'resolve',
    'schema',
    'sweep_axes',
    'tokenize',
]
