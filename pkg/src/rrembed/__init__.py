"""Quantum emitter dynamics in a cavity dressed by a molecular ensemble."""
from __future__ import print_function, division, absolute_import

__version__ = '0.1.0'

from .config import RunConfig, parse_config  # noqa: E402
from .executor import Executor, execute  # noqa: E402

__all__ = ['Executor', 'RunConfig', 'execute', 'parse_config']
