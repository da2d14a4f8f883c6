from __future__ import print_function, division, absolute_import

from ._executor import Executor, Model, execute, get_model, green_frame, run_experiment, trace_frame
from ._output import versions, write_error, write_outputs
from ._serial import SerialModel


__all__ = [
    'Executor',
    'Model',
    'SerialModel',
    'execute',
    'get_model',
    'green_frame',
    'run_experiment',
    'trace_frame',
    'versions',
    'write_error',
    'write_outputs',
]
