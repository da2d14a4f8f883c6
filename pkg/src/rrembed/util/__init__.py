from __future__ import print_function, division, absolute_import

from ._fourier import block_size, blocks, derivative, exponential_window, forward, half_axis, inverse, transform_at
from ._record import Record, diff
from ._tables import read_table, write_table
from ._units import (
    AU_TIME_FS,
    BOHR_ANGSTROM,
    EPSILON_0,
    FS_AU,
    HARTREE_EV,
    MU_0,
    PROTON_MASS,
    SPEED_OF_LIGHT,

    ev,
    fs,
    to_atomic,
    to_ev,
    to_fs,
)

__all__ = [
    'AU_TIME_FS',
    'BOHR_ANGSTROM',
    'EPSILON_0',
    'FS_AU',
    'HARTREE_EV',
    'MU_0',
    'PROTON_MASS',
    'Record',
    'SPEED_OF_LIGHT',
    'block_size',
    'blocks',
    'derivative',
    'diff',
    'ev',
    'exponential_window',
    'forward',
    'fs',
    'half_axis',
    'inverse',
    'read_table',
    'to_atomic',
    'to_ev',
    'to_fs',
    'transform_at',
    'write_table',
]
