"""Tables, provenance and plot scripts of a run."""
from __future__ import print_function, division, absolute_import

import json
import logging
import os
import os.path
import platform

from ..errors import Error
from ..util import write_table

_logger = logging.getLogger(__name__)

#: table name -> (x column, y column) of the emitted plot scripts
plot_columns = {
    'spectrum': ('omega_eV', 'sigma'),
    'trace': ('t_fs', 'R_au'),
    'green': ('omega_eV', 'abs_im_g'),
    'reactivity': ('N', 'CR'),
    'populations': ('t_fs', 'delta_pop'),
    'kernel': ('t_fs', 'K'),
    'hopfield': ('g_sqrt_N_eV', 'energy_eV'),
    'eigenstates': ('energy_eV', 'molecule'),
    'surface': ('x_bohr', 'v_before_eV'),
    'levels': ('state', 'E_before_eV'),
}

_packages = ['rrembed', 'numpy', 'scipy', 'pandas', 'dask']


def table_filename(out, name):
    return os.path.join(out, '%s.tsv' % name)


def write_outputs(tables, out, config, wall_time=None, warnings=(), plot_scripts=False):
    """Write every table, ``provenance.json`` and optionally gnuplot scripts.

    :returns: the list of written files.
    """
    _ensure_directory(out)
    written = []

    for name, df in sorted(tables.items()):
        written.append(write_table(df, table_filename(out, name)))

        if plot_scripts:
            written.append(write_plot_script(name, df, out, config))

    provenance = {
        'experiment': config.experiment,
        'config': config.to_dict(),
        'versions': versions(),
        'wall_time_s': wall_time,
        'warnings': list(warnings),
        'outputs': [os.path.basename(p) for p in written],
    }

    written.append(_write_json(provenance, os.path.join(out, 'provenance.json')))
    _logger.info('wrote %d files to %s', len(written), out)
    return written


def write_error(exc, out):
    """Machine readable ``error.json`` for a failed run."""
    _ensure_directory(out)

    if isinstance(exc, Error):
        record = exc.to_record()

    else:
        record = {'kind': 'internal', 'type': type(exc).__name__, 'message': str(exc)}

    return _write_json(record, os.path.join(out, 'error.json'))


def write_plot_script(name, df, out, config):
    if name == 'sweep':
        axis = config.sweep['axis']
        y = 'CR' if 'CR' in df.columns else 'sigma'
        columns = (axis, y)

    else:
        columns = plot_columns.get(name, tuple(df.columns[:2]))

    filename = os.path.join(out, '%s.gp' % name)
    with open(filename, 'w') as fobj:
        fobj.write('set datafile separator "\\t"\n')
        fobj.write('set key autotitle columnhead\n')
        fobj.write('set xlabel "%s"\n' % columns[0])
        fobj.write('set ylabel "%s"\n' % columns[1])
        fobj.write('plot "%s.tsv" using "%s":"%s" with lines\n' % (name, columns[0], columns[1]))

    return filename


def versions():
    result = {'python': platform.python_version()}

    for name in _packages:
        try:
            module = __import__(name)

        except ImportError:
            continue

        result[name] = getattr(module, '__version__', 'unknown')

    return result


def _ensure_directory(out):
    if not os.path.isdir(out):
        os.makedirs(out)


def _write_json(obj, filename):
    with open(filename, 'w') as fobj:
        json.dump(obj, fobj, indent=2, sort_keys=True, allow_nan=True)
        fobj.write('\n')

    return filename
