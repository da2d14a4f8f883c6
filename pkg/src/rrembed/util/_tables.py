from __future__ import print_function, division, absolute_import

import json
import os.path
import re

import pandas as pd

from ..errors import ConfigurationError

_meta_line = re.compile(r'^#\s*(?P<key>[a-zA-Z_]\w*)\s*[=:]\s*(?P<value>.*?)\s*$')


def read_table(filename, columns, format=None):
    """Read a numeric table from delimited text or JSON.

    Text tables are whitespace, comma or tab delimited. Header lines start
    with ``#``; lines of the form ``# key = value`` are returned as metadata.
    JSON tables are objects mapping each column name to a list, any other
    key is metadata.

    :returns: a tuple ``(frame, meta)``.
    """
    filename = os.path.abspath(filename)

    if format is None:
        format = 'json' if filename.endswith('.json') else 'text'

    if format == 'json':
        with open(filename) as fobj:
            obj = json.load(fobj)

        missing = [c for c in columns if c not in obj]
        if missing:
            raise ConfigurationError('%s: missing columns %s' % (filename, missing))

        meta = {k: v for k, v in obj.items() if k not in columns}
        return pd.DataFrame({c: obj[c] for c in columns}, columns=list(columns)), meta

    elif format == 'text':
        meta = {}
        with open(filename) as fobj:
            for line in fobj:
                m = _meta_line.match(line)
                if m is not None:
                    meta[m.group('key')] = m.group('value')

        df = pd.read_csv(
            filename, sep=r'[\s,]+', comment='#', header=None, names=list(columns), engine='python',
        )
        return df, meta

    else:
        raise ConfigurationError('unknown table format %s' % format)


def write_table(df, filename):
    """Write a table with tab separators and round-trip float precision."""
    df.to_csv(filename, sep='\t', float_format='%.17g', index=False)
    return filename
