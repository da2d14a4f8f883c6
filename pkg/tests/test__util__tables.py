from __future__ import print_function, division, absolute_import

import json

import pandas as pd
import pandas.testing as pdt
import pytest

from rrembed.errors import ConfigurationError
from rrembed.util import read_table, write_table


def test__read_table__text(tmpdir):
    path = tmpdir.join('alpha.txt')
    path.write('# units = angstrom3\n# omega_ev re im\n0.0 1.5 0\n1.0, 2.5, 0.5\n2.0\t3.5\t1.5\n')

    df, meta = read_table(str(path), columns=['omega_ev', 're', 'im'])

    assert meta == {'units': 'angstrom3'}
    pdt.assert_frame_equal(df, pd.DataFrame({
        'omega_ev': [0.0, 1.0, 2.0],
        're': [1.5, 2.5, 3.5],
        'im': [0.0, 0.5, 1.5],
    }, columns=['omega_ev', 're', 'im']))


def test__read_table__json(tmpdir):
    path = tmpdir.join('alpha.json')
    path.write(json.dumps({'omega_ev': [0, 1], 're': [1, 2], 'im': [0, 0], 'units': 'au'}))

    df, meta = read_table(str(path), columns=['omega_ev', 're', 'im'])

    assert meta == {'units': 'au'}
    assert list(df['re']) == [1, 2]


def test__write_table__round_trip_precision(tmpdir):
    df = pd.DataFrame({'a': [0.1, 1 / 3.0], 'b': [1, 2]}, columns=['a', 'b'])
    path = write_table(df, str(tmpdir.join('t.tsv')))

    lines = open(path).read().splitlines()
    assert lines[0] == 'a\tb'

    back = pd.read_csv(path, sep='\t')
    assert back['a'].tolist() == df['a'].tolist()


def test__read_table__missing_column(tmpdir):
    path = tmpdir.join('alpha.json')
    path.write(json.dumps({'omega_ev': [0, 1], 're': [1, 2]}))

    with pytest.raises(ConfigurationError, match='missing columns'):
        read_table(str(path), columns=['omega_ev', 're', 'im'])


def test__read_table__unknown_format(tmpdir):
    path = tmpdir.join('alpha.txt')
    path.write('0.0 1.0 0.0\n')

    with pytest.raises(ConfigurationError, match='unknown table format'):
        read_table(str(path), columns=['omega_ev', 're', 'im'], format='xlsx')
