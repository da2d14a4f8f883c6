from __future__ import print_function, division, absolute_import

import json
import os.path

import numpy as np
import pandas as pd
import pytest

from rrembed.cli import main
from rrembed.config import parse_config, parse_config_text
from rrembed.environment import CavitySpec, SpectralGrid, bare_green
from rrembed.errors import ConfigurationError, SetupError
from rrembed.executor import (
    Executor,
    SerialModel,
    execute,
    get_model,
    green_frame,
    trace_frame,
    versions,
    write_error,
    write_outputs,
)


def test__hopfield__outputs(tmpdir):
    config = parse_config_text('experiment = hopfield\n[output]\nplot_scripts = true\n')
    out = str(tmpdir.join('out'))

    tables = Executor(config, out=out, model='serial').execute()

    assert sorted(tables) == ['eigenstates', 'hopfield']
    assert list(tables['eigenstates'].columns) == ['branch', 'energy_eV', 'photon', 'ensemble', 'molecule']

    for name in ('hopfield.tsv', 'hopfield.gp', 'eigenstates.tsv', 'eigenstates.gp', 'provenance.json'):
        assert os.path.exists(os.path.join(out, name))

    df = pd.read_csv(os.path.join(out, 'hopfield.tsv'), sep='\t')
    assert list(df.columns) == list(tables['hopfield'].columns)


def test__provenance__round_trip(tmpdir):
    config = parse_config_text('experiment = hopfield\n[hopfield]\nN = 3\nN_values = [0, 5]\n')
    out = str(tmpdir)

    execute(config, out=out, model='serial')

    with open(os.path.join(out, 'provenance.json')) as fobj:
        provenance = json.load(fobj)

    assert provenance['experiment'] == 'hopfield'
    assert provenance['warnings'] == []
    assert 'numpy' in provenance['versions']
    assert sorted(provenance['outputs']) == ['eigenstates.tsv', 'hopfield.tsv']

    assert parse_config(os.path.join(out, 'provenance.json')) == config


def test__tables_are_deterministic(tmpdir):
    config = parse_config_text('experiment = surface\n')

    first = str(tmpdir.join('first'))
    second = str(tmpdir.join('second'))
    execute(config, out=first, model='serial')
    execute(config, out=second, model='serial')

    for name in ('surface.tsv', 'levels.tsv'):
        with open(os.path.join(first, name), 'rb') as a, open(os.path.join(second, name), 'rb') as b:
            assert a.read() == b.read()


def test__kernel__needs_a_cavity():
    config = parse_config_text('experiment = kernel\n[cavity]\nenabled = false\n')

    with pytest.raises(ConfigurationError):
        Executor(config, model='serial').run()


def test__failed_run_writes_error_record(tmpdir):
    config = parse_config_text('experiment = react\n[potential]\nc1 = -1e-3\n')

    with pytest.raises(SetupError):
        Executor(config, out=str(tmpdir), model='serial').execute()

    with open(str(tmpdir.join('error.json'))) as fobj:
        record = json.load(fobj)

    assert record['kind'] == 'setup'
    assert record['type'] == 'SetupError'


def test__write_error__internal(tmpdir):
    write_error(RuntimeError('boom'), str(tmpdir))

    with open(str(tmpdir.join('error.json'))) as fobj:
        assert json.load(fobj) == {'kind': 'internal', 'type': 'RuntimeError', 'message': 'boom'}


def test__write_outputs__sweep_plot_script(tmpdir):
    config = parse_config_text('experiment = sweep\n[sweep]\naxis = g0\nvalues = [0]\n')
    df = pd.DataFrame({'g0': [0.0], 'N': [0], 'CR': [0.0], 'error': ['']})

    written = write_outputs({'sweep': df}, str(tmpdir), config, plot_scripts=True)

    assert [os.path.basename(p) for p in written] == ['sweep.tsv', 'sweep.gp', 'provenance.json']
    assert 'using "g0":"CR"' in tmpdir.join('sweep.gp').read()


def test__get_model():
    assert isinstance(get_model('serial'), SerialModel)

    model = SerialModel()
    assert get_model(model) is model

    with pytest.raises(ConfigurationError):
        get_model('cluster')


def test__dask_model():
    pytest.importorskip('dask')
    from rrembed.executor._dask import DaskModel

    model = get_model('dask', jobs=2, scheduler='synchronous')

    assert isinstance(model, DaskModel)
    assert model.map(lambda x: x ** 2, [1, 2, 3]) == [1, 4, 9]


def test__green_frame__restricted_to_the_modes():
    cavity = CavitySpec(omega_c=1.0, eta=0.05, volume=1.0)
    g0 = bare_green(cavity, SpectralGrid(dt=0.1, n_steps=1000, oversampling=2))

    df = green_frame(g0)
    assert list(df.columns) == ['omega_eV', 're_g', 'im_g', 'abs_im_g']
    assert len(df) == np.count_nonzero(g0.omega <= 3.0)


def test__trace_frame():
    observables = pd.DataFrame({
        't': [0.0, 41.34137], 'R': [0.0, 1.0], 'Rdot': [0.0, 0.5], 'norm': [1.0, 1.0],
        'pop_left': [1.0, 0.9], 'pop_right': [0.0, 0.1], 'E_rr': [0.0, 1e-6],
    })
    df = trace_frame(observables)

    assert list(df.columns) == ['t_fs', 'R_au', 'Rdot_au', 'norm', 'pop_left', 'pop_right', 'E_rr_au']
    assert df['t_fs'].tolist() == pytest.approx([0.0, 1.0], abs=1e-6)


def test__versions():
    result = versions()
    assert {'python', 'rrembed', 'numpy', 'scipy', 'pandas'} <= set(result)


def test__cli__dry_run(tmpdir, capsys):
    path = tmpdir.join('run.cfg')
    path.write('experiment = spectrum\n[propagation]\ndt = 0.02\n')

    assert main(['--config', str(path), '--dry-run', '--oversample', '4']) == 0

    resolved = json.loads(capsys.readouterr().out)
    assert resolved['experiment'] == 'spectrum'
    assert resolved['propagation']['dt'] == 0.02
    assert resolved['propagation']['oversampling'] == 4


def test__cli__experiment_override(tmpdir):
    path = tmpdir.join('run.cfg')
    path.write('experiment = spectrum\n[hopfield]\nN_values = [0, 10]\n')
    out = str(tmpdir.join('out'))

    assert main(['hopfield', '--config', str(path), '--out', out, '--jobs', '1']) == 0
    assert os.path.exists(os.path.join(out, 'hopfield.tsv'))


def test__cli__invalid_config(tmpdir):
    path = tmpdir.join('run.cfg')
    path.write('experiment = spectrum\n[grid]\nn_points = many\n')
    out = str(tmpdir.join('out'))

    assert main(['--config', str(path), '--out', out]) == 2

    with open(os.path.join(out, 'error.json')) as fobj:
        record = json.load(fobj)

    assert record['kind'] == 'parse'
    assert record['key'] == 'grid.n_points'


def test__cli__failed_run(tmpdir):
    path = tmpdir.join('run.cfg')
    path.write('experiment = react\n[potential]\nc1 = -1e-3\n[output]\njobs = 1\n')
    out = str(tmpdir.join('out'))

    assert main(['--config', str(path), '--out', out]) == 1
    assert os.path.exists(os.path.join(out, 'error.json'))
