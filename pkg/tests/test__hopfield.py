from __future__ import print_function, division, absolute_import

import numpy as np
import numpy.testing as npt
import pytest
import scipy.linalg

from rrembed.errors import ConfigurationError
from rrembed.hopfield import (
    HopfieldSpec,
    bright_dark_reduce,
    build_arrowhead,
    eigenvalues,
    hopfield_sweep,
    polariton_weights,
)
from rrembed.util import ev


def test__arrowhead__layout():
    spec = HopfieldSpec(omega_c=1.0, omega_E=2.0, omega_m=3.0, g=0.1, g_m=0.2, N=2)

    npt.assert_array_equal(build_arrowhead(spec), [
        [1.0, 0.1, 0.1, 0.2],
        [0.1, 2.0, 0.0, 0.0],
        [0.1, 0.0, 2.0, 0.0],
        [0.2, 0.0, 0.0, 3.0],
    ])


def test__two_emitters__closed_form():
    omega_c, omega_E, g = 1.1, 0.9, 0.05
    spec = HopfieldSpec(omega_c=omega_c, omega_E=omega_E, omega_m=5.0, g=g, N=2)

    center = (omega_c + omega_E) / 2
    half = np.sqrt(((omega_c - omega_E) / 2) ** 2 + 2 * g ** 2)

    # the decoupled molecule adds omega_m
    npt.assert_allclose(eigenvalues(spec), [center - half, omega_E, center + half, 5.0])


def test__no_ensemble__two_level_block():
    spec = HopfieldSpec(omega_c=1.0, omega_E=2.0, omega_m=1.2, g=0.3, g_m=0.1, N=0)

    assert build_arrowhead(spec).shape == (2, 2)
    npt.assert_allclose(eigenvalues(spec), scipy.linalg.eigvalsh([[1.0, 0.1], [0.1, 1.2]]))

    with pytest.raises(ConfigurationError):
        bright_dark_reduce(spec)


def test__zero_coupling__diagonal():
    spec = HopfieldSpec(omega_c=1.0, omega_E=2.0, omega_m=1.5, g=0.0, g_m=0.0, N=3)
    npt.assert_allclose(eigenvalues(spec), [1.0, 1.5, 2.0, 2.0, 2.0])


@pytest.mark.parametrize('N, seed', [(7, 0), (7, 1), (500, 2)])
def test__bright_dark_union(N, seed):
    rng = np.random.RandomState(seed)
    omega_c, omega_E, omega_m = rng.uniform(0.5, 1.5, size=3)
    g, g_m = rng.uniform(0.0, 0.05, size=2)
    spec = HopfieldSpec(omega_c=omega_c, omega_E=omega_E, omega_m=omega_m, g=g, g_m=g_m, N=N)

    full = scipy.linalg.eigvalsh(build_arrowhead(spec))
    reduced = eigenvalues(spec, dense_limit=0)

    npt.assert_allclose(reduced, full, atol=1e-12)


def test__bright_block__trace_and_dark_count():
    spec = HopfieldSpec(omega_c=1.0, omega_E=0.9, omega_m=1.2, g=0.01, g_m=0.02, N=10)
    bright, n_dark = bright_dark_reduce(spec)

    assert n_dark == 9
    assert np.trace(bright) == pytest.approx(1.0 + 0.9 + 1.2)
    assert np.trace(build_arrowhead(spec)) == pytest.approx(np.trace(bright) + n_dark * 0.9)


def test__resonant__collective_splitting():
    g, N = 0.01, 400
    spec = HopfieldSpec(omega_c=1.0, omega_E=1.0, omega_m=1.5, g=g, N=N)

    bright = scipy.linalg.eigvalsh(bright_dark_reduce(spec)[0])
    npt.assert_allclose(bright, [1.0 - g * np.sqrt(N), 1.0 + g * np.sqrt(N), 1.5])


def test__weights__decoupled_unit_vectors():
    spec = HopfieldSpec(omega_c=1.0, omega_E=2.0, omega_m=3.0, g=0.0, g_m=0.0, N=1)
    df = polariton_weights(build_arrowhead(spec))

    assert list(df.columns) == ['branch', 'energy', 'photon', 'ensemble', 'molecule']
    npt.assert_allclose(df[['photon', 'ensemble', 'molecule']].to_numpy(), np.eye(3))


@pytest.mark.parametrize('layout, N', [('arrowhead', 6), ('bright', 6)])
def test__weights__sum_to_one(layout, N):
    rng = np.random.RandomState(3)
    spec = HopfieldSpec(*rng.uniform(0.5, 1.5, size=3), g=0.03, g_m=0.02, N=N)
    matrix = build_arrowhead(spec) if layout == 'arrowhead' else bright_dark_reduce(spec)[0]

    df = polariton_weights(matrix, layout=layout)
    npt.assert_allclose(df[['photon', 'ensemble', 'molecule']].sum(axis=1), 1.0)


def test__weights__bright_block_matches_arrowhead():
    spec = HopfieldSpec(omega_c=1.0, omega_E=1.0, omega_m=0.95, g=0.005, g_m=0.01, N=4)

    bright = polariton_weights(bright_dark_reduce(spec)[0], layout='bright')
    full = polariton_weights(build_arrowhead(spec))
    full = full[full['ensemble'] < 1 - 1e-9].reset_index(drop=True)

    npt.assert_allclose(full['energy'], bright['energy'])
    columns = ['photon', 'ensemble', 'molecule']
    npt.assert_allclose(full[columns], bright[columns], atol=1e-10)


@pytest.mark.parametrize('matrix, layout', [
    (np.ones((2, 3)), 'arrowhead'),
    ([[1.0, 0.1], [0.2, 1.0]], 'arrowhead'),
    (np.eye(4), 'bright'),
    (np.eye(3), 'diagonal'),
])
def test__weights__invalid(matrix, layout):
    with pytest.raises(ConfigurationError):
        polariton_weights(matrix, layout=layout)


def test__invalid_spec():
    with pytest.raises(ConfigurationError):
        HopfieldSpec(omega_c=0.0, omega_E=1.0, omega_m=1.0, g=0.1)

    with pytest.raises(ConfigurationError):
        HopfieldSpec(omega_c=1.0, omega_E=1.0, omega_m=1.0, g=0.1, N=-1)


def test__sweep():
    spec = HopfieldSpec(omega_c=ev(11.7), omega_E=ev(11.7), omega_m=ev(10.746), g=ev(0.011), g_m=ev(0.011))
    df = hopfield_sweep(spec, [0, 1, 10000])

    assert list(df.columns) == ['N', 'g_sqrt_N_eV', 'branch', 'energy_eV', 'photon', 'ensemble', 'molecule']
    assert df['N'].tolist() == [0, 0, 1, 1, 1, 10000, 10000, 10000]
    assert df[df['N'] == 10000]['g_sqrt_N_eV'].iloc[0] == pytest.approx(1.1)

    strong = df[df['N'] == 10000]
    assert strong['energy_eV'].min() == pytest.approx(11.7 - 1.1, abs=0.01)
    assert strong['energy_eV'].max() == pytest.approx(11.7 + 1.1, abs=0.01)
