from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import numpy.testing as npt
import pytest
import scipy.linalg

from rrembed.environment import (
    CavitySpec,
    DrudeLorentz,
    GreenFunction,
    SpectralGrid,
    bare_green,
    chi_from_polarizability,
    dress_green,
    dressed_inverse,
    dressed_poles,
)
from rrembed.errors import PoleOnGridError
from rrembed.hopfield import HopfieldSpec, bright_dark_reduce
from rrembed.util import SPEED_OF_LIGHT


@pytest.fixture(scope='module')
def g0():
    cavity = CavitySpec(omega_c=1.0, eta=0.01, volume=1.0)
    return bare_green(cavity, SpectralGrid(dt=0.05, n_steps=4000, oversampling=10))


def test__dress_green__without_ensemble(g0):
    assert dress_green(g0, None) is g0

    chi = DrudeLorentz(omega_p=0.05, omega_0=1.0, gamma=0.02, N_ensemble=0, volume=1.0)
    g = dress_green(g0, chi)

    assert g is not g0
    npt.assert_array_equal(g.values, g0.values)


def test__dress_green__matches_inverse(g0):
    chi = DrudeLorentz(omega_p=0.05, omega_0=1.0, gamma=0.02, N_ensemble=2, volume=1.0)
    g = dress_green(g0, chi)

    coupling = g0.omega ** 2 / SPEED_OF_LIGHT ** 2 * 2 * 0.05 ** 2 / (1 - g0.omega ** 2 - 0.02j * g0.omega)
    npt.assert_allclose(1 / g.values[1:], 1 / g0.values[1:] - coupling[1:], rtol=1e-10)
    assert g.values[0] == g0.values[0]


def resonant_poles(N, omega_p=1e-3):
    cavity = CavitySpec(omega_c=0.4, eta=0.0, volume=1.0)
    chi = DrudeLorentz(omega_p=omega_p, omega_0=0.4, gamma=0.0, N_ensemble=N, volume=1.0)
    return dressed_poles(cavity, chi, 0.3, 0.49)


@pytest.mark.parametrize('N', [1, 4, 25])
def test__dressed_poles__collective_splitting(N):
    omega_p = 1e-3
    poles = resonant_poles(N, omega_p)

    assert poles.shape == (2,)
    assert poles[1] - poles[0] == pytest.approx(omega_p * np.sqrt(2 * N), rel=1e-8)


def test__dressed_poles__square_root_scaling():
    split = [np.diff(resonant_poles(N))[0] for N in (3, 12)]
    assert split[1] / split[0] == pytest.approx(2.0, rel=1e-8)


@pytest.mark.parametrize('N', [1, 10])
def test__dressed_poles__agree_with_hopfield_bright_block(N):
    omega_p = 1e-3
    spec = HopfieldSpec(omega_c=0.4, omega_E=0.4, omega_m=1.0, g=omega_p / np.sqrt(2), g_m=0.0, N=N)
    bright, _ = bright_dark_reduce(spec)
    lower, upper, _ = scipy.linalg.eigvalsh(bright)

    poles = resonant_poles(N, omega_p)
    assert poles[1] - poles[0] == pytest.approx(upper - lower, rel=1e-8)


def test__dressed_inverse__vanishes_at_poles():
    cavity = CavitySpec(omega_c=0.4, eta=0.0, volume=1.0)
    chi = DrudeLorentz(omega_p=1e-3, omega_0=0.4, gamma=0.0, N_ensemble=4, volume=1.0)
    poles = dressed_poles(cavity, chi, 0.3, 0.49)

    scale = abs(dressed_inverse(cavity, chi, [0.3])[0])
    assert np.all(np.abs(dressed_inverse(cavity, chi, poles)) < 1e-8 * scale)


def test__dress_green__pole_on_grid():
    chi = DrudeLorentz(omega_p=1e-3, omega_0=0.5, gamma=0.01, N_ensemble=1, volume=1.0)
    omega = np.array([0.1, 0.4])

    coupling = omega ** 2 / SPEED_OF_LIGHT ** 2 * 1e-6 / (0.25 - omega ** 2 - 0.01j * omega)
    values = np.array([1.0, 1 / coupling[1]])

    with pytest.raises(PoleOnGridError):
        dress_green(GreenFunction(omega, values), chi)


def test__dress_green__overwrite(g0):
    chi = DrudeLorentz(omega_p=0.05, omega_0=1.0, gamma=0.02, N_ensemble=2, volume=1.0)
    expected = dress_green(g0, chi)

    bare = GreenFunction(g0.axis, g0.values.copy(), cavity=g0.cavity)
    g = dress_green(bare, chi, overwrite=True)

    assert g.values is bare.values
    npt.assert_array_equal(g.values, expected.values)


def test__dress_green__tabulated_range_warned_once(g0, caplog):
    omega = np.linspace(0.8, 1.2, 50)
    chi = chi_from_polarizability(omega, 1e-3 / (1.0 - omega ** 2 - 0.05j * omega), N_E=1, V_E=1.0)

    with caplog.at_level(logging.WARNING):
        dress_green(g0, chi)

    warnings = [r for r in caplog.records if 'outside the tabulated range' in r.getMessage()]
    assert len(warnings) == 1
    assert str(len(g0)) in warnings[0].getMessage()
