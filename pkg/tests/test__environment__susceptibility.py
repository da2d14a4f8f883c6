from __future__ import print_function, division, absolute_import

import numpy as np
import numpy.testing as npt
import pytest

from rrembed.environment import (
    CavitySpec,
    DrudeLorentz,
    Tabulated,
    check_causality,
    chi_from_polarizability,
    clausius_mossotti,
    dressed_inverse,
    dressed_poles,
    interpolate_alpha,
    read_polarizability,
    susceptibility,
)
from rrembed.errors import ConfigurationError, SingularDensityError
from rrembed.util import BOHR_ANGSTROM, EPSILON_0, ev


def test__drude_lorentz():
    model = DrudeLorentz(omega_p=1e-3, omega_0=0.4, gamma=0.01, N_ensemble=10, volume=5.0)
    omega = np.array([0.0, 0.3, 0.4])

    expected = 5.0 * 10 * 1e-6 / (0.16 - omega ** 2 - 0.01j * omega)
    npt.assert_allclose(susceptibility(model, omega), expected)


def test__drude_lorentz__local_field():
    kwargs = dict(omega_p=0.1, omega_0=0.4, gamma=0.01, N_ensemble=3, volume=2.0, volume_ratio=0.5)
    omega = np.linspace(0, 1, 11)

    dilute = susceptibility(DrudeLorentz(**kwargs), omega)
    corrected = susceptibility(DrudeLorentz(local_field=True, **kwargs), omega)

    x = dilute / 1.0
    npt.assert_allclose(corrected, x / (1 - x / 3))


def test__drude_lorentz__needs_volume():
    with pytest.raises(ConfigurationError):
        susceptibility(DrudeLorentz(omega_p=1e-3, omega_0=0.4, gamma=0.0, N_ensemble=1), [0.1])


def test__no_ensemble():
    npt.assert_array_equal(susceptibility(None, np.ones(4)), np.zeros(4))


def test__clausius_mossotti__singular():
    assert clausius_mossotti(1.5) == pytest.approx(3.0)

    with pytest.raises(SingularDensityError):
        clausius_mossotti(np.array([0.0, 3.0]))


def test__tabulated__dilute():
    omega = np.linspace(0.1, 1.0, 10)
    alpha = 2.0 + 0.5j * omega
    model = chi_from_polarizability(omega, alpha, N_E=4, V_E=100.0)

    assert isinstance(model, Tabulated)
    npt.assert_allclose(susceptibility(model, omega), 4 * alpha / EPSILON_0)


def test__tabulated__zero_outside_range():
    model = chi_from_polarizability([0.1, 0.2], [1.0 + 1j, 2.0 + 2j], N_E=1, V_E=1.0)
    npt.assert_allclose(interpolate_alpha(model, [0.0, 0.15, 0.3]), [0.0, 1.5 + 1.5j, 0.0])


def test__tabulated__dense_singular():
    alpha_singular = 3 * EPSILON_0 * 10.0 / 2

    with pytest.raises(SingularDensityError):
        chi_from_polarizability([0.1, 0.2], [alpha_singular, 0.1j], N_E=2, V_E=10.0, dilute=False)


def test__tabulated__not_absorptive():
    with pytest.raises(ConfigurationError):
        chi_from_polarizability([0.1, 0.2, 0.3], [1.0 + 1j, 1.0 - 1j, 1.0], N_E=1, V_E=1.0)


@pytest.mark.parametrize('kwargs', [
    {'omega': [0.1, 0.2], 'alpha': [1.0], 'volume_E': 1.0},
    {'omega': [0.2, 0.1], 'alpha': [1.0, 1.0], 'volume_E': 1.0},
    {'omega': [0.1, 0.2], 'alpha': [1.0, 1.0], 'volume_E': 0.0},
])
def test__tabulated__invalid(kwargs):
    with pytest.raises(ConfigurationError):
        Tabulated(**kwargs)


def test__check_causality__without_frequencies():
    assert check_causality(DrudeLorentz(omega_p=1e-3, omega_0=0.4, gamma=0.0, volume=1.0))


def test__read_polarizability(tmpdir):
    path = tmpdir.join('alpha.txt')
    path.write('# units = angstrom3\n# omega_ev re im\n1.0 2.0 0.0\n2.0 3.0 1.0\n')

    omega, alpha = read_polarizability(str(path))

    npt.assert_allclose(omega, ev(np.array([1.0, 2.0])))
    npt.assert_allclose(alpha, np.array([2.0, 3.0 + 1.0j]) / BOHR_ANGSTROM ** 3)


def test__read_polarizability__unknown_units(tmpdir):
    path = tmpdir.join('alpha.txt')
    path.write('# units = furlong\n1.0 2.0 0.0\n2.0 3.0 1.0\n')

    with pytest.raises(ConfigurationError):
        read_polarizability(str(path))


def test__drude_lorentz__on_resonance_is_imaginary():
    model = DrudeLorentz(omega_p=1e-3, omega_0=0.4, gamma=0.04, N_ensemble=2, volume=3.0)
    value = susceptibility(model, [0.4])[0]

    assert value.real == pytest.approx(0.0, abs=1e-15)
    assert value.imag == pytest.approx(3.0 * 2 * 1e-6 / (0.04 * 0.4))


def test__local_field__enhances_static_response():
    omega = np.array([0.1, 0.2])
    alpha = np.array([5.0, 5.0])

    dilute = susceptibility(chi_from_polarizability(omega, alpha, N_E=10, V_E=500.0), omega)
    dense = susceptibility(chi_from_polarizability(omega, alpha, N_E=10, V_E=500.0, dilute=False), omega)

    assert np.all(dense.real > dilute.real)


def single_lorentzian(omega, strength=1e-4 / (4 * np.pi), omega_0=0.4, gamma=0.005):
    return strength / (omega_0 ** 2 - omega ** 2 - 1j * gamma * omega)


@pytest.fixture(scope='module')
def lorentzian_ensembles():
    """A tabulated single Lorentzian and the Drude-Lorentz ensemble with the same response."""
    omega = np.linspace(0.2, 0.6, 80001)
    tabulated = chi_from_polarizability(omega, single_lorentzian(omega), 10, 3.0)

    # 4 pi N alpha = V N omega_p^2 / (omega_0^2 - omega^2 - i gamma omega) for V = 1
    closed_form = DrudeLorentz(omega_p=1e-2, omega_0=0.4, gamma=0.005, N_ensemble=10, volume=1.0)
    return tabulated, closed_form


def test__tabulated_lorentzian__interpolation(lorentzian_ensembles):
    tabulated, _ = lorentzian_ensembles
    omega = np.linspace(0.25, 0.55, 1237)

    npt.assert_allclose(interpolate_alpha(tabulated, omega), single_lorentzian(omega), rtol=1e-5)


def test__tabulated_lorentzian__matches_closed_form(lorentzian_ensembles):
    tabulated, closed_form = lorentzian_ensembles
    omega = np.linspace(0.25, 0.55, 1237)

    npt.assert_allclose(susceptibility(tabulated, omega), susceptibility(closed_form, omega), rtol=1e-5)


def test__tabulated_lorentzian__same_polaritons(lorentzian_ensembles):
    tabulated, closed_form = lorentzian_ensembles
    cavity = CavitySpec(omega_c=0.4, eta=1e-3, volume=1.0)
    omega = np.linspace(0.3, 0.5, 401)

    expected = dressed_inverse(cavity, closed_form, omega)
    npt.assert_allclose(dressed_inverse(cavity, tabulated, omega), expected, rtol=0, atol=1e-5 * np.abs(expected).max())

    poles = dressed_poles(cavity, tabulated, 0.3, 0.5)
    assert len(poles) >= 2
    npt.assert_allclose(poles, dressed_poles(cavity, closed_form, 0.3, 0.5), atol=1e-6)
    assert poles[0] < 0.4 - 0.01 and poles[-1] > 0.4 + 0.01
