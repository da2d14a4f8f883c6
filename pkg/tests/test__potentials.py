from __future__ import print_function, division, absolute_import

import numpy as np
import numpy.testing as npt
import pytest
from scipy.integrate import trapezoid

from rrembed.errors import ConfigurationError
from rrembed.potentials import (
    DeltaKick,
    Sampled,
    SoftCoulomb,
    TiltedDoubleWell,
    evaluate,
    fast_deformation_variant,
    is_time_dependent,
    kick_impulse,
    lorentzian,
    quartic_coefficient,
)
from rrembed.quantum import Grid1D
from rrembed.util import fs


def test__soft_coulomb():
    grid = Grid1D(5, 1.0)
    npt.assert_allclose(evaluate(SoftCoulomb(), grid), -1 / np.sqrt([5, 2, 1, 2, 5]))


def test__double_well__quartic_coefficient():
    spec = TiltedDoubleWell()

    assert quartic_coefficient(spec, spec.t0) == pytest.approx(spec.c4 * (1 + spec.amplitude / 2))
    assert quartic_coefficient(spec, 0.0) == pytest.approx(spec.c4, rel=1e-2)
    assert quartic_coefficient(spec, spec.t0 + 50 * spec.tau) == pytest.approx(spec.c4 * (1 + spec.amplitude))


def test__double_well__values():
    spec = TiltedDoubleWell(amplitude=0.0)
    grid = Grid1D(5, 1.0)

    x = grid.x
    expected = spec.c1 * x - spec.c2 * x ** 2 + spec.c4 * x ** 4
    npt.assert_allclose(evaluate(spec, grid, t=123.0), expected)


def test__fast_deformation_variant():
    spec = fast_deformation_variant()

    assert spec.t0 == pytest.approx(fs(5.0))
    assert spec.tau == pytest.approx(fs(1.0))
    assert spec.c4 == TiltedDoubleWell().c4


def test__delta_kick__profile():
    spec = DeltaKick(strength=1e-3, center=1.0, width=1e-2)
    grid = Grid1D(5, 1.0)

    npt.assert_allclose(evaluate(spec, grid, t=1.0), -1e-3 / (np.pi * 1e-2) * grid.x)

    t = np.linspace(0, 50, 2000001)
    assert trapezoid(lorentzian(spec, t), t) == pytest.approx(kick_impulse(spec, 50) / spec.strength, rel=1e-6)


def test__kick_impulse__close_to_strength():
    spec = DeltaKick()
    assert kick_impulse(spec, 1e4) == pytest.approx(spec.strength, rel=5e-3)


def test__sampled():
    grid = Grid1D(5, 1.0)
    npt.assert_allclose(evaluate(Sampled([0, 1, 2, 3, 4]), grid), [0, 1, 2, 3, 4])

    with pytest.raises(ConfigurationError):
        evaluate(Sampled([0, 1, 2]), grid)


@pytest.mark.parametrize('spec, expected', [
    (SoftCoulomb(), False),
    (Sampled([1.0]), False),
    (TiltedDoubleWell(), True),
    (DeltaKick(), True),
])
def test__is_time_dependent(spec, expected):
    assert is_time_dependent(spec) is expected


@pytest.mark.parametrize('cls, kwargs', [
    (SoftCoulomb, {'softening': 0}),
    (TiltedDoubleWell, {'tau': 0}),
    (TiltedDoubleWell, {'c4': -1e-4}),
    (TiltedDoubleWell, {'amplitude': -1}),
    (DeltaKick, {'width': 0}),
    (Sampled, {'values': []}),
])
def test__invalid_specs(cls, kwargs):
    with pytest.raises(ConfigurationError):
        cls(**kwargs)


def test__fast_variant__sigmoid_midpoint():
    spec = fast_deformation_variant()
    assert quartic_coefficient(spec, fs(5.0)) == pytest.approx(1.2 * spec.c4)
    assert quartic_coefficient(spec, fs(100.0)) == pytest.approx(1.4e-4)
