"""Linear response of the molecular ensemble.

All models evaluate ``V_E chi_E(omega)``, the susceptibility integrated over
the ensemble volume, which is the quantity entering the Dyson equation.
"""
from __future__ import print_function, division, absolute_import

import logging

import numpy as np

from ..errors import ConfigurationError, SingularDensityError
from ..util import BOHR_ANGSTROM, EPSILON_0, Record, _monadic as m, ev, read_table

_logger = logging.getLogger(__name__)

#: smallest tolerated Clausius-Mossotti denominator
singular_tolerance = 1e-6


def _complex_tuple(values):
    return tuple(complex(v) for v in np.ravel(values))


def _float_tuple(values):
    return tuple(float(v) for v in np.ravel(values))


class DrudeLorentz(Record):
    """Lorentz oscillator ensemble ``V N omega_p^2 / (omega_0^2 - omega^2 - i gamma omega)``.

    ``volume`` is the cavity mode volume ``V``, ``volume_ratio`` is ``V_E / V``
    and only matters with the Clausius-Mossotti ``local_field`` correction.
    """
    __fields__ = ['omega_p', 'omega_0', 'gamma', 'N_ensemble', 'volume_ratio', 'local_field', 'volume']
    __types__ = [float, float, float, int, float, bool, float]
    __defaults__ = {'N_ensemble': 0, 'volume_ratio': 1.0, 'local_field': False}

    def validate(self):
        if self.omega_p is None or self.omega_p < 0:
            raise ConfigurationError('plasma frequency must be non-negative, got %s' % self.omega_p)

        if self.omega_0 is None or not self.omega_0 > 0:
            raise ConfigurationError('oscillator frequency must be positive, got %s' % self.omega_0)

        if self.gamma is None or self.gamma < 0:
            raise ConfigurationError('ensemble damping must be non-negative, got %s' % self.gamma)

        if self.N_ensemble < 0:
            raise ConfigurationError('ensemble size must be non-negative, got %s' % self.N_ensemble)

        if not self.volume_ratio > 0:
            raise ConfigurationError('volume ratio must be positive, got %s' % self.volume_ratio)


class Tabulated(Record):
    """Ensemble built from a sampled molecular polarizability ``alpha(omega)``."""
    __fields__ = ['omega', 'alpha', 'N_ensemble', 'volume_E', 'dilute']
    __types__ = [_float_tuple, _complex_tuple, int, float, bool]
    __defaults__ = {'N_ensemble': 0, 'dilute': True}

    def validate(self):
        if len(self.omega) != len(self.alpha):
            raise ConfigurationError('got %d frequencies but %d polarizability samples' % (
                len(self.omega), len(self.alpha),
            ))

        if len(self.omega) < 2 or np.any(np.diff(self.omega) <= 0):
            raise ConfigurationError('tabulated frequencies must be strictly increasing')

        if self.N_ensemble < 0:
            raise ConfigurationError('ensemble size must be non-negative, got %s' % self.N_ensemble)

        if self.volume_E is None or not self.volume_E > 0:
            raise ConfigurationError('ensemble volume must be positive, got %s' % self.volume_E)


def clausius_mossotti(chi):
    """Local field corrected susceptibility ``chi / (1 - chi / 3)``."""
    chi = np.asarray(chi)
    denominator = 1.0 - chi / 3.0

    if np.any(np.abs(denominator) < singular_tolerance):
        raise SingularDensityError(
            'Clausius-Mossotti denominator vanishes (min |1 - chi/3| = %.3g), the ensemble density is singular' % (
                np.min(np.abs(denominator))
            )
        )

    return chi / denominator


def chi_drude_lorentz(model, omega):
    """``V_E chi_E(omega)`` of a :class:`DrudeLorentz` ensemble."""
    if model.volume is None:
        raise ConfigurationError('Drude-Lorentz ensemble needs the cavity mode volume')

    omega = np.asarray(omega, dtype=float)
    value = model.volume * model.N_ensemble * model.omega_p ** 2 / (
        model.omega_0 ** 2 - omega ** 2 - 1j * model.gamma * omega
    )

    if not model.local_field or model.N_ensemble == 0:
        return value

    volume_E = model.volume_ratio * model.volume
    return volume_E * clausius_mossotti(value / volume_E)


def chi_from_polarizability(omega, alpha, N_E, V_E, dilute=True):
    """Ensemble model from a tabulated polarizability.

    ``dilute`` uses ``chi = N alpha / (V_E eps0)``, otherwise the
    Clausius-Mossotti relation ``chi = x / (1 - x / 3)`` with the same ``x``.

    :raises SingularDensityError: when the local field denominator vanishes
        on any tabulated frequency.
    """
    model = Tabulated(omega=omega, alpha=alpha, N_ensemble=N_E, volume_E=V_E, dilute=dilute)

    if not dilute:
        clausius_mossotti(_chi_dilute(model, np.asarray(model.alpha)))

    check_causality(model)
    return model


def _chi_dilute(model, alpha):
    return model.N_ensemble * alpha / (model.volume_E * EPSILON_0)


def interpolate_alpha(model, omega, warn=True):
    """Complex linear interpolation, zero outside the tabulated range."""
    omega = np.asarray(omega, dtype=float)
    grid = np.asarray(model.omega)
    alpha = np.asarray(model.alpha)

    outside = (omega < grid[0]) | (omega > grid[-1])
    if warn and np.any(outside):
        _logger.warning(
            '%d of %d frequencies outside the tabulated range [%.4g, %.4g] Ha, polarizability set to zero',
            np.count_nonzero(outside), omega.size, grid[0], grid[-1],
        )

    return (
        np.interp(omega, grid, alpha.real, left=0.0, right=0.0) +
        1j * np.interp(omega, grid, alpha.imag, left=0.0, right=0.0)
    )


susceptibility = m.RuleSet(name='susceptibility')


@susceptibility.rule(m.instanceof(DrudeLorentz))
def susceptibility_drude_lorentz(susceptibility, model, omega, warn=True):
    return chi_drude_lorentz(model, omega)


@susceptibility.rule(m.instanceof(Tabulated))
def susceptibility_tabulated(susceptibility, model, omega, warn=True):
    chi = _chi_dilute(model, interpolate_alpha(model, omega, warn=warn))

    if not model.dilute:
        chi = clausius_mossotti(chi)

    return model.volume_E * chi


@susceptibility.rule(m.none())
def susceptibility_none(susceptibility, model, omega, warn=True):
    return np.zeros(np.shape(omega), dtype=complex)


def check_causality(model, omega=None, tolerance=1e-3):
    """Require an absorptive medium, ``Im[V_E chi_E(omega)] omega >= 0``.

    Violations above ``tolerance`` relative to the largest absorption raise,
    smaller ones are logged.
    """
    if omega is None:
        omega = np.asarray(model.omega) if isinstance(model, Tabulated) else None

    if omega is None:
        return True

    absorption = np.imag(susceptibility(model, omega)) * np.asarray(omega)
    scale = np.max(np.abs(absorption)) if absorption.size else 0.0

    if scale == 0 or absorption.min() >= 0:
        return True

    if -absorption.min() > tolerance * scale:
        raise ConfigurationError('ensemble response is not absorptive: min Im[chi] omega = %.3g (max %.3g)' % (
            absorption.min(), scale,
        ))

    _logger.warning('small causality violation in ensemble response: %.3g relative', -absorption.min() / scale)
    return True


#: polarizability units of tabulated files -> factor to atomic units
alpha_units = {
    'au': 1.0,
    'bohr3': 1.0,
    'angstrom3': BOHR_ANGSTROM ** -3,
}


def read_polarizability(filename):
    """Read ``(omega_ev, re, im)`` polarizability tables.

    The unit of ``alpha`` is declared by a ``units`` header key (``# units =
    au`` in text files, ``"units": "au"`` in JSON); default atomic units.

    :returns: ``(omega, alpha)`` in atomic units.
    """
    df, meta = read_table(filename, columns=['omega_ev', 're', 'im'])

    units = str(meta.get('units', 'au')).strip().lower()
    if units not in alpha_units:
        raise ConfigurationError('%s: unknown polarizability units %s, expected one of %s' % (
            filename, units, ', '.join(sorted(alpha_units)),
        ))

    omega = ev(df['omega_ev'].to_numpy(dtype=float))
    alpha = alpha_units[units] * (df['re'].to_numpy(dtype=float) + 1j * df['im'].to_numpy(dtype=float))
    return omega, alpha
