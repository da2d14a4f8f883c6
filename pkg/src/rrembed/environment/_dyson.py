"""Dressing of the bare cavity by the ensemble susceptibility."""
from __future__ import print_function, division, absolute_import

import logging

import numpy as np
import scipy.optimize

from ..errors import PoleOnGridError
from ..util import SPEED_OF_LIGHT, to_ev
from ._cavity import GreenFunction, bare_green_analytic
from ._susceptibility import Tabulated, susceptibility

_logger = logging.getLogger(__name__)

#: smallest tolerated magnitude of the dressed inverse Green function
pole_tolerance = 1e-14


def dress_green(g0, chi, sgrid=None, overwrite=False):
    """Solve ``g^-1 = g0^-1 - omega^2 / c^2 V_E chi_E`` pointwise.

    Frequencies where the ensemble does not respond keep the bare value
    unchanged, so a vanishing susceptibility returns ``g0`` bit for bit. The
    axis is processed in blocks. With ``overwrite`` the result is written into
    ``g0.values``, which then no longer hold the bare function.

    :raises PoleOnGridError: when the dressed inverse vanishes on the grid.
    """
    if chi is None:
        return g0

    values = g0.values if overwrite else g0.values.copy()
    outside = 0
    n_active = 0

    for sel in g0.blocks():
        omega = g0.omega_at(sel)
        coupling = omega ** 2 / SPEED_OF_LIGHT ** 2 * susceptibility(chi, omega, warn=False)
        active = coupling != 0

        if isinstance(chi, Tabulated):
            outside += np.count_nonzero((omega < chi.omega[0]) | (omega > chi.omega[-1]))

        if not np.any(active):
            continue

        bare = values[sel]
        with np.errstate(divide='ignore', invalid='ignore'):
            inverse = 1.0 / bare - coupling

        small = active & ~(np.abs(inverse) >= pole_tolerance)
        if np.any(small):
            raise PoleOnGridError(
                'dressed Green function has a pole on the grid at %.6g eV, increase the cavity loss or resolution' % (
                    to_ev(omega[small][0]),
                )
            )

        with np.errstate(divide='ignore', invalid='ignore'):
            values[sel] = np.where(active, 1.0 / inverse, bare)

        n_active += np.count_nonzero(active)

    if outside:
        _logger.warning(
            '%d of %d frequencies outside the tabulated range [%.4g, %.4g] Ha, polarizability set to zero',
            outside, len(g0), chi.omega[0], chi.omega[-1],
        )

    if n_active:
        _logger.info('dressed green function with %r', chi)

    return GreenFunction(g0.axis, values, cavity=g0.cavity, chi=chi)


def dressed_inverse(cavity, chi, omega):
    """Analytic ``g^-1(omega)`` of the dressed cavity."""
    omega = np.asarray(omega, dtype=float)
    coupling = omega ** 2 / SPEED_OF_LIGHT ** 2 * susceptibility(chi, omega)
    return 1.0 / bare_green_analytic(cavity, omega) - coupling


def dressed_poles(cavity, chi, omega_min, omega_max, n_scan=20001):
    """Real frequencies where ``Re g^-1`` vanishes inside ``[omega_min, omega_max]``.

    Sign changes of the scanned real part are refined with Brent's method.
    Sign changes caused by a divergence of the ensemble response instead of a
    zero are discarded.
    """
    def f(omega):
        return float(np.real(dressed_inverse(cavity, chi, np.array([omega]))[0]))

    omega = np.linspace(omega_min, omega_max, n_scan)
    values = np.real(dressed_inverse(cavity, chi, omega))

    roots = []
    for idx in np.flatnonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0):
        a, b = omega[idx], omega[idx + 1]
        root = scipy.optimize.brentq(f, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps)

        if abs(f(root)) >= 0.5 * min(abs(values[idx]), abs(values[idx + 1])):
            continue

        roots.append(root)

    roots.extend(omega[values == 0])
    return np.array(sorted(roots))
