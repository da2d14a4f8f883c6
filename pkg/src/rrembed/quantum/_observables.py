from __future__ import print_function, division, absolute_import

import numpy as np


def dipole(psi, particle):
    """``q * int x |psi(x)|^2 dx`` with the signed particle charge."""
    grid = psi.grid
    return float(particle.charge * grid.spacing * np.dot(grid.x, psi.density()))


def side_populations(psi):
    """Probability left and right of ``x = 0``.

    A grid point located at the origin contributes half its weight to each
    side.
    """
    grid = psi.grid
    x = grid.x
    weights = grid.spacing * psi.density()

    center = np.abs(x) < 1e-9 * grid.spacing
    half = 0.5 * np.sum(weights[center])

    left = np.sum(weights[(x < 0) & ~center]) + half
    right = np.sum(weights[(x > 0) & ~center]) + half
    return float(left), float(right)


def transition_dipole(psi_a, psi_b, particle):
    """``q <a|x|b>``; real for real eigenstates."""
    grid = psi_a.grid
    value = particle.charge * grid.spacing * np.vdot(psi_a.amplitudes, grid.x * psi_b.amplitudes)
    return complex(value)


def energy(psi, H):
    """Expectation value of ``H`` in the normalized state ``psi``."""
    amplitudes = psi.amplitudes
    return float(np.real(psi.grid.spacing * np.vdot(amplitudes, H @ amplitudes)))
