"""Shared fixtures: kernel/rate tables reused across test modules.

The kernels are linear in the bath couplings, so a per-exponent table at
unit coupling can be scaled to any (alpha, beta) cell exactly; the heavier
fixtures below exploit that to keep the suite fast while still exercising
the public pipeline.
"""

from __future__ import annotations

import numpy as np
import pytest

from polaronix import (
    BathSpec,
    KernelTable,
    compute_kernels,
    compute_rates,
    make_lag_grid,
)

DEFAULT_DT = 0.01
DEFAULT_TMAX = 20.0
EXPONENTS = (0.5, 1.0, 2.0)


def unit_kernels(s: float, lag_grid) -> KernelTable:
    """Single-bath kernel table at unit coupling and exponent s."""
    return compute_kernels(
        BathSpec(1.0, s), BathSpec(0.0, s), lag_grid
    )


def scaled_kernels(bank: dict, s: float, s_prime: float,
                   alpha: float, beta: float, dt: float) -> KernelTable:
    """Two-bath kernel table assembled from the unit-coupling bank."""
    ka = bank[(s, dt)]
    kb = bank[(s_prime, dt)]
    phi_c = alpha * ka.phi_c + beta * kb.phi_c
    phi_s = alpha * ka.phi_s + beta * kb.phi_s
    phi_s[0] = 0.0
    return KernelTable(
        lag_grid=ka.lag_grid,
        phi_c=phi_c,
        phi_s=phi_s,
        bath1=BathSpec(alpha, s),
        bath2=BathSpec(beta, s_prime),
    )


def scaled_rates(bank: dict, s: float, s_prime: float,
                 alpha: float, beta: float, dt: float, J: float = 1.0):
    kernels = scaled_kernels(bank, s, s_prime, alpha, beta, dt)
    jtilde = J * float(np.exp(-0.5 * kernels.phi_c0))
    return compute_rates(kernels, jtilde)


@pytest.fixture(scope="session")
def kernel_bank():
    """Unit-coupling kernel tables for every exponent at dt and dt/2."""
    bank = {}
    for dt in (DEFAULT_DT, DEFAULT_DT / 2.0):
        grid = make_lag_grid(dt, DEFAULT_TMAX)
        for s in EXPONENTS:
            bank[(s, dt)] = unit_kernels(s, grid)
    return bank


@pytest.fixture(scope="session")
def default_kernels(kernel_bank):
    """Two super-Ohmic baths at alpha = beta = 1 on the default grid."""
    return scaled_kernels(kernel_bank, 2.0, 2.0, 1.0, 1.0, DEFAULT_DT)


@pytest.fixture(scope="session")
def default_rates(default_kernels):
    jtilde = float(np.exp(-0.5 * default_kernels.phi_c0))
    return compute_rates(default_kernels, jtilde)
