"""Time-local decay rates of the dressed qubit.

With the bath correlation functions expressed through the lag kernels, the
second-order time-local generator carries two decay channels and one
frequency-shift function,

    Gamma_pm(t) = 2 jtilde**2 * int_0^t du [exp(+-phi_c(u)) cos(phi_s(u)) - 1]
    zeta(t)     =   jtilde**2 * int_0^t du  exp(phi_c(u)) sin(phi_s(u)),

where u = t - tau.  Because the integrands depend on the lag alone, a single
cumulative pass over the kernel table yields the rates at every grid time at
once.  The dynamics only ever consumes the composites

    gamma0 = (2*Gamma_plus - Gamma_minus) / 2
    gamma1 = 2*Gamma_plus + Gamma_minus
    gamma2 = 4*Gamma_plus

and their running integrals, which are tabulated here as well.

All exponentials are evaluated as exp(phi_c(u) + 2*log(jtilde)); since
phi_c(u) <= phi_c(0) for nonnegative couplings, the combined exponent never
exceeds 2*log(J) and strong-coupling tables (phi_c(0) of several hundred)
stay in range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, GridError
from .spectral import KernelTable

__all__ = ["RateTable", "bath_correlation", "compute_rates"]


@dataclass(frozen=True)
class RateTable:
    """Decay rates, composites and cumulative integrals on the time grid."""

    time_grid: np.ndarray
    gamma_plus: np.ndarray
    gamma_minus: np.ndarray
    zeta: np.ndarray
    gamma0: np.ndarray
    gamma1: np.ndarray
    gamma2: np.ndarray
    int_gamma0: np.ndarray
    int_gamma1: np.ndarray
    int_gamma2: np.ndarray
    jtilde: float

    @property
    def spacing(self) -> float:
        return float(self.time_grid[1] - self.time_grid[0])


def _lag_index(kernels: KernelTable, u: float) -> int:
    h = kernels.spacing if kernels.lag_grid.size > 1 else 1.0
    i = int(round(u / h))
    if i < 0 or i >= kernels.lag_grid.size or abs(u - i * h) > 1e-9 * max(h, 1.0):
        raise GridError(f"lag u={u} is not on the kernel grid (spacing {h})")
    return i


def bath_correlation(kernels: KernelTable, u: float, sign: str) -> complex:
    """Vacuum bath correlation at lag u: exp(sigma*phi_c(u) + i*phi_s(u)) - 1.

    ``sign`` selects sigma = +1 ('+') or -1 ('-'); the real part
    exp(sigma*phi_c(u)) * cos(phi_s(u)) - 1 is the Gamma_sigma integrand.
    The lag must lie on the kernel grid; interpolation is not performed.
    """
    if sign == "+":
        sigma = 1.0
    elif sign == "-":
        sigma = -1.0
    else:
        raise ConfigError(f"sign must be '+' or '-', got {sign!r}")
    i = _lag_index(kernels, u)
    phi_c = float(kernels.phi_c[i])
    phi_s = float(kernels.phi_s[i])
    return complex(np.exp(sigma * phi_c) * np.cos(phi_s) - 1.0,
                   np.exp(sigma * phi_c) * np.sin(phi_s))


def _cumtrapz(values: np.ndarray, h: float) -> np.ndarray:
    out = np.empty_like(values)
    out[0] = 0.0
    np.cumsum(0.5 * h * (values[1:] + values[:-1]), out=out[1:])
    return out


def compute_rates(kernels: KernelTable, jtilde: float) -> RateTable:
    """Cumulative-trapezoid evaluation of the rates over the kernel table.

    The returned time grid coincides with the kernel lag grid; all rate
    arrays vanish at t = 0.
    """
    if not jtilde > 0.0:
        raise ConfigError(f"jtilde must be > 0, got {jtilde}")
    if kernels.lag_grid.size < 2:
        raise GridError("kernel table must cover at least two grid points")

    h = kernels.spacing
    log_j2 = 2.0 * np.log(jtilde)
    j2 = jtilde * jtilde
    cos_phi = np.cos(kernels.phi_s)
    sin_phi = np.sin(kernels.phi_s)
    # jtilde**2 * exp(+-phi_c) folded into one exponent to avoid overflow
    w_plus = np.exp(kernels.phi_c + log_j2)
    w_minus = np.exp(-kernels.phi_c + log_j2)

    gamma_plus = 2.0 * _cumtrapz(w_plus * cos_phi - j2, h)
    gamma_minus = 2.0 * _cumtrapz(w_minus * cos_phi - j2, h)
    zeta = _cumtrapz(w_plus * sin_phi, h)

    gamma0 = (2.0 * gamma_plus - gamma_minus) / 2.0
    gamma1 = 2.0 * gamma_plus + gamma_minus
    gamma2 = 4.0 * gamma_plus

    return RateTable(
        time_grid=kernels.lag_grid,
        gamma_plus=gamma_plus,
        gamma_minus=gamma_minus,
        zeta=zeta,
        gamma0=gamma0,
        gamma1=gamma1,
        gamma2=gamma2,
        int_gamma0=_cumtrapz(gamma0, h),
        int_gamma1=_cumtrapz(gamma1, h),
        int_gamma2=_cumtrapz(gamma2, h),
        jtilde=float(jtilde),
    )
