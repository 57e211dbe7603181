"""Brute-force validators for the kernel and rate pipelines.

Two deliberately slow, transparent reference computations:

* `discrete_kernels` rebuilds the lag kernels from an explicit set of bath
  modes, summing w_k cos(omega_k u) / omega_k**2 directly with weights
  w_k = J(omega_k) * d_omega on a uniform frequency grid.  No quadrature is
  involved, so agreement with the continuum pipeline checks both sides.

* `brute_force_rates` evaluates the decay rates in their original
  double-integral form over tau with adaptive quadrature, calling a fresh
  frequency quadrature for the kernels at every tau instead of reusing any
  table.

Both exist for tests and reference-value generation only; they are orders of
magnitude slower than the pipeline and that is fine.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import ConfigError, QuadratureError
from .spectral import (
    _UV_TRUNCATION_FACTOR,
    BathSpec,
    KernelTable,
    spectral_density,
)

__all__ = [
    "DiscreteBath",
    "discretize_bath",
    "discrete_kernels",
    "brute_force_rates",
]


@dataclass(frozen=True)
class DiscreteBath:
    """Explicit bath modes with weights |g_k|^2."""

    mode_freqs: np.ndarray
    mode_weights: np.ndarray

    def __post_init__(self):
        if self.mode_freqs.size == 0:
            raise ConfigError("discrete bath needs at least one mode")
        if self.mode_freqs.size != self.mode_weights.size:
            raise ConfigError("mode frequencies and weights differ in length")
        if np.any(self.mode_weights < 0.0) or np.any(self.mode_freqs <= 0.0):
            raise ConfigError("modes must have positive frequency, weight >= 0")


def discretize_bath(bath: BathSpec, n_modes: int,
                    omega_max: float | None = None) -> DiscreteBath:
    """Uniform discretization with midpoint modes and weights J(omega_k)*d_omega."""
    if n_modes < 1:
        raise ConfigError("n_modes must be >= 1")
    if omega_max is None:
        omega_max = _UV_TRUNCATION_FACTOR * bath.uv_cutoff
    d_omega = (omega_max - bath.ir_cutoff) / n_modes
    freqs = bath.ir_cutoff + (np.arange(n_modes) + 0.5) * d_omega
    weights = spectral_density(bath, freqs) * d_omega
    return DiscreteBath(mode_freqs=freqs, mode_weights=weights)


def _discrete_sum(db: DiscreteBath, lag_grid: np.ndarray, trig) -> np.ndarray:
    g = db.mode_weights / db.mode_freqs**2
    out = np.empty_like(lag_grid)
    chunk = max(1, 8_000_000 // db.mode_freqs.size)
    for i in range(0, lag_grid.size, chunk):
        out[i : i + chunk] = trig(
            np.outer(lag_grid[i : i + chunk], db.mode_freqs)
        ) @ g
    return out


def discrete_kernels(db1: DiscreteBath, db2: DiscreteBath, lag_grid,
                     bath1: BathSpec | None = None,
                     bath2: BathSpec | None = None) -> KernelTable:
    """Exact mode sums for phi_c and phi_s on the lag grid."""
    lag_grid = np.asarray(lag_grid, dtype=float)
    phi_c = _discrete_sum(db1, lag_grid, np.cos) + _discrete_sum(db2, lag_grid, np.cos)
    phi_s = _discrete_sum(db1, lag_grid, np.sin) + _discrete_sum(db2, lag_grid, np.sin)
    placeholder = BathSpec(0.0, 1.0)
    return KernelTable(
        lag_grid=lag_grid,
        phi_c=phi_c,
        phi_s=phi_s,
        bath1=bath1 if bath1 is not None else placeholder,
        bath2=bath2 if bath2 is not None else placeholder,
    )


def _kernel_point(bath1: BathSpec, bath2: BathSpec, u: float) -> tuple[float, float]:
    """Fresh adaptive quadrature of phi_c(u), phi_s(u), no table reuse."""
    phi = [0.0, 0.0]
    for bath in (bath1, bath2):
        if bath.coupling == 0.0:
            continue
        hi = _UV_TRUNCATION_FACTOR * bath.uv_cutoff

        def integrand_c(w, b=bath):
            return spectral_density(b, w) / w**2 * np.cos(w * u)

        def integrand_s(w, b=bath):
            return spectral_density(b, w) / w**2 * np.sin(w * u)

        for j, f in enumerate((integrand_c, integrand_s)):
            val, err = integrate.quad(
                f, bath.ir_cutoff, hi, limit=2000,
                epsabs=1e-13, epsrel=1e-11,
            )
            if err > 1e-7 * max(1.0, abs(val)):
                raise QuadratureError(
                    f"reference kernel quadrature at u={u} reported "
                    f"error {err} for value {val}"
                )
            phi[j] += val
    return phi[0], phi[1]


def brute_force_rates(kernels: KernelTable, jtilde: float,
                      t: float) -> tuple[float, float, float]:
    """Rates (Gamma_plus, Gamma_minus, zeta) at one time, from the tau-form
    double integral with adaptive quadrature at every tau.

    Only the bath specs are read off the kernel table; the sampled kernel
    values are never reused.
    """
    bath1, bath2 = kernels.bath1, kernels.bath2
    if t < 0.0:
        raise ConfigError("t must be >= 0")
    if t == 0.0:
        return 0.0, 0.0, 0.0

    def integrands(tau):
        phi_c, phi_s = _kernel_point(bath1, bath2, t - tau)
        return (
            np.exp(phi_c) * np.cos(phi_s) - 1.0,
            np.exp(-phi_c) * np.cos(phi_s) - 1.0,
            np.exp(phi_c) * np.sin(phi_s),
        )

    results = []
    for idx in range(3):
        val, err = integrate.quad(
            lambda tau: integrands(tau)[idx], 0.0, t,
            limit=500, epsabs=1e-12, epsrel=1e-10,
        )
        if err > 1e-6 * max(1.0, abs(val)):
            raise QuadratureError(
                f"reference rate quadrature at t={t} reported error {err}"
            )
        results.append(val)

    j2 = jtilde * jtilde
    return 2.0 * j2 * results[0], 2.0 * j2 * results[1], j2 * results[2]
