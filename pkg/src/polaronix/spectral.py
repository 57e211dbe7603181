"""Bath spectral densities, lag kernels and the renormalized hopping.

Each site of the two-site qubit couples to its own phonon bath with spectral
density

    J(omega) = coupling * omega**exponent * exp(-omega**2 / uv_cutoff**2),

i.e. a power law with a Gaussian high-frequency cutoff.  Everything downstream
(decay rates, dynamics, the backflow measure) is driven by the two lag
kernels

    phi_c(u) = int_{ir}^{inf} domega  [J1(omega) + J2(omega)] cos(omega u) / omega**2
    phi_s(u) = int_{ir}^{inf} domega  [J1(omega) + J2(omega)] sin(omega u) / omega**2

sampled on a uniform lag grid, and by the dressed hopping amplitude
jtilde = J * exp(-phi_c(0) / 2).

For exponent <= 1 the kernel integrand behaves like omega**(exponent - 2)
at the origin and is not integrable, so a strictly positive infrared cutoff
is mandatory in that regime (default 1e-3 in units of the UV cutoff).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, QuadratureError

__all__ = [
    "BathSpec",
    "KernelTable",
    "DEFAULT_IR_CUTOFF",
    "spectral_density",
    "compute_kernels",
    "renormalized_hopping",
    "make_lag_grid",
]

#: Default infrared regularization floor, in units of the UV cutoff.
DEFAULT_IR_CUTOFF = 1e-3

# The Gaussian factor exp(-omega**2/Omega**2) is below 3e-16 at omega = 6*Omega,
# so truncating there keeps the neglected tail under 1e-14 of the integral for
# every exponent up to 3.
_UV_TRUNCATION_FACTOR = 6.0

_GAUSS_ORDER = 12
_MAX_REFINEMENTS = 12
_QUAD_RTOL = 1e-8


@dataclass(frozen=True)
class BathSpec:
    """Spectral law of one phonon bath.

    Parameters
    ----------
    coupling : float
        Dimensionless coupling strength (>= 0).
    exponent : float
        Power-law exponent; sub-Ohmic for < 1, Ohmic at 1, super-Ohmic for > 1.
    uv_cutoff : float
        Gaussian cutoff frequency (> 0); also the frequency unit.
    ir_cutoff : float
        Lower integration limit for the kernel integrals.  Must be positive
        whenever ``exponent <= 1``.
    """

    coupling: float
    exponent: float
    uv_cutoff: float = 1.0
    ir_cutoff: float = DEFAULT_IR_CUTOFF

    def __post_init__(self):
        if not self.coupling >= 0.0:
            raise ConfigError(f"coupling must be >= 0, got {self.coupling}")
        if not self.exponent > 0.0:
            raise ConfigError(f"exponent must be > 0, got {self.exponent}")
        if not self.uv_cutoff > 0.0:
            raise ConfigError(f"uv_cutoff must be > 0, got {self.uv_cutoff}")
        if not 0.0 <= self.ir_cutoff < self.uv_cutoff:
            raise ConfigError(
                f"ir_cutoff must satisfy 0 <= ir_cutoff < uv_cutoff, "
                f"got {self.ir_cutoff}"
            )


@dataclass(frozen=True)
class KernelTable:
    """Cosine and sine lag kernels sampled on a uniform lag grid."""

    lag_grid: np.ndarray
    phi_c: np.ndarray
    phi_s: np.ndarray
    bath1: BathSpec
    bath2: BathSpec

    @property
    def spacing(self) -> float:
        return float(self.lag_grid[1] - self.lag_grid[0])

    @property
    def phi_c0(self) -> float:
        """Zero-lag cosine kernel, the exponent of the hopping dressing."""
        return float(self.phi_c[0])


def spectral_density(bath: BathSpec, omega):
    """Evaluate J(omega) = coupling * omega**exponent * exp(-omega**2/Omega**2).

    Accepts scalars or arrays; omega must be >= 0.  Returns 0 at omega = 0
    (the exponent is strictly positive).
    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega < 0.0):
        raise ConfigError("spectral_density requires omega >= 0")
    # 0**exponent is 0 for exponent > 0, so no special-casing is needed,
    # but guard the 0**s warning path for fractional exponents.
    with np.errstate(invalid="ignore"):
        result = (
            bath.coupling
            * np.power(omega, bath.exponent)
            * np.exp(-((omega / bath.uv_cutoff) ** 2))
        )
    result = np.where(omega == 0.0, 0.0, result)
    if result.ndim == 0:
        return float(result)
    return result


def make_lag_grid(spacing: float, t_max: float) -> np.ndarray:
    """Uniform grid 0, h, 2h, ... covering [0, t_max]."""
    if spacing <= 0.0 or t_max <= 0.0:
        raise ConfigError("grid spacing and t_max must be positive")
    n = int(round(t_max / spacing))
    if abs(n * spacing - t_max) > 1e-9 * max(1.0, t_max):
        raise ConfigError(f"t_max={t_max} is not a multiple of spacing={spacing}")
    return np.arange(n + 1) * spacing


def _check_kernel_preconditions(bath1: BathSpec, bath2: BathSpec):
    for label, bath in (("bath1", bath1), ("bath2", bath2)):
        if bath.coupling == 0.0:
            continue
        if bath.exponent <= 1.0 and bath.ir_cutoff == 0.0:
            raise ConfigError(
                f"{label}: exponent {bath.exponent} <= 1 with zero infrared "
                f"cutoff makes the kernel integral of omega**(s-2) divergent "
                f"at omega -> 0; set a positive ir_cutoff"
            )
    if bath1.uv_cutoff != bath2.uv_cutoff:
        raise ConfigError(
            "the two baths must share one UV cutoff "
            f"(got {bath1.uv_cutoff} and {bath2.uv_cutoff})"
        )


def _panel_edges(bath: BathSpec, max_lag: float, refine: int) -> np.ndarray:
    """Panel edges for Gauss-Legendre integration of the kernel integrand.

    Panels are graded geometrically near the infrared cutoff, where the
    integrand of a sub-Ohmic bath is steep, and are capped at a quarter of
    the oscillation wavelength 2*pi/max_lag so the cosine/sine factor is
    resolved uniformly at the largest lag.
    """
    lo = bath.ir_cutoff
    hi = _UV_TRUNCATION_FACTOR * bath.uv_cutoff
    h_osc = np.inf if max_lag <= 0.0 else 0.25 * (2.0 * np.pi / max_lag)
    h_max = min(0.25 * bath.uv_cutoff, h_osc) / 2.0**refine

    edges = [lo]
    # geometric grading out of the infrared region
    w = max(lo, 1e-6 * bath.uv_cutoff) * 0.5**refine
    x = lo
    while x + w < min(0.5 * bath.uv_cutoff, hi):
        x = x + w
        edges.append(x)
        w *= 1.5
        if w > h_max:
            w = h_max
    # uniform panels across the rest of the range
    n_uniform = max(1, int(np.ceil((hi - x) / h_max)))
    edges.extend(x + (hi - x) * np.arange(1, n_uniform + 1) / n_uniform)
    return np.asarray(edges)


def _gauss_nodes(edges: np.ndarray):
    """Gauss-Legendre nodes and weights on each panel, flattened."""
    x, w = np.polynomial.legendre.leggauss(_GAUSS_ORDER)
    a = edges[:-1]
    b = edges[1:]
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _bath_kernels_once(bath: BathSpec, lag_grid: np.ndarray, refine: int):
    nodes, weights = _gauss_nodes(_panel_edges(bath, float(lag_grid[-1]), refine))
    g = spectral_density(bath, nodes) / nodes**2 * weights
    # phase matrix in lag-chunks to bound memory on long grids
    phi_c = np.empty_like(lag_grid)
    phi_s = np.empty_like(lag_grid)
    chunk = max(1, 8_000_000 // max(1, nodes.size))
    for i in range(0, lag_grid.size, chunk):
        arg = np.outer(lag_grid[i : i + chunk], nodes)
        phi_c[i : i + chunk] = np.cos(arg) @ g
        phi_s[i : i + chunk] = np.sin(arg) @ g
    return phi_c, phi_s


def _bath_kernels(bath: BathSpec, lag_grid: np.ndarray):
    """Lag kernels of a single bath, adaptively refined to _QUAD_RTOL."""
    if bath.coupling == 0.0:
        return np.zeros_like(lag_grid), np.zeros_like(lag_grid)
    phi_c, phi_s = _bath_kernels_once(bath, lag_grid, refine=0)
    for refine in range(1, _MAX_REFINEMENTS + 1):
        phi_c_f, phi_s_f = _bath_kernels_once(bath, lag_grid, refine)
        scale = max(np.max(np.abs(phi_c_f)), np.max(np.abs(phi_s_f)), 1e-300)
        # relative per point where the kernel is significant, absolute
        # (at 1e-3 of the overall scale) in the underflowing tails
        denom_c = np.abs(phi_c_f) + 1e-3 * scale
        denom_s = np.abs(phi_s_f) + 1e-3 * scale
        err = max(
            np.max(np.abs(phi_c_f - phi_c) / denom_c),
            np.max(np.abs(phi_s_f - phi_s) / denom_s),
        )
        phi_c, phi_s = phi_c_f, phi_s_f
        if err <= _QUAD_RTOL:
            return phi_c, phi_s
    raise QuadratureError(
        f"kernel quadrature did not converge to {_QUAD_RTOL} after "
        f"{_MAX_REFINEMENTS} refinements (exponent={bath.exponent}, "
        f"ir_cutoff={bath.ir_cutoff})"
    )


def compute_kernels(bath1: BathSpec, bath2: BathSpec, lag_grid) -> KernelTable:
    """Quadrature evaluation of phi_c and phi_s on a uniform lag grid.

    The two baths contribute additively; each is integrated from its own
    infrared cutoff up to 6 times the shared UV cutoff, beyond which the
    Gaussian factor makes the tail negligible (< 1e-14 of the total).
    """
    _check_kernel_preconditions(bath1, bath2)
    lag_grid = np.asarray(lag_grid, dtype=float)
    if lag_grid.ndim != 1 or lag_grid.size < 1 or lag_grid[0] != 0.0:
        raise ConfigError("lag grid must be one-dimensional and start at 0")
    if lag_grid.size > 1:
        steps = np.diff(lag_grid)
        if np.any(steps <= 0) or np.max(np.abs(steps - steps[0])) > 1e-9 * steps[0]:
            raise ConfigError("lag grid must be strictly increasing and uniform")

    c1, s1 = _bath_kernels(bath1, lag_grid)
    c2, s2 = _bath_kernels(bath2, lag_grid)
    phi_c = c1 + c2
    phi_s = s1 + s2
    phi_s[0] = 0.0  # sin(0) = 0 exactly, independent of quadrature noise
    return KernelTable(
        lag_grid=lag_grid, phi_c=phi_c, phi_s=phi_s, bath1=bath1, bath2=bath2
    )


def renormalized_hopping(J: float, bath1: BathSpec, bath2: BathSpec) -> float:
    """Dressed hopping amplitude jtilde = J * exp(-phi_c(0) / 2).

    Equals J for uncoupled baths and decreases strictly in each coupling.
    """
    if not J > 0.0:
        raise ConfigError(f"bare hopping J must be > 0, got {J}")
    table = compute_kernels(bath1, bath2, np.array([0.0]))
    return J * float(np.exp(-0.5 * table.phi_c0))
