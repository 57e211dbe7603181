"""Singlet-triplet dynamics of the dressed qubit.

In the single-fermion sector the master equation closes on three real
degrees of freedom: the populations rho_ss, rho_tt and the off-diagonal
element rho_ts = <T|rho|S>,

    d rho_tt / dt = -gamma0 * (rho_tt - rho_ss)
    d rho_ss / dt = -gamma0 * (rho_ss - rho_tt)
    d rho_ts / dt = -((Gm + 6 Gp)/2) rho_ts - ((Gm - 2 Gp)/2) conj(rho_ts)

with Gp = Gamma_plus, Gm = Gamma_minus.  The frequency-shift function zeta
multiplies a commutator with (n1 - n2)**2, which is the identity here, so it
drops out of the dynamics entirely.

Two evolvers are provided and cross-checked against each other: a fixed-step
RK4 integrator of the equations above (the canonical one) and the closed-form
solution driven by the cumulative rate integrals,

    P_D(t)        = P_D(0)       * exp(-2 * int_0^t gamma0)
    Re rho_st(t)  = Re rho_st(0) * exp(-    int_0^t gamma1)
    Im rho_st(t)  = Im rho_st(0) * exp(-    int_0^t gamma2).

The RK4 stepper samples rates only on the shared grid; the midpoint stage
uses the mean of the two enclosing grid samples, which keeps the stepper's
implied quadrature of the rate integral identical to the trapezoid rule used
by the closed form (and by the cumulative integrals), so the two evolvers
agree far below the grid truncation error.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .rates import RateTable

__all__ = [
    "QubitState",
    "Trajectory",
    "default_initial_state",
    "evolve_ode",
    "evolve_closed_form",
    "observables",
]

logger = logging.getLogger(__name__)

_TRACE_TOL = 1e-12
_POSITIVITY_TOL = 1e-9


@dataclass(frozen=True)
class QubitState:
    """Density matrix in the singlet-triplet sector.

    Stores rho_ss, rho_tt and rho_st = <S|rho|T>; the transposed element is
    implicitly conj(rho_st).
    """

    rho_ss: float
    rho_tt: float
    rho_st: complex

    def __post_init__(self):
        if not (0.0 <= self.rho_ss <= 1.0 and 0.0 <= self.rho_tt <= 1.0):
            raise ConfigError("populations must lie in [0, 1]")
        if abs(self.rho_ss + self.rho_tt - 1.0) > _TRACE_TOL:
            raise ConfigError(
                f"trace must be 1 within {_TRACE_TOL}, "
                f"got {self.rho_ss + self.rho_tt}"
            )


def default_initial_state() -> QubitState:
    """Superposition sqrt(2/3)|S> + sqrt(1/3)|T>."""
    return QubitState(
        rho_ss=2.0 / 3.0, rho_tt=1.0 / 3.0, rho_st=complex(np.sqrt(2.0) / 3.0)
    )


@dataclass(frozen=True)
class Trajectory:
    """Time series of the state plus the derived observables."""

    time_grid: np.ndarray
    rho_ss: np.ndarray
    rho_tt: np.ndarray
    rho_st: np.ndarray  # complex, <S|rho|T>
    p_diff: np.ndarray  # rho_ss - rho_tt
    coherence: np.ndarray  # 2 |rho_st|

    def state_at(self, i: int) -> QubitState:
        return QubitState(
            rho_ss=float(self.rho_ss[i]),
            rho_tt=float(self.rho_tt[i]),
            rho_st=complex(self.rho_st[i]),
        )


def _finalize(time_grid, rho_ss, rho_tt, rho_st) -> Trajectory:
    p_diff = rho_ss - rho_tt
    coherence = 2.0 * np.abs(rho_st)
    # TCL2 is not guaranteed completely positive; report violations, never clip
    det = rho_ss * rho_tt - np.abs(rho_st) ** 2
    bad = np.flatnonzero(det < -_POSITIVITY_TOL)
    if bad.size:
        i = bad[np.argmin(det[bad])]
        logger.warning(
            "positivity violated at %d grid points (worst at t=%g, "
            "det=%.3e); values reported unclipped",
            bad.size,
            time_grid[i],
            det[i],
        )
    return Trajectory(
        time_grid=time_grid,
        rho_ss=rho_ss,
        rho_tt=rho_tt,
        rho_st=rho_st,
        p_diff=p_diff,
        coherence=coherence,
    )


def evolve_ode(state0: QubitState, rates: RateTable) -> Trajectory:
    """Fixed-step RK4 integration of the population and coherence equations."""
    t = rates.time_grid
    n = t.size
    h = rates.spacing
    gp = rates.gamma_plus
    gm = rates.gamma_minus

    rho_ss = np.empty(n)
    rho_tt = np.empty(n)
    rho_ts = np.empty(n, dtype=complex)
    rho_ss[0] = state0.rho_ss
    rho_tt[0] = state0.rho_tt
    rho_ts[0] = np.conj(state0.rho_st)

    def deriv(g0, a, b, ss, tt, ts):
        d_tt = -g0 * (tt - ss)
        d_ss = -g0 * (ss - tt)
        d_ts = -a * ts - b * np.conj(ts)
        return d_ss, d_tt, d_ts

    for i in range(n - 1):
        g0_0 = rates.gamma0[i]
        g0_1 = rates.gamma0[i + 1]
        a0 = 0.5 * (gm[i] + 6.0 * gp[i])
        a1 = 0.5 * (gm[i + 1] + 6.0 * gp[i + 1])
        b0 = 0.5 * (gm[i] - 2.0 * gp[i])
        b1 = 0.5 * (gm[i + 1] - 2.0 * gp[i + 1])
        # midpoint rates as the mean of the enclosing grid samples
        g0_m = 0.5 * (g0_0 + g0_1)
        am = 0.5 * (a0 + a1)
        bm = 0.5 * (b0 + b1)

        ss, tt, ts = rho_ss[i], rho_tt[i], rho_ts[i]
        k1 = deriv(g0_0, a0, b0, ss, tt, ts)
        k2 = deriv(g0_m, am, bm, ss + 0.5 * h * k1[0], tt + 0.5 * h * k1[1],
                   ts + 0.5 * h * k1[2])
        k3 = deriv(g0_m, am, bm, ss + 0.5 * h * k2[0], tt + 0.5 * h * k2[1],
                   ts + 0.5 * h * k2[2])
        k4 = deriv(g0_1, a1, b1, ss + h * k3[0], tt + h * k3[1], ts + h * k3[2])

        rho_ss[i + 1] = ss + (h / 6.0) * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
        rho_tt[i + 1] = tt + (h / 6.0) * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
        rho_ts[i + 1] = ts + (h / 6.0) * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2])

    return _finalize(t, rho_ss, rho_tt, np.conj(rho_ts))


def evolve_closed_form(state0: QubitState, rates: RateTable) -> Trajectory:
    """Closed-form solution driven by the cumulative rate integrals."""
    t = rates.time_grid
    p0 = state0.rho_ss - state0.rho_tt
    p_diff = p0 * np.exp(-2.0 * rates.int_gamma0)
    rho_ss = 0.5 * (1.0 + p_diff)
    rho_tt = 0.5 * (1.0 - p_diff)
    rho_st = (
        state0.rho_st.real * np.exp(-rates.int_gamma1)
        + 1j * state0.rho_st.imag * np.exp(-rates.int_gamma2)
    )
    return _finalize(t, rho_ss, rho_tt, rho_st)


def observables(traj: Trajectory):
    """Population difference and l1 coherence series of a trajectory."""
    p_diff = traj.rho_ss - traj.rho_tt
    coherence = 2.0 * np.abs(traj.rho_st)
    return p_diff, coherence
