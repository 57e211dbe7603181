"""Qubit dynamics: both evolvers, conservation laws, observables."""

import dataclasses
import logging

import numpy as np
import pytest

from polaronix import (
    ConfigError,
    QubitState,
    RateTable,
    default_initial_state,
    evolve_closed_form,
    evolve_ode,
    observables,
)


def constant_rate_table(gamma0, gamma_plus, gamma_minus, dt=0.01, tmax=5.0):
    """Synthetic table with time-independent rates, for analytic checks."""
    t = np.arange(int(round(tmax / dt)) + 1) * dt
    const = lambda v: np.full_like(t, float(v))
    g0 = const(gamma0)
    g1 = const(2.0 * gamma_plus + gamma_minus)
    g2 = const(4.0 * gamma_plus)
    return RateTable(
        time_grid=t,
        gamma_plus=const(gamma_plus),
        gamma_minus=const(gamma_minus),
        zeta=const(0.0),
        gamma0=g0,
        gamma1=g1,
        gamma2=g2,
        int_gamma0=g0 * t,
        int_gamma1=g1 * t,
        int_gamma2=g2 * t,
        jtilde=1.0,
    )


class TestQubitState:
    def test_default_initial_state(self):
        state = default_initial_state()
        assert state.rho_ss == pytest.approx(2.0 / 3.0)
        assert state.rho_tt == pytest.approx(1.0 / 3.0)
        assert state.rho_st == pytest.approx(np.sqrt(2.0) / 3.0)

    def test_rejects_trace_violation(self):
        with pytest.raises(ConfigError, match="trace"):
            QubitState(0.6, 0.3, 0.0j)

    def test_rejects_population_out_of_range(self):
        with pytest.raises(ConfigError):
            QubitState(1.2, -0.2, 0.0j)


class TestEvolvers:
    def test_agree_on_default_rates(self, default_rates):
        state0 = default_initial_state()
        ode = evolve_ode(state0, default_rates)
        closed = evolve_closed_form(state0, default_rates)
        for name in ("rho_ss", "rho_tt", "p_diff", "coherence"):
            np.testing.assert_allclose(
                getattr(ode, name), getattr(closed, name), atol=1e-8
            )
        np.testing.assert_allclose(ode.rho_st, closed.rho_st, atol=1e-8)

    def test_constant_rates_against_analytic_decay(self):
        rates = constant_rate_table(gamma0=0.3, gamma_plus=0.2,
                                    gamma_minus=0.1)
        state0 = QubitState(0.9, 0.1, complex(0.2, 0.1))
        traj = evolve_ode(state0, rates)
        t = rates.time_grid
        np.testing.assert_allclose(
            traj.p_diff, 0.8 * np.exp(-0.6 * t), rtol=1e-9
        )
        np.testing.assert_allclose(
            traj.rho_st.real, 0.2 * np.exp(-0.5 * t), rtol=1e-9
        )
        np.testing.assert_allclose(
            traj.rho_st.imag, 0.1 * np.exp(-0.8 * t), rtol=1e-9
        )

    def test_real_initial_coherence_stays_real(self, default_rates):
        traj = evolve_ode(default_initial_state(), default_rates)
        assert np.all(traj.rho_st.imag == 0.0)

    def test_trace_preserved(self, default_rates):
        traj = evolve_ode(default_initial_state(), default_rates)
        np.testing.assert_allclose(
            traj.rho_ss + traj.rho_tt, 1.0, atol=1e-12
        )

    def test_zeta_never_enters_the_dynamics(self, default_rates):
        state0 = default_initial_state()
        zeroed = dataclasses.replace(
            default_rates, zeta=np.zeros_like(default_rates.zeta)
        )
        a = evolve_ode(state0, default_rates)
        b = evolve_ode(state0, zeroed)
        assert a.rho_st.tobytes() == b.rho_st.tobytes()
        assert a.rho_ss.tobytes() == b.rho_ss.tobytes()

    def test_state_at_roundtrip(self, default_rates):
        traj = evolve_ode(default_initial_state(), default_rates)
        state = traj.state_at(10)
        assert state.rho_ss == traj.rho_ss[10]
        assert state.rho_st == traj.rho_st[10]

    def test_observables_match_stored_series(self, default_rates):
        traj = evolve_closed_form(default_initial_state(), default_rates)
        p_diff, coherence = observables(traj)
        np.testing.assert_array_equal(p_diff, traj.p_diff)
        np.testing.assert_array_equal(coherence, traj.coherence)

    def test_positivity_violation_is_logged_not_clipped(self, caplog):
        # A constant negative gamma0 amplifies the population difference
        # past the physical range; the trajectory must report it verbatim.
        rates = constant_rate_table(gamma0=-1.0, gamma_plus=0.0,
                                    gamma_minus=0.0, tmax=2.0)
        state0 = QubitState(0.7, 0.3, 0.0j)
        with caplog.at_level(logging.WARNING, logger="polaronix.dynamics"):
            traj = evolve_closed_form(state0, rates)
        assert any("positivity" in rec.message for rec in caplog.records)
        assert traj.p_diff[-1] == pytest.approx(0.4 * np.exp(4.0), rel=1e-12)
