"""Named parameter presets for the trajectory and sweep pipelines.

Trajectory presets pair a bath-exponent combination with a coupling regime:

    =======  =====  ======   =========================
    family   s      s'       bath combination
    =======  =====  ======   =========================
    fig2     2.0    2.0      super-Ohmic / super-Ohmic
    fig3     1.0    2.0      Ohmic / super-Ohmic
    fig4     0.5    0.5      sub-Ohmic / sub-Ohmic
    fig6     0.5    2.0      sub-Ohmic / super-Ohmic
    fig7     1.0    1.0      Ohmic / Ohmic
    fig8     0.5    1.0      sub-Ohmic / Ohmic
    fig9     1.0    2.0      Ohmic / super-Ohmic (coupling scan)
    =======  =====  ======   =========================

with coupling variants ``weak`` (alpha = beta = 0.1), ``mid`` (1.0) and
``strong`` (5.0), e.g. ``fig2-strong``.  Sweep presets ``fig5a`` .. ``fig5f``
cover the six exponent pairs of the coupling-plane panels, 32x32 cells over
alpha, beta in [0.1, 5].
"""

from __future__ import annotations

from .errors import ConfigError

__all__ = [
    "EVOLVE_FAMILIES",
    "COUPLING_VARIANTS",
    "SWEEP_PANELS",
    "evolve_preset",
    "sweep_preset",
    "preset_names",
]

EVOLVE_FAMILIES = {
    "fig2": (2.0, 2.0),
    "fig3": (1.0, 2.0),
    "fig4": (0.5, 0.5),
    "fig6": (0.5, 2.0),
    "fig7": (1.0, 1.0),
    "fig8": (0.5, 1.0),
    "fig9": (1.0, 2.0),
}

COUPLING_VARIANTS = {"weak": 0.1, "mid": 1.0, "strong": 5.0}

SWEEP_PANELS = {
    "fig5a": (0.5, 0.5),
    "fig5b": (0.5, 1.0),
    "fig5c": (0.5, 2.0),
    "fig5d": (1.0, 1.0),
    "fig5e": (1.0, 2.0),
    "fig5f": (2.0, 2.0),
}

_BASE = {
    "model": {"j": 1.0, "omega": 1.0, "omega_min": 1e-3},
    "grid": {"dt": 0.01, "t_max": 20.0},
    "initial_state": {
        "rho_ss": 2.0 / 3.0,
        "rho_tt": 1.0 / 3.0,
        "re_rho_st": 0.47140452079103173,  # sqrt(2)/3
        "im_rho_st": 0.0,
    },
}


def _base_config() -> dict:
    return {key: dict(val) for key, val in _BASE.items()}


def evolve_preset(name: str) -> dict:
    """Config dict for a trajectory preset like ``fig4-mid``."""
    try:
        family, variant = name.split("-", 1)
        s, s_prime = EVOLVE_FAMILIES[family]
        coupling = COUPLING_VARIANTS[variant]
    except (ValueError, KeyError):
        raise ConfigError(
            f"unknown evolve preset {name!r}; expected "
            f"<family>-<variant> with family in {sorted(EVOLVE_FAMILIES)} "
            f"and variant in {sorted(COUPLING_VARIANTS)}"
        ) from None
    config = _base_config()
    config["bath1"] = {"coupling": coupling, "exponent": s}
    config["bath2"] = {"coupling": coupling, "exponent": s_prime}
    return config


def sweep_preset(name: str) -> dict:
    """Config dict for one coupling-plane panel, ``fig5a`` .. ``fig5f``."""
    try:
        s, s_prime = SWEEP_PANELS[name]
    except KeyError:
        raise ConfigError(
            f"unknown sweep preset {name!r}; expected one of "
            f"{sorted(SWEEP_PANELS)}"
        ) from None
    config = _base_config()
    config["bath1"] = {"coupling": 0.1, "exponent": s}
    config["bath2"] = {"coupling": 0.1, "exponent": s_prime}
    config["sweep"] = {
        "alpha_min": 0.1, "alpha_max": 5.0, "alpha_count": 32,
        "beta_min": 0.1, "beta_max": 5.0, "beta_count": 32,
        "horizon": 20.0,
    }
    return config


def preset_names() -> list[str]:
    names = [
        f"{family}-{variant}"
        for family in EVOLVE_FAMILIES
        for variant in COUPLING_VARIANTS
    ]
    names.extend(SWEEP_PANELS)
    return names
