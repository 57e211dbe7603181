"""Command-line front end.

Subcommands
-----------
kernels     compute the lag kernels, write ``kernels.csv``
rates       compute kernels and decay rates, write ``rates.csv``
evolve      full trajectory run, write ``trajectory.csv`` and ``rates.csv``
sweep       non-Markovianity over the coupling plane, write ``sweep.csv``
oracle-gen  brute-force reference values (slow; for cross-checks)

Parameters come from a TOML config file (``--config``), a named preset
(``--preset``, see `polaronix.presets`), or both defaults; ``--dt``,
``--tmax``, ``--out`` and ``--workers`` override.  Every CSV is accompanied
by a JSON manifest recording the exact parameters.  Exit code 2 flags a
configuration problem, 3 a numerical failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dynamics import QubitState, evolve_ode
from .errors import ConfigError, PolaronixError, QuadratureError
from .nonmarkov import sweep as run_sweep
from .oracle import brute_force_rates, discrete_kernels, discretize_bath
from .presets import evolve_preset, preset_names, sweep_preset
from .rates import compute_rates
from .spectral import BathSpec, compute_kernels, make_lag_grid, renormalized_hopping
from . import csvio

EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


@dataclass
class RunConfig:
    """Validated run parameters for every subcommand."""

    j: float = 1.0
    omega: float = 1.0
    omega_min: float = 1e-3
    bath1_coupling: float = 0.0
    bath1_exponent: float = 1.0
    bath2_coupling: float = 0.0
    bath2_exponent: float = 1.0
    dt: float = 0.01
    t_max: float = 20.0
    rho_ss: float = 2.0 / 3.0
    rho_tt: float = 1.0 / 3.0
    re_rho_st: float = 0.47140452079103173
    im_rho_st: float = 0.0
    alpha_grid: list = field(default_factory=list)
    beta_grid: list = field(default_factory=list)
    horizon: float = 20.0
    out_dir: str = "."
    prefix: str = ""
    workers: int = 1

    def bath1(self) -> BathSpec:
        return BathSpec(self.bath1_coupling, self.bath1_exponent,
                        self.omega, self.omega_min)

    def bath2(self) -> BathSpec:
        return BathSpec(self.bath2_coupling, self.bath2_exponent,
                        self.omega, self.omega_min)

    def initial_state(self) -> QubitState:
        return QubitState(self.rho_ss, self.rho_tt,
                          complex(self.re_rho_st, self.im_rho_st))

    def as_dict(self) -> dict:
        return {
            "model": {"j": self.j, "omega": self.omega,
                      "omega_min": self.omega_min},
            "bath1": {"coupling": self.bath1_coupling,
                      "exponent": self.bath1_exponent},
            "bath2": {"coupling": self.bath2_coupling,
                      "exponent": self.bath2_exponent},
            "grid": {"dt": self.dt, "t_max": self.t_max},
            "initial_state": {"rho_ss": self.rho_ss, "rho_tt": self.rho_tt,
                              "re_rho_st": self.re_rho_st,
                              "im_rho_st": self.im_rho_st},
            "sweep": {"alpha_grid": list(self.alpha_grid),
                      "beta_grid": list(self.beta_grid),
                      "horizon": self.horizon},
            "output": {"directory": self.out_dir, "prefix": self.prefix},
        }


def _expand_sweep_grid(section: dict, axis: str) -> list:
    explicit = section.get(f"{axis}_grid")
    if explicit is not None:
        grid = [float(x) for x in explicit]
    else:
        try:
            lo = float(section[f"{axis}_min"])
            hi = float(section[f"{axis}_max"])
            count = int(section[f"{axis}_count"])
        except KeyError as exc:
            raise ConfigError(f"sweep section is missing {exc.args[0]}") from None
        if count < 1 or hi < lo:
            raise ConfigError(f"invalid sweep grid spec for {axis}")
        grid = list(np.linspace(lo, hi, count))
    if not grid:
        raise ConfigError(f"sweep {axis} grid is empty")
    return grid


def _config_from_dict(data: dict) -> RunConfig:
    cfg = RunConfig()
    model = data.get("model", {})
    cfg.j = float(model.get("j", cfg.j))
    cfg.omega = float(model.get("omega", cfg.omega))
    cfg.omega_min = float(model.get("omega_min", cfg.omega_min))
    for name in ("bath1", "bath2"):
        section = data.get(name, {})
        setattr(cfg, f"{name}_coupling",
                float(section.get("coupling", getattr(cfg, f"{name}_coupling"))))
        setattr(cfg, f"{name}_exponent",
                float(section.get("exponent", getattr(cfg, f"{name}_exponent"))))
    grid = data.get("grid", {})
    cfg.dt = float(grid.get("dt", cfg.dt))
    cfg.t_max = float(grid.get("t_max", cfg.t_max))
    state = data.get("initial_state", {})
    cfg.rho_ss = float(state.get("rho_ss", cfg.rho_ss))
    cfg.rho_tt = float(state.get("rho_tt", cfg.rho_tt))
    cfg.re_rho_st = float(state.get("re_rho_st", cfg.re_rho_st))
    cfg.im_rho_st = float(state.get("im_rho_st", cfg.im_rho_st))
    if "sweep" in data:
        cfg.alpha_grid = _expand_sweep_grid(data["sweep"], "alpha")
        cfg.beta_grid = _expand_sweep_grid(data["sweep"], "beta")
        cfg.horizon = float(data["sweep"].get("horizon", cfg.horizon))
    output = data.get("output", {})
    cfg.out_dir = str(output.get("directory", cfg.out_dir))
    cfg.prefix = str(output.get("prefix", cfg.prefix))
    return cfg


def _validate(cfg: RunConfig):
    if cfg.dt <= 0.0 or cfg.t_max <= 0.0:
        raise ConfigError("grid dt and t_max must be positive")
    if cfg.j <= 0.0:
        raise ConfigError("bare hopping j must be positive")
    for name, exponent in (("bath1", cfg.bath1_exponent),
                           ("bath2", cfg.bath2_exponent)):
        if exponent <= 1.0 and cfg.omega_min == 0.0:
            raise ConfigError(
                f"{name}: exponent {exponent} <= 1 requires a positive "
                f"infrared cutoff omega_min; the kernel integral of "
                f"omega**(exponent - 2) diverges at omega -> 0 otherwise"
            )
    # construct and validate the domain objects eagerly
    cfg.bath1()
    cfg.bath2()
    cfg.initial_state()


def load_config(args) -> RunConfig:
    data: dict = {}
    if args.preset:
        if args.preset.startswith("fig5"):
            data = sweep_preset(args.preset)
        else:
            data = evolve_preset(args.preset)
    if args.config:
        path = Path(args.config)
        if not path.exists():
            raise ConfigError(f"config file not found: {path}")
        with open(path, "rb") as fh:
            file_data = tomllib.load(fh)
        # file settings override preset settings section by section
        for key, section in file_data.items():
            data.setdefault(key, {}).update(section)
    cfg = _config_from_dict(data)
    if args.dt is not None:
        cfg.dt = args.dt
    if args.tmax is not None:
        cfg.t_max = args.tmax
    if args.out is not None:
        cfg.out_dir = args.out
    if args.workers is not None:
        cfg.workers = args.workers
    else:
        cfg.workers = int(os.environ.get("POLARONIX_WORKERS", "1"))
    _validate(cfg)
    return cfg


def _out_path(cfg: RunConfig, name: str) -> Path:
    return Path(cfg.out_dir) / f"{cfg.prefix}{name}"


def _emit_manifest(cfg: RunConfig, command: str, outputs: list[Path],
                   started: float):
    manifest_path = outputs[0].with_suffix(".manifest.json")
    csvio.write_manifest(
        manifest_path, command, cfg.as_dict(),
        [p.name for p in outputs], time.monotonic() - started,
    )


def _pipeline_tables(cfg: RunConfig):
    lag_grid = make_lag_grid(cfg.dt, cfg.t_max)
    bath1, bath2 = cfg.bath1(), cfg.bath2()
    kernels = compute_kernels(bath1, bath2, lag_grid)
    jtilde = cfg.j * float(np.exp(-0.5 * kernels.phi_c0))
    return kernels, jtilde


def cmd_kernels(cfg: RunConfig) -> list[Path]:
    started = time.monotonic()
    kernels, _ = _pipeline_tables(cfg)
    out = _out_path(cfg, "kernels.csv")
    csvio.write_kernels_csv(out, kernels)
    _emit_manifest(cfg, "kernels", [out], started)
    return [out]


def cmd_rates(cfg: RunConfig) -> list[Path]:
    started = time.monotonic()
    kernels, jtilde = _pipeline_tables(cfg)
    rates = compute_rates(kernels, jtilde)
    out = _out_path(cfg, "rates.csv")
    csvio.write_rates_csv(out, rates)
    _emit_manifest(cfg, "rates", [out], started)
    return [out]


def cmd_evolve(cfg: RunConfig) -> list[Path]:
    started = time.monotonic()
    kernels, jtilde = _pipeline_tables(cfg)
    rates = compute_rates(kernels, jtilde)
    traj = evolve_ode(cfg.initial_state(), rates)
    traj_out = _out_path(cfg, "trajectory.csv")
    rates_out = _out_path(cfg, "rates.csv")
    csvio.write_trajectory_csv(traj_out, traj)
    csvio.write_rates_csv(rates_out, rates)
    _emit_manifest(cfg, "evolve", [traj_out, rates_out], started)
    return [traj_out, rates_out]


def cmd_sweep(cfg: RunConfig) -> list[Path]:
    started = time.monotonic()
    if not cfg.alpha_grid or not cfg.beta_grid:
        raise ConfigError("sweep requires a [sweep] grid spec or a fig5 preset")
    result = run_sweep(
        s=cfg.bath1_exponent,
        s_prime=cfg.bath2_exponent,
        alpha_grid=cfg.alpha_grid,
        beta_grid=cfg.beta_grid,
        horizon=cfg.horizon,
        dt=cfg.dt,
        ir_cutoff=cfg.omega_min,
        uv_cutoff=cfg.omega,
        bare_hopping=cfg.j,
        state0=cfg.initial_state(),
        workers=cfg.workers,
    )
    out = _out_path(cfg, "sweep.csv")
    csvio.write_sweep_csv(out, result)
    _emit_manifest(cfg, "sweep", [out], started)
    return [out]


def cmd_oracle_gen(cfg: RunConfig) -> list[Path]:
    """Reference values from the brute-force validators (slow)."""
    started = time.monotonic()
    lag_grid = make_lag_grid(cfg.dt, cfg.t_max)
    bath1, bath2 = cfg.bath1(), cfg.bath2()
    kernels = discrete_kernels(
        discretize_bath(bath1, 20_000), discretize_bath(bath2, 20_000),
        lag_grid, bath1, bath2,
    )
    kern_out = _out_path(cfg, "oracle_kernels.csv")
    csvio.write_kernels_csv(kern_out, kernels)

    jtilde = renormalized_hopping(cfg.j, bath1, bath2)
    ref = compute_kernels(bath1, bath2, np.array([0.0]))
    times = np.linspace(0.0, cfg.t_max, 9)[1:]
    import csv as _csv
    rates_out = _out_path(cfg, "oracle_rates.csv")
    rates_out.parent.mkdir(parents=True, exist_ok=True)
    with open(rates_out, "w", newline="") as fh:
        writer = _csv.writer(fh)
        writer.writerow(["t", "gamma_plus", "gamma_minus", "zeta"])
        for t in times:
            gp, gm, zt = brute_force_rates(ref, jtilde, float(t))
            writer.writerow([repr(float(t)), repr(gp), repr(gm), repr(zt)])
    _emit_manifest(cfg, "oracle-gen", [kern_out, rates_out], started)
    return [kern_out, rates_out]


_COMMANDS = {
    "kernels": cmd_kernels,
    "rates": cmd_rates,
    "evolve": cmd_evolve,
    "sweep": cmd_sweep,
    "oracle-gen": cmd_oracle_gen,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polaronix",
        description="Dephasing and non-Markovianity of a polaron-dressed "
                    "two-site qubit",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", metavar="PATH",
                       help="TOML parameter file")
        p.add_argument("--preset", metavar="NAME",
                       help=f"named preset, one of: {', '.join(preset_names())}")
        p.add_argument("--out", metavar="DIR", help="output directory")
        p.add_argument("--workers", type=int, metavar="N",
                       help="parallel workers for sweep cells "
                            "(default: POLARONIX_WORKERS or 1)")
        p.add_argument("--dt", type=float, help="grid spacing override")
        p.add_argument("--tmax", type=float, help="time horizon override")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        outputs = _COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"polaronix: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (QuadratureError, PolaronixError, FloatingPointError) as exc:
        print(f"polaronix: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    for path in outputs:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
