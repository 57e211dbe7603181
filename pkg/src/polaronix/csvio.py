"""CSV and manifest emission.

All simulation data leaves the package as RFC-4180-style CSV: header row,
CRLF line endings, '.' decimal point, shortest round-trip float formatting.
Every data file is accompanied by a ``<name>.manifest.json`` recording the
full parameter set, tool version and wall time, sufficient to reproduce the
file exactly.
"""

from __future__ import annotations

import csv
import json
import time
from pathlib import Path

import numpy as np

from . import __version__
from .dynamics import Trajectory
from .nonmarkov import SweepResult
from .rates import RateTable
from .spectral import KernelTable

__all__ = [
    "write_kernels_csv",
    "write_rates_csv",
    "write_trajectory_csv",
    "write_sweep_csv",
    "write_manifest",
]

KERNEL_COLUMNS = ["t", "phi_c", "phi_s"]
RATE_COLUMNS = [
    "t", "gamma_plus", "gamma_minus", "zeta", "gamma0", "gamma1", "gamma2",
    "int_gamma0", "int_gamma1", "int_gamma2",
]
TRAJECTORY_COLUMNS = [
    "t", "rho_ss", "rho_tt", "re_rho_st", "im_rho_st", "p_diff", "coherence",
]
SWEEP_COLUMNS = ["s", "s_prime", "alpha", "beta", "nm", "horizon", "valid"]


def _fmt(x) -> str:
    return repr(float(x))


def _write_table(path: Path, header: list[str], columns: list[np.ndarray]):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in zip(*columns):
            writer.writerow([_fmt(x) for x in row])


def write_kernels_csv(path, kernels: KernelTable):
    _write_table(Path(path), KERNEL_COLUMNS,
                 [kernels.lag_grid, kernels.phi_c, kernels.phi_s])


def write_rates_csv(path, rates: RateTable):
    _write_table(Path(path), RATE_COLUMNS, [
        rates.time_grid, rates.gamma_plus, rates.gamma_minus, rates.zeta,
        rates.gamma0, rates.gamma1, rates.gamma2,
        rates.int_gamma0, rates.int_gamma1, rates.int_gamma2,
    ])


def write_trajectory_csv(path, traj: Trajectory):
    _write_table(Path(path), TRAJECTORY_COLUMNS, [
        traj.time_grid, traj.rho_ss, traj.rho_tt,
        traj.rho_st.real, traj.rho_st.imag, traj.p_diff, traj.coherence,
    ])


def write_sweep_csv(path, result: SweepResult):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_COLUMNS)
        for i, alpha in enumerate(result.alpha_grid):
            for j, beta in enumerate(result.beta_grid):
                writer.writerow([
                    _fmt(result.s), _fmt(result.s_prime),
                    _fmt(alpha), _fmt(beta),
                    _fmt(result.nm_values[i, j]),
                    _fmt(result.horizon),
                    "true" if result.valid[i, j] else "false",
                ])


def write_manifest(path, command: str, parameters: dict, outputs: list[str],
                   wall_time_s: float):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    manifest = {
        "tool": "polaronix",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "outputs": outputs,
        "wall_time_s": wall_time_s,
        "written_at": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    }
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
