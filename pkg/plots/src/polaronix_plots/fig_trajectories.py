"""Four-panel population/coherence figure from trajectory CSVs.

Usage:  polaronix-fig-trajectories --in DIR --out PATH [--title TEXT]

Every ``trajectory.csv`` found under DIR becomes one line per panel,
labeled by its parent directory.  Panels: site populations, population
difference, l1 coherence, off-diagonal element.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from . import TRAJECTORY_COLUMNS
from .csvio import ContractError, find_inputs, load_csv


def render(in_dir: Path, out_path: Path, title: str | None = None) -> Path:
    inputs = find_inputs(in_dir, "trajectory.csv")
    fig, axes = plt.subplots(2, 2, figsize=(9, 7), sharex=True)
    (ax_pop, ax_pdiff), (ax_coh, ax_offdiag) = axes

    for path in inputs:
        data = load_csv(path, TRAJECTORY_COLUMNS)
        label = path.parent.name or path.stem
        t = data["t"]
        (line,) = ax_pop.plot(t, data["rho_ss"], label=f"{label} SS")
        ax_pop.plot(t, data["rho_tt"], "--", color=line.get_color(),
                    label=f"{label} TT")
        ax_pdiff.plot(t, data["p_diff"], label=label)
        ax_coh.plot(t, data["coherence"], label=label)
        (line,) = ax_offdiag.plot(t, data["re_rho_st"], label=f"{label} Re")
        ax_offdiag.plot(t, data["im_rho_st"], "--", color=line.get_color(),
                        label=f"{label} Im")

    ax_pop.set_ylabel(r"$\rho_{SS}$, $\rho_{TT}$")
    ax_pdiff.set_ylabel(r"$P_D$")
    ax_coh.set_ylabel(r"$C_{\ell_1}$")
    ax_offdiag.set_ylabel(r"$\rho_{ST}$")
    for ax in (ax_coh, ax_offdiag):
        ax.set_xlabel(r"$t\,\Omega$")
    for ax in axes.ravel():
        ax.legend(fontsize="x-small")
        ax.grid(alpha=0.3)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--in", dest="in_dir", required=True, metavar="DIR")
    parser.add_argument("--out", dest="out_path", required=True,
                        metavar="PATH")
    parser.add_argument("--title", default=None)
    args = parser.parse_args(argv)
    try:
        out = render(Path(args.in_dir), Path(args.out_path), args.title)
    except ContractError as exc:
        print(f"fig-trajectories: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
