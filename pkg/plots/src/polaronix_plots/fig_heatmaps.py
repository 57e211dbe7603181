"""Backflow-measure heatmaps over the coupling plane from sweep CSVs.

Usage:  polaronix-fig-heatmaps --in DIR --out PATH

Every ``sweep.csv`` under DIR becomes one heatmap panel (up to a 2x3
grid), with alpha/beta axis extents read from the file itself and the
exponent pair in the panel title.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from . import SWEEP_COLUMNS
from .csvio import ContractError, find_inputs, load_csv


def to_grid(data: dict):
    alpha = np.unique(data["alpha"])
    beta = np.unique(data["beta"])
    nm = np.full((alpha.size, beta.size), np.nan)
    i = np.searchsorted(alpha, data["alpha"])
    j = np.searchsorted(beta, data["beta"])
    nm[i, j] = np.where(data["valid"], data["nm"], np.nan)
    return alpha, beta, nm


def render(in_dir: Path, out_path: Path) -> Path:
    inputs = find_inputs(in_dir, "sweep.csv")
    n = len(inputs)
    ncols = min(3, n)
    nrows = (n + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(4 * ncols, 3.2 * nrows),
                             squeeze=False)
    for ax in axes.ravel()[n:]:
        ax.set_axis_off()
    for ax, path in zip(axes.ravel(), inputs):
        data = load_csv(path, SWEEP_COLUMNS)
        alpha, beta, nm = to_grid(data)
        mesh = ax.pcolormesh(beta, alpha, nm, shading="nearest",
                             cmap="inferno")
        fig.colorbar(mesh, ax=ax, label=r"$\mathcal{N}$")
        ax.set_xlabel(r"$\beta$")
        ax.set_ylabel(r"$\alpha$")
        ax.set_title(f"s = {data['s'][0]:g}, s' = {data['s_prime'][0]:g}",
                     fontsize="small")
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
    args = parser.parse_args(argv)
    try:
        out = render(Path(args.in_dir), Path(args.out_path))
    except ContractError as exc:
        print(f"fig-heatmaps: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
