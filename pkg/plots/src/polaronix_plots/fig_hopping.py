"""Dressed-hopping surface from kernel CSVs and their manifests.

Usage:  polaronix-fig-hopping --in DIR --out PATH

Each ``kernels.csv`` under DIR contributes one sample: the suppression
ratio exp(-phi_c(0)/2) at the bath couplings (alpha, beta) recorded in the
sibling ``kernels.manifest.json``.  One point suffices for a line plot;
a grid of runs yields a surface.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from . import KERNEL_COLUMNS
from .csvio import ContractError, find_inputs, load_csv


def collect_samples(in_dir: Path):
    samples = []
    for path in find_inputs(in_dir, "kernels.csv"):
        data = load_csv(path, KERNEL_COLUMNS)
        manifest_path = path.with_suffix(".manifest.json")
        if not manifest_path.exists():
            raise ContractError(f"missing manifest: {manifest_path}")
        parameters = json.loads(manifest_path.read_text())["parameters"]
        try:
            alpha = float(parameters["bath1"]["coupling"])
            beta = float(parameters["bath2"]["coupling"])
        except KeyError as exc:
            raise ContractError(
                f"manifest {manifest_path} lacks parameter {exc}"
            ) from None
        ratio = float(np.exp(-0.5 * data["phi_c"][0]))
        samples.append((alpha, beta, ratio))
    return samples


def render(in_dir: Path, out_path: Path) -> Path:
    samples = collect_samples(in_dir)
    alpha, beta, ratio = (np.array(x) for x in zip(*samples))

    fig = plt.figure(figsize=(7, 6))
    if np.unique(alpha).size > 2 and np.unique(beta).size > 2:
        ax = fig.add_subplot(projection="3d")
        ax.plot_trisurf(alpha, beta, ratio, cmap="viridis")
        ax.set_xlabel(r"$\alpha$")
        ax.set_ylabel(r"$\beta$")
        ax.set_zlabel(r"$\tilde{\mathcal{J}}/\mathcal{J}$")
    else:
        ax = fig.add_subplot()
        order = np.argsort(alpha)
        ax.plot(alpha[order], ratio[order], "o-")
        ax.set_xlabel(r"$\alpha$")
        ax.set_ylabel(r"$\tilde{\mathcal{J}}/\mathcal{J}$")
        ax.grid(alpha=0.3)
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
        print(f"fig-hopping: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
