"""Contract-checked CSV loading shared by all figure scripts."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np


class ContractError(Exception):
    """An input file is missing or its header breaks the CSV contract."""


def load_csv(path: Path, required_columns: list[str]) -> dict[str, np.ndarray]:
    """Read a CSV into float columns, insisting on the contracted header.

    The ``valid`` column of sweep files is returned as booleans; every
    other column must parse as float.
    """
    path = Path(path)
    if not path.exists():
        raise ContractError(f"input file not found: {path}")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ContractError(f"empty CSV: {path}") from None
        for column in required_columns:
            if column not in header:
                raise ContractError(
                    f"missing column '{column}' in {path} "
                    f"(found: {', '.join(header)})"
                )
        rows = list(reader)
    data: dict[str, np.ndarray] = {}
    for column in required_columns:
        i = header.index(column)
        if column == "valid":
            data[column] = np.array([row[i] == "true" for row in rows])
        else:
            try:
                data[column] = np.array([float(row[i]) for row in rows])
            except ValueError as exc:
                raise ContractError(
                    f"non-numeric value in column '{column}' of {path}: {exc}"
                ) from None
    return data


def find_inputs(directory: Path, filename: str) -> list[Path]:
    """All files named ``filename`` under ``directory``, sorted by path."""
    directory = Path(directory)
    if not directory.is_dir():
        raise ContractError(f"input directory not found: {directory}")
    found = sorted(directory.rglob(filename))
    if not found:
        raise ContractError(f"no {filename} found under {directory}")
    return found
