"""Readers for the solver's CSV artifacts.

Three schemas exist: convergence tables, delta histories, and field dumps.
The headers are part of the contract, so a mismatch is rejected up front,
and every value error is reported with its file and line number.
"""

from __future__ import annotations

import csv
import math
import os

import numpy as np

TABLE_HEADER = ["N", "L1", "L1_order", "Linf", "Linf_order", "iter", "epsilon", "wall_s"]
DELTA_HEADER = ["iteration", "delta"]
FIELD_HEADER = ["x", "y", "phi", "u", "v", "exact", "category"]


class SchemaError(ValueError):
    """A CSV artifact does not conform to its schema."""


def _rows(path: str, header: list[str]) -> list[list[str]]:
    if not os.path.exists(path):
        raise SchemaError(f"{path}: no such file")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            first = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}:1: empty file, expected header {header}")
        if first != header:
            raise SchemaError(f"{path}:1: header {first} does not match {header}")
        out = []
        for row in reader:
            if not row:
                continue
            if len(row) != len(header):
                raise SchemaError(
                    f"{path}:{reader.line_num}: {len(row)} fields, expected {len(header)}"
                )
            out.append((reader.line_num, row))
    return out


def _parse(path: str, line: int, column: str, text: str, kind) -> float:
    try:
        return kind(text)
    except ValueError:
        raise SchemaError(f"{path}:{line}: bad {column} value {text!r}") from None


def read_table(path) -> dict[str, np.ndarray]:
    """Convergence table; empty order fields come back as NaN."""
    path = str(path)
    cols: dict[str, list] = {k: [] for k in TABLE_HEADER}
    for line, row in _rows(path, TABLE_HEADER):
        for key, text in zip(TABLE_HEADER, row):
            if key in ("N", "iter"):
                cols[key].append(_parse(path, line, key, text, int))
            elif key.endswith("_order") and text == "":
                cols[key].append(math.nan)
            else:
                cols[key].append(_parse(path, line, key, text, float))
    out = {k: np.asarray(v) for k, v in cols.items()}
    if out["N"].size == 0:
        raise SchemaError(f"{path}: table holds no rows")
    return out


def read_delta(path) -> tuple[np.ndarray, np.ndarray]:
    """Delta history as (iteration, delta) arrays."""
    path = str(path)
    its, deltas = [], []
    for line, row in _rows(path, DELTA_HEADER):
        its.append(_parse(path, line, "iteration", row[0], int))
        deltas.append(_parse(path, line, "delta", row[1], float))
    if not its:
        raise SchemaError(f"{path}: delta history holds no rows")
    return np.asarray(its, dtype=np.int64), np.asarray(deltas, dtype=np.float64)


def read_field(path) -> dict[str, np.ndarray]:
    """Field dump reshaped to (n, n) row-major grids."""
    path = str(path)
    cols: dict[str, list] = {k: [] for k in FIELD_HEADER}
    for line, row in _rows(path, FIELD_HEADER):
        for key, text in zip(FIELD_HEADER, row):
            kind = int if key == "category" else float
            cols[key].append(_parse(path, line, key, text, kind))
    count = len(cols["x"])
    n = int(round(math.sqrt(count)))
    if n < 2 or n * n != count:
        raise SchemaError(f"{path}: {count} rows do not form a square grid")
    out = {k: np.asarray(v).reshape(n, n) for k, v in cols.items()}
    if not (np.all(np.diff(out["x"], axis=1) > 0) and np.all(np.diff(out["y"], axis=0) > 0)):
        raise SchemaError(f"{path}: rows are not in row-major grid order")
    return out


def artifact_label(path) -> str:
    """Method label for legends: the file name minus its schema suffix."""
    name = os.path.basename(str(path))
    if name.endswith(".csv"):
        name = name[:-4]
    for suffix in ("_table", "_delta", "_field"):
        if name.endswith(suffix):
            return name[: -len(suffix)]
    return name
