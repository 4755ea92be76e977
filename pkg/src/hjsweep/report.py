"""Error measurement and CSV artifacts.

The table layout mirrors the usual convergence-study format: one row per
mesh with both norms, their observed orders, iteration counts, the weight
regularizer used, and wall time.  All floats serialize at full double
precision (17 significant digits) so round-trips are exact.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .problems import NoClosedFormError, Problem, in_error_mask

_FLOAT_FMT = "{:.17e}"


def _interior(field) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    grid = field.grid
    s = grid.interior
    X, Y = grid.interior_mesh()
    return field.phi[s, s], X, Y


def _reference_values(field, reference) -> np.ndarray:
    """Sample a finer-grid solve at this field's nodes.

    Requires matching domains and a mesh ratio that is a whole number, so
    every coarse node coincides with a fine node.
    """
    gc, gf = field.grid, reference.grid
    same_domain = (
        gc.xmin == gf.xmin
        and gc.xmax == gf.xmax
        and gc.ymin == gf.ymin
        and gc.ymax == gf.ymax
    )
    if not same_domain:
        raise ValueError("reference field lives on a different domain")
    if (gf.n - 1) % (gc.n - 1) != 0:
        raise ValueError(
            f"reference mesh ({gf.n - 1} cells) is not a multiple of {gc.n - 1}"
        )
    stride = (gf.n - 1) // (gc.n - 1)
    s = gf.interior
    return reference.phi[s, s][::stride, ::stride]


def error_norms(
    field,
    problem: Problem,
    reference=None,
) -> tuple[float, float]:
    """(L1, Linf) of phi against the exact solution over the problem mask.

    L1 is the plain average over masked nodes, Linf the max.  ``reference``
    substitutes a finer-grid solution when no closed form exists.
    """
    phi, X, Y = _interior(field)
    if reference is not None:
        target = _reference_values(field, reference)
    else:
        if problem.exact is None:
            raise NoClosedFormError(
                f"problem {problem.pid} has no closed form; pass a reference"
            )
        target = np.asarray(problem.exact(X, Y), dtype=np.float64)
    mask = in_error_mask(problem, X, Y)
    if not mask.any():
        raise ValueError("error mask selects no points")
    err = np.abs(phi - target)[mask]
    return float(err.mean()), float(err.max())


def convergence_orders(errors, meshes) -> list[float]:
    """Observed orders; index 0 and any non-positive-error row give NaN."""
    errors = [float(e) for e in errors]
    meshes = [int(m) for m in meshes]
    if len(errors) != len(meshes):
        raise ValueError("errors and meshes must pair up")
    if any(b <= a for a, b in zip(meshes, meshes[1:])):
        raise ValueError("meshes must be strictly increasing")
    orders = [math.nan]
    for k in range(1, len(errors)):
        if errors[k - 1] <= 0.0 or errors[k] <= 0.0:
            orders.append(math.nan)
        else:
            orders.append(
                math.log(errors[k - 1] / errors[k]) / math.log(meshes[k] / meshes[k - 1])
            )
    return orders


@dataclass(frozen=True)
class TableRow:
    n: int
    l1: float
    l1_order: float
    linf: float
    linf_order: float
    iterations: int
    epsilon: float
    wall_s: float


@dataclass(frozen=True)
class ConvergenceTable:
    """Per-mesh study results under a stable artifact name."""

    name: str
    rows: tuple[TableRow, ...]

    @staticmethod
    def from_runs(name: str, meshes, results) -> "ConvergenceTable":
        """Assemble from per-mesh result tuples (l1, linf, iter, eps, wall)."""
        l1s = [r[0] for r in results]
        linfs = [r[1] for r in results]
        o1 = convergence_orders(l1s, meshes)
        oinf = convergence_orders(linfs, meshes)
        rows = tuple(
            TableRow(int(m), r[0], o1[k], r[1], oinf[k], int(r[2]), r[3], r[4])
            for k, (m, r) in enumerate(zip(meshes, results))
        )
        return ConvergenceTable(name, rows)

    def format_lines(self) -> list[str]:
        head = (
            f"{'N':>5s} {'L1':>13s} {'ord':>6s} {'Linf':>13s} "
            f"{'ord':>6s} {'iter':>5s} {'eps':>9s} {'wall_s':>9s}"
        )
        lines = [head]
        for r in self.rows:
            o1 = f"{r.l1_order:6.2f}" if math.isfinite(r.l1_order) else "     -"
            oi = f"{r.linf_order:6.2f}" if math.isfinite(r.linf_order) else "     -"
            lines.append(
                f"{r.n:>5d} {r.l1:13.4e} {o1} {r.linf:13.4e} {oi} "
                f"{r.iterations:>5d} {r.epsilon:9.1e} {r.wall_s:9.3f}"
            )
        return lines


def _fmt(v: float) -> str:
    return _FLOAT_FMT.format(float(v))


def _fmt_order(v: float) -> str:
    # First-row orders serialize as empty fields, undefined ones as "nan".
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return ""
    return _fmt(v)


def write_csv_report(table: ConvergenceTable, delta_history, out_dir) -> tuple[str, str]:
    """Write `<name>_table.csv` and `<name>_delta.csv`; return both paths."""
    import os

    table_path = os.path.join(str(out_dir), f"{table.name}_table.csv")
    delta_path = os.path.join(str(out_dir), f"{table.name}_delta.csv")
    try:
        with open(table_path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(
                ["N", "L1", "L1_order", "Linf", "Linf_order", "iter", "epsilon", "wall_s"]
            )
            for r in table.rows:
                w.writerow(
                    [
                        r.n,
                        _fmt(r.l1),
                        _fmt_order(r.l1_order),
                        _fmt(r.linf),
                        _fmt_order(r.linf_order),
                        r.iterations,
                        _fmt(r.epsilon),
                        _fmt(r.wall_s),
                    ]
                )
        write_delta_csv(delta_history, delta_path)
    except OSError as e:
        raise OSError(f"writing report under {out_dir!s}: {e}") from e
    return table_path, delta_path


def write_delta_csv(delta_history, path) -> str:
    try:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["iteration", "delta"])
            for k, d in enumerate(delta_history, start=1):
                w.writerow([k, _fmt(d)])
    except OSError as e:
        raise OSError(f"writing delta history to {path!s}: {e}") from e
    return str(path)


def write_field_dump(field, problem: Problem, path) -> str:
    """Row-major node dump: x,y,phi,u,v,exact,category (exact=nan if none)."""
    grid = field.grid
    s = grid.interior
    X, Y = grid.interior_mesh()
    phi = field.phi[s, s]
    u = field.u[s, s]
    v = field.v[s, s]
    cat = field.categories[s, s]
    if problem.exact is not None:
        exact = np.asarray(problem.exact(X, Y), dtype=np.float64)
    else:
        exact = np.full_like(phi, np.nan)
    try:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["x", "y", "phi", "u", "v", "exact", "category"])
            for j in range(grid.n):
                for i in range(grid.n):
                    w.writerow(
                        [
                            _fmt(X[j, i]),
                            _fmt(Y[j, i]),
                            _fmt(phi[j, i]),
                            _fmt(u[j, i]),
                            _fmt(v[j, i]),
                            _fmt(exact[j, i]),
                            int(cat[j, i]),
                        ]
                    )
    except OSError as e:
        raise OSError(f"writing field dump to {path!s}: {e}") from e
    return str(path)


# Parse-back helpers; the round-trip tests and the plotting component use
# these schemas as the contract.


def read_table_csv(path) -> dict[str, np.ndarray]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    out: dict[str, list] = {k: [] for k in rows[0].keys()} if rows else {}
    for r in rows:
        for k, v in r.items():
            out[k].append(v)
    conv: dict[str, np.ndarray] = {}
    for k, vals in out.items():
        if k in ("N", "iter"):
            conv[k] = np.array([int(v) for v in vals])
        else:
            conv[k] = np.array([float(v) if v != "" else np.nan for v in vals])
    return conv


def read_delta_csv(path) -> tuple[np.ndarray, np.ndarray]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    it = np.array([int(r["iteration"]) for r in rows], dtype=np.int64)
    d = np.array([float(r["delta"]) for r in rows], dtype=np.float64)
    return it, d


def read_field_dump(path) -> dict[str, np.ndarray]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    cols = ["x", "y", "phi", "u", "v", "exact", "category"]
    out = {}
    for c in cols:
        if c == "category":
            out[c] = np.array([int(r[c]) for r in rows], dtype=np.int64)
        else:
            out[c] = np.array([float(r[c]) for r in rows], dtype=np.float64)
    return out
