import csv

import matplotlib.pyplot as plt
import numpy as np
import pytest

TABLE_HEADER = ["N", "L1", "L1_order", "Linf", "Linf_order", "iter", "epsilon", "wall_s"]


@pytest.fixture(autouse=True)
def _close_figures():
    yield
    plt.close("all")


def _write(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    return path


@pytest.fixture
def delta_csv(tmp_path):
    """Monotone-tail history ending below 1e-13, like a converged run."""
    deltas = np.geomspace(1e-1, 5e-14, 40)
    rows = [[k + 1, f"{d:.17e}"] for k, d in enumerate(deltas)]
    return _write(tmp_path / "ex1_a1_n160_delta.csv", ["iteration", "delta"], rows)


@pytest.fixture
def table_csv(tmp_path):
    rows = [
        [40, "1.0e-05", "", "3.0e-05", "", 41, "1.0e-06", "0.31"],
        [80, "3.1e-07", "5.01e0", "9.0e-07", "5.06e0", 52, "1.0e-06", "0.92"],
        [160, "1.0e-08", "4.95e0", "2.9e-08", "4.96e0", 81, "1.0e-06", "3.80"],
    ]
    return _write(tmp_path / "ex1_a1_table.csv", TABLE_HEADER, rows)


@pytest.fixture
def second_table_csv(tmp_path):
    rows = [
        [40, "2.0e-05", "", "6.0e-05", "", 103, "1.0e-06", "0.52"],
        [80, "6.4e-07", "4.97e0", "1.9e-06", "4.98e0", 108, "1.0e-06", "1.61"],
    ]
    return _write(tmp_path / "ex1_a2_table.csv", TABLE_HEADER, rows)


@pytest.fixture
def single_row_table_csv(tmp_path):
    rows = [[320, "2.5e-13", "", "8.1e-13", "", 136, "1.0e-06", "20.7"]]
    return _write(tmp_path / "ex1_a1_n320_table.csv", TABLE_HEADER, rows)


@pytest.fixture
def field_csv(tmp_path):
    """Radial distance field on a 21x21 grid: circular level sets."""
    n = 21
    coords = np.linspace(-1.0, 1.0, n)
    rows = []
    for y in coords:
        for x in coords:
            r = np.hypot(x, y)
            phi = r - 0.5
            u = x / r if r > 0 else 0.0
            v = y / r if r > 0 else 0.0
            rows.append(
                [
                    f"{x:.17e}", f"{y:.17e}", f"{phi:.17e}",
                    f"{u:.17e}", f"{v:.17e}", f"{phi:.17e}", 5,
                ]
            )
    return _write(
        tmp_path / "ex2_a1_n20_field.csv",
        ["x", "y", "phi", "u", "v", "exact", "category"],
        rows,
    )
