"""Figure builders and the render entry point.

Every kind maps one or more CSV artifacts onto a single PNG.  Builders
return the matplotlib figure so tests can inspect axes; ``render`` saves it
with fixed size and dpi, which keeps repeated renders byte-identical.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import SchemaError, artifact_label, read_delta, read_field, read_table

KINDS = ("surface", "contour", "error_history", "delta_history", "comparison")

_FIGSIZE = (7.0, 5.0)
_DPI = 110


@dataclass(frozen=True)
class PlotJob:
    """One rendering task: input artifacts, figure kind, output path."""

    inputs: tuple[str, ...]
    kind: str
    output: str

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(str(p) for p in self.inputs))
        object.__setattr__(self, "output", str(self.output))
        if self.kind not in KINDS:
            raise ValueError(f"unknown plot kind {self.kind!r}; choose from {KINDS}")
        if not self.inputs:
            raise ValueError("no input files given")
        if self.kind in ("surface", "contour") and len(self.inputs) != 1:
            raise ValueError(f"{self.kind} takes exactly one field dump")
        missing = [p for p in self.inputs if not os.path.exists(p)]
        if missing:
            raise ValueError(f"missing input files: {', '.join(missing)}")


def build_delta_history(inputs) -> plt.Figure:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for path in inputs:
        it, d = read_delta(path)
        ax.semilogy(it, d, marker=".", label=artifact_label(path))
    ax.set_xlabel("iteration")
    ax.set_ylabel("delta")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    return fig


def build_error_history(inputs) -> plt.Figure:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for path in inputs:
        table = read_table(path)
        ax.semilogy(
            table["iter"], table["L1"], marker="o", label=artifact_label(path)
        )
    ax.set_xlabel("iterations")
    ax.set_ylabel("L1 error")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    return fig


def build_comparison(inputs) -> plt.Figure:
    fig, (ax_err, ax_cpu) = plt.subplots(1, 2, figsize=(10.0, 4.5))
    for path in inputs:
        table = read_table(path)
        label = artifact_label(path)
        ax_err.loglog(table["N"], table["L1"], marker="o", label=label)
        ax_cpu.loglog(table["N"], table["wall_s"], marker="s", label=label)
    ax_err.set_xlabel("N")
    ax_err.set_ylabel("L1 error")
    ax_cpu.set_xlabel("N")
    ax_cpu.set_ylabel("wall time (s)")
    for ax in (ax_err, ax_cpu):
        ax.grid(True, which="both", alpha=0.3)
        ax.legend()
    fig.tight_layout()
    return fig


def build_contour(path) -> plt.Figure:
    field = read_field(path)
    fig, ax = plt.subplots(figsize=(6.0, 5.2))
    cs = ax.contour(field["x"], field["y"], field["phi"], levels=20)
    ax.clabel(cs, inline=True, fontsize=7, fmt="%.2f")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_aspect("equal")
    ax.set_title(artifact_label(path))
    return fig


def build_surface(path) -> plt.Figure:
    field = read_field(path)
    fig = plt.figure(figsize=_FIGSIZE)
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(
        field["x"], field["y"], field["phi"],
        cmap="viridis", linewidth=0, antialiased=True,
    )
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(artifact_label(path))
    return fig


def render(job: PlotJob) -> str:
    """Build and save the figure; returns the output path."""
    if job.kind == "delta_history":
        fig = build_delta_history(job.inputs)
    elif job.kind == "error_history":
        fig = build_error_history(job.inputs)
    elif job.kind == "comparison":
        fig = build_comparison(job.inputs)
    elif job.kind == "contour":
        fig = build_contour(job.inputs[0])
    else:
        fig = build_surface(job.inputs[0])
    try:
        fig.savefig(job.output, dpi=_DPI)
    finally:
        plt.close(fig)
    return job.output


def render_delta(csv_path, png_path) -> str:
    """Log-delta history curve from one delta CSV."""
    return render(PlotJob((str(csv_path),), "delta_history", str(png_path)))


def render_contour(csv_path, png_path) -> str:
    """Contour plot of phi from one field dump CSV."""
    return render(PlotJob((str(csv_path),), "contour", str(png_path)))


def render_surface(csv_path, png_path) -> str:
    """3D surface of phi from one field dump CSV."""
    return render(PlotJob((str(csv_path),), "surface", str(png_path)))
