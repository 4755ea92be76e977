"""CSV-to-PNG figure generation for the fast-sweeping solver artifacts."""

from .figures import (
    KINDS,
    PlotJob,
    render,
    render_contour,
    render_delta,
    render_surface,
)
from .io import SchemaError, artifact_label, read_delta, read_field, read_table

__all__ = [
    "KINDS",
    "PlotJob",
    "SchemaError",
    "artifact_label",
    "read_delta",
    "read_field",
    "read_table",
    "render",
    "render_contour",
    "render_delta",
    "render_surface",
]
