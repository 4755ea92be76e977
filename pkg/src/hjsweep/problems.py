"""Benchmark catalog: nine standard static Hamilton-Jacobi test problems.

Problem ids
-----------
``ex1``   Eikonal, variable speed, single point source, smooth cosine-sum
          solution on [-1, 1]^2.
``ex2``   Eikonal, f = 1, inflow circle of radius 0.5; distance solution.
``ex3``   Eikonal, f = 1, two inflow circles on [-3, 3]^2.
``ex4``   Eikonal, f = 1, point source; solution prescribed in a small box
          around the source to shield its cone singularity.
``ex5``   Eikonal, f = 1, inflow set = three-quarter circle closed by two
          axis segments.
``ex6a``  Eikonal with oscillatory speed on [0, 1]^2, five point sources
          plus zero boundary ring; smooth sine-product solution.
``ex6b``  Same equation, different source data; piecewise solution with an
          interior cap and kink network.
``ex7p``  Anisotropic wave propagation, convex fast branch, point source,
          Lax-Friedrichs updates.
``ex7sv`` Same medium, nonconvex slow branch.

Each problem packages the right-hand side (and the partial derivatives the
auxiliary transport scheme needs), the inflow geometry, frozen prescription
boxes, the error-measurement mask, the exact solution where a closed form
exists, and per-problem solver defaults.  ``make_problem`` returns the
problem together with a ready grid; ``n`` counts mesh cells per axis, so the
lattice has ``n + 1`` points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .grid import Grid2D, InflowSet, build_grid
from .hamiltonian import HamiltonianSpec, eikonal, quasi_p, quasi_sv

__all__ = [
    "ErrorMask",
    "NoClosedFormError",
    "Problem",
    "SolverDefaults",
    "available_problems",
    "exact_solution",
    "in_error_mask",
    "make_problem",
]

_TOL = 1e-9

TWO_PI = 2.0 * math.pi


class NoClosedFormError(ValueError):
    """Raised when an exact solution is requested for a reference-only problem."""


@dataclass(frozen=True)
class ErrorMask:
    """Region over which error norms are measured.

    A point is included when it lies in ``include_box`` (closed, with a small
    tolerance), outside every ``exclude_boxes`` entry (closed exclusion), and
    satisfies ``predicate`` when one is given.
    """

    include_box: tuple[float, float, float, float]
    exclude_boxes: tuple[tuple[float, float, float, float], ...] = ()
    predicate: Callable[[np.ndarray, np.ndarray], np.ndarray] | None = None

    def contains(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        x0, x1, y0, y1 = self.include_box
        keep = (x >= x0 - _TOL) & (x <= x1 + _TOL) & (y >= y0 - _TOL) & (y <= y1 + _TOL)
        for bx0, bx1, by0, by1 in self.exclude_boxes:
            inside = (
                (x >= bx0 - _TOL)
                & (x <= bx1 + _TOL)
                & (y >= by0 - _TOL)
                & (y <= by1 + _TOL)
            )
            keep &= ~inside
        if self.predicate is not None:
            keep &= self.predicate(x, y)
        return keep


@dataclass(frozen=True)
class SolverDefaults:
    """Per-problem solver settings; index 0 is the derivative-reuse scheme,
    index 1 the auxiliary-transport scheme."""

    omega: tuple[float, float] = (0.7, 0.8)
    epsilon: float = 1e-6
    delta_tol: tuple[float, float] = (1e-14, 1e-14)
    max_iterations: int = 500


@dataclass(frozen=True)
class Problem:
    """A fully specified benchmark instance on a concrete mesh."""

    pid: str
    cells: int
    bounds: tuple[tuple[float, float], tuple[float, float]]
    hamiltonian: HamiltonianSpec
    kind: str  # "godunov" or "lax_friedrichs"
    inflow: InflowSet
    frozen_boxes: tuple[tuple[float, float, float, float], ...]
    rhs: Callable
    rhs_dx: Callable
    rhs_dy: Callable
    inflow_values: Callable
    inflow_grad: Callable
    exact: Callable | None
    mask: ErrorMask
    defaults: SolverDefaults = field(default_factory=SolverDefaults)


# ---------------------------------------------------------------------------
# Closed forms


def _as_arrays(x, y):
    return np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64)


def _ex1_exact(x, y):
    x, y = _as_arrays(x, y)
    return -np.cos(0.5 * np.pi * x) - np.cos(0.5 * np.pi * y)


def _ex1_grad(x, y):
    x, y = _as_arrays(x, y)
    return 0.5 * np.pi * np.sin(0.5 * np.pi * x), 0.5 * np.pi * np.sin(0.5 * np.pi * y)


def _ex1_rhs(x, y):
    x, y = _as_arrays(x, y)
    s1 = np.sin(0.5 * np.pi * x)
    s2 = np.sin(0.5 * np.pi * y)
    return 0.5 * np.pi * np.sqrt(s1 * s1 + s2 * s2)


def _ex1_rhs_dx(x, y):
    x, y = _as_arrays(x, y)
    s1 = np.sin(0.5 * np.pi * x)
    s2 = np.sin(0.5 * np.pi * y)
    root = np.sqrt(s1 * s1 + s2 * s2)
    num = (np.pi * np.pi / 8.0) * np.sin(np.pi * x)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(root > 0.0, num / np.where(root > 0.0, root, 1.0), 0.0)
    return out


def _ex1_rhs_dy(x, y):
    return _ex1_rhs_dx(y, x)


def _circle_distance_grad(x, y, cx, cy, r):
    """Gradient of | |(x,y)-(cx,cy)| - r |, zero at undefined points."""
    dx = x - cx
    dy = y - cy
    rho = np.hypot(dx, dy)
    s = np.sign(rho - r)
    with np.errstate(invalid="ignore", divide="ignore"):
        safe = np.where(rho > 0.0, rho, 1.0)
        return np.where(rho > 0.0, s * dx / safe, 0.0), np.where(
            rho > 0.0, s * dy / safe, 0.0
        )


def _ex2_exact(x, y):
    x, y = _as_arrays(x, y)
    return np.abs(np.hypot(x, y) - 0.5)


def _ex2_grad(x, y):
    x, y = _as_arrays(x, y)
    return _circle_distance_grad(x, y, 0.0, 0.0, 0.5)


_EX3_C2X = math.sqrt(1.5)


def _ex3_exact(x, y):
    x, y = _as_arrays(x, y)
    d1 = np.abs(np.hypot(x + 1.0, y) - 0.5)
    d2 = np.abs(np.hypot(x - _EX3_C2X, y) - 0.5)
    return np.minimum(d1, d2)


def _ex3_grad(x, y):
    x, y = _as_arrays(x, y)
    d1 = np.abs(np.hypot(x + 1.0, y) - 0.5)
    d2 = np.abs(np.hypot(x - _EX3_C2X, y) - 0.5)
    u1, v1 = _circle_distance_grad(x, y, -1.0, 0.0, 0.5)
    u2, v2 = _circle_distance_grad(x, y, _EX3_C2X, 0.0, 0.5)
    first = d1 <= d2
    return np.where(first, u1, u2), np.where(first, v1, v2)


def _ex4_exact(x, y):
    x, y = _as_arrays(x, y)
    return np.hypot(x, y)


def _ex4_grad(x, y):
    x, y = _as_arrays(x, y)
    rho = np.hypot(x, y)
    with np.errstate(invalid="ignore", divide="ignore"):
        safe = np.where(rho > 0.0, rho, 1.0)
        return np.where(rho > 0.0, x / safe, 0.0), np.where(rho > 0.0, y / safe, 0.0)


def _segment_data(x, y, x0, y0, x1, y1):
    """Distance to a closed segment plus the gradient of that distance."""
    ex = x1 - x0
    ey = y1 - y0
    t = np.clip(((x - x0) * ex + (y - y0) * ey) / (ex * ex + ey * ey), 0.0, 1.0)
    px = x0 + t * ex
    py = y0 + t * ey
    d = np.hypot(x - px, y - py)
    with np.errstate(invalid="ignore", divide="ignore"):
        safe = np.where(d > 0.0, d, 1.0)
        return d, np.where(d > 0.0, (x - px) / safe, 0.0), np.where(
            d > 0.0, (y - py) / safe, 0.0
        )


def _ex5_pieces(x, y):
    """Distances and gradients to the three boundary pieces of ex5."""
    # Three-quarter arc: polar angle in [pi/2, 2*pi], radius 0.5.
    rho = np.hypot(x, y)
    ang = np.mod(np.arctan2(y, x), TWO_PI)
    on_arc = (ang >= 0.5 * np.pi) | (ang == 0.0)
    d_border0 = np.hypot(x - 0.5, y)  # arc endpoint (0.5, 0)
    d_border1 = np.hypot(x, y - 0.5)  # arc endpoint (0, 0.5)
    d_arc = np.where(on_arc, np.abs(rho - 0.5), np.minimum(d_border0, d_border1))
    ua, va = _circle_distance_grad(x, y, 0.0, 0.0, 0.5)
    with np.errstate(invalid="ignore", divide="ignore"):
        s0 = np.where(d_border0 > 0.0, d_border0, 1.0)
        s1 = np.where(d_border1 > 0.0, d_border1, 1.0)
    ue0 = np.where(d_border0 > 0.0, (x - 0.5) / s0, 0.0)
    ve0 = np.where(d_border0 > 0.0, y / s0, 0.0)
    ue1 = np.where(d_border1 > 0.0, x / s1, 0.0)
    ve1 = np.where(d_border1 > 0.0, (y - 0.5) / s1, 0.0)
    nearest0 = d_border0 <= d_border1
    u_arc = np.where(on_arc, ua, np.where(nearest0, ue0, ue1))
    v_arc = np.where(on_arc, va, np.where(nearest0, ve0, ve1))
    d_sx, u_sx, v_sx = _segment_data(x, y, 0.0, 0.0, 0.5, 0.0)
    d_sy, u_sy, v_sy = _segment_data(x, y, 0.0, 0.0, 0.0, 0.5)
    return (d_arc, u_arc, v_arc), (d_sx, u_sx, v_sx), (d_sy, u_sy, v_sy)


def _ex5_exact(x, y):
    x, y = _as_arrays(x, y)
    (d0, _, _), (d1, _, _), (d2, _, _) = _ex5_pieces(x, y)
    return np.minimum(d0, np.minimum(d1, d2))


def _ex5_grad(x, y):
    x, y = _as_arrays(x, y)
    (d0, u0, v0), (d1, u1, v1), (d2, u2, v2) = _ex5_pieces(x, y)
    u = np.where(d1 < d0, u1, u0)
    v = np.where(d1 < d0, v1, v0)
    dm = np.minimum(d0, d1)
    u = np.where(d2 < dm, u2, u)
    v = np.where(d2 < dm, v2, v)
    return u, v


def _ex6_rhs(x, y):
    x, y = _as_arrays(x, y)
    cx = np.cos(TWO_PI * x)
    sx = np.sin(TWO_PI * x)
    cy = np.cos(TWO_PI * y)
    sy = np.sin(TWO_PI * y)
    return TWO_PI * np.sqrt((cx * sy) ** 2 + (sx * cy) ** 2)


def _ex6_rhs_dx(x, y):
    x, y = _as_arrays(x, y)
    cx = np.cos(TWO_PI * x)
    sx = np.sin(TWO_PI * x)
    cy = np.cos(TWO_PI * y)
    sy = np.sin(TWO_PI * y)
    root = np.sqrt((cx * sy) ** 2 + (sx * cy) ** 2)
    num = 2.0 * np.pi * np.pi * np.sin(2.0 * TWO_PI * x) * np.cos(2.0 * TWO_PI * y)
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(root > 0.0, num / np.where(root > 0.0, root, 1.0), 0.0)


def _ex6_rhs_dy(x, y):
    return _ex6_rhs_dx(y, x)


def _ex6a_exact(x, y):
    x, y = _as_arrays(x, y)
    return np.sin(TWO_PI * x) * np.sin(TWO_PI * y)


def _ex6a_grad(x, y):
    x, y = _as_arrays(x, y)
    return (
        TWO_PI * np.cos(TWO_PI * x) * np.sin(TWO_PI * y),
        TWO_PI * np.sin(TWO_PI * x) * np.cos(TWO_PI * y),
    )


def _ex6b_cap(x, y):
    return 1.0 + np.cos(TWO_PI * x) * np.cos(TWO_PI * y)


def _ex6b_in_diamond(x, y):
    return (np.abs(x + y - 1.0) < 0.5) & (np.abs(x - y) < 0.5)


def _ex6b_exact(x, y):
    x, y = _as_arrays(x, y)
    base = np.abs(np.sin(TWO_PI * x) * np.sin(TWO_PI * y))
    cap = _ex6b_cap(x, y)
    return np.where(_ex6b_in_diamond(x, y), np.maximum(base, cap), base)


def _ex6b_grad(x, y):
    """Branch-selected gradient of the ex6b solution.

    On the domain boundary the base branch |sin sin| has a one-sided kink;
    the branch sign is chosen from a point nudged toward the interior, which
    gives the inflow-side derivative the prescription needs.
    """
    x, y = _as_arrays(x, y)
    nudge = 1e-9
    xs = x + nudge * ((x <= 0.0 + _TOL).astype(np.float64) - (x >= 1.0 - _TOL))
    ys = y + nudge * ((y <= 0.0 + _TOL).astype(np.float64) - (y >= 1.0 - _TOL))
    sgn = np.sign(np.sin(TWO_PI * xs) * np.sin(TWO_PI * ys))
    u_base = sgn * TWO_PI * np.cos(TWO_PI * x) * np.sin(TWO_PI * y)
    v_base = sgn * TWO_PI * np.sin(TWO_PI * x) * np.cos(TWO_PI * y)
    u_cap = -TWO_PI * np.sin(TWO_PI * x) * np.cos(TWO_PI * y)
    v_cap = -TWO_PI * np.cos(TWO_PI * x) * np.sin(TWO_PI * y)
    base = np.abs(np.sin(TWO_PI * xs) * np.sin(TWO_PI * ys))
    take_cap = _ex6b_in_diamond(xs, ys) & (_ex6b_cap(xs, ys) >= base)
    return np.where(take_cap, u_cap, u_base), np.where(take_cap, v_cap, v_base)


def _const_rhs(value: float):
    def rhs(x, y):
        x, _ = _as_arrays(x, y)
        return np.full_like(x, value)

    return rhs


_ZERO = _const_rhs(0.0)
_ONE = _const_rhs(1.0)


# ---------------------------------------------------------------------------
# Anisotropic point-source data: the solution of H(grad phi) = 1 emanating
# from the origin is the support function of the slowness set {H <= 1},
# tau(x) = max_theta (x cos + y sin) / H(cos, sin); its gradient is the
# maximizing slowness vector.  The maximum is located by a dense angular
# scan refined with a vectorized golden-section search.


def _support_function(ham: HamiltonianSpec, x, y):
    x, y = _as_arrays(x, y)
    shape = np.broadcast(x, y).shape
    xf = np.broadcast_to(x, shape).ravel().astype(np.float64)
    yf = np.broadcast_to(y, shape).ravel().astype(np.float64)

    m = 2048
    th = np.linspace(0.0, TWO_PI, m, endpoint=False)
    inv_h = 1.0 / np.asarray(ham.value(np.cos(th), np.sin(th)), dtype=np.float64)
    px = inv_h * np.cos(th)
    py = inv_h * np.sin(th)

    tau = np.empty_like(xf)
    gu = np.empty_like(xf)
    gv = np.empty_like(xf)
    step = TWO_PI / m
    gr = 0.5 * (math.sqrt(5.0) - 1.0)

    def objective(t, xs, ys):
        c = np.cos(t)
        s = np.sin(t)
        return (xs * c + ys * s) / np.asarray(ham.value(c, s), dtype=np.float64)

    for start in range(0, xf.size, 4096):
        xs = xf[start : start + 4096]
        ys = yf[start : start + 4096]
        obj = np.outer(xs, px) + np.outer(ys, py)
        k = np.argmax(obj, axis=1)
        a = th[k] - step
        b = th[k] + step
        for _ in range(72):
            c = b - gr * (b - a)
            d = a + gr * (b - a)
            fc = objective(c, xs, ys)
            fd = objective(d, xs, ys)
            keep_left = fc >= fd
            b = np.where(keep_left, d, b)
            a = np.where(keep_left, a, c)
        t = 0.5 * (a + b)
        ct = np.cos(t)
        st = np.sin(t)
        inv = 1.0 / np.asarray(ham.value(ct, st), dtype=np.float64)
        ug = inv * ct
        vg = inv * st
        tau[start : start + 4096] = xs * ug + ys * vg
        gu[start : start + 4096] = ug
        gv[start : start + 4096] = vg

    origin = np.hypot(xf, yf) < 1e-14
    tau[origin] = 0.0
    gu[origin] = 0.0
    gv[origin] = 0.0
    return tau.reshape(shape), gu.reshape(shape), gv.reshape(shape)


def _support_values(ham):
    def values(x, y):
        return _support_function(ham, x, y)[0]

    return values


def _support_grad(ham):
    def grad(x, y):
        _, u, v = _support_function(ham, x, y)
        return u, v

    return grad


# ---------------------------------------------------------------------------
# Catalog assembly


def _point_inflow(*pts):
    return InflowSet(points=np.array(pts, dtype=np.float64))


def _whole(bounds):
    (x0, x1), (y0, y1) = bounds
    return (x0, x1, y0, y1)


def _build_ex1(cells, h):
    bounds = ((-1.0, 1.0), (-1.0, 1.0))
    return dict(
        bounds=bounds,
        hamiltonian=eikonal(),
        kind="godunov",
        inflow=_point_inflow((0.0, 0.0)),
        frozen_boxes=(),
        rhs=_ex1_rhs,
        rhs_dx=_ex1_rhs_dx,
        rhs_dy=_ex1_rhs_dy,
        inflow_values=_ex1_exact,
        inflow_grad=_ex1_grad,
        exact=_ex1_exact,
        mask=ErrorMask(include_box=_whole(bounds)),
        defaults=SolverDefaults(),
    )


def _build_ex2(cells, h):
    bounds = ((-1.0, 1.0), (-1.0, 1.0))
    return dict(
        bounds=bounds,
        hamiltonian=eikonal(),
        kind="godunov",
        inflow=InflowSet(circles=np.array([[0.0, 0.0, 0.5]])),
        frozen_boxes=(),
        rhs=_ONE,
        rhs_dx=_ZERO,
        rhs_dy=_ZERO,
        inflow_values=_ex2_exact,
        inflow_grad=_ex2_grad,
        exact=_ex2_exact,
        mask=ErrorMask(
            include_box=(-0.9, 0.9, -0.9, 0.9),
            exclude_boxes=((-0.15, 0.15, -0.15, 0.15),),
        ),
        defaults=SolverDefaults(),
    )


def _build_ex3(cells, h):
    bounds = ((-3.0, 3.0), (-3.0, 3.0))
    mid = 0.5 * (_EX3_C2X - 1.0)  # equidistant kink line between the circles
    return dict(
        bounds=bounds,
        hamiltonian=eikonal(),
        kind="godunov",
        inflow=InflowSet(
            circles=np.array([[-1.0, 0.0, 0.5], [_EX3_C2X, 0.0, 0.5]])
        ),
        frozen_boxes=(),
        rhs=_ONE,
        rhs_dx=_ZERO,
        rhs_dy=_ZERO,
        inflow_values=_ex3_exact,
        inflow_grad=_ex3_grad,
        exact=_ex3_exact,
        mask=ErrorMask(
            include_box=(-2.85, 2.85, -2.85, 2.85),
            exclude_boxes=(
                (-1.15, -0.85, -0.15, 0.15),
                (_EX3_C2X - 0.15, _EX3_C2X + 0.15, -0.15, 0.15),
                (mid - 0.15, mid + 0.15, -2.85, 2.85),
            ),
        ),
        defaults=SolverDefaults(),
    )


def _build_ex4(cells, h):
    bounds = ((-1.0, 1.0), (-1.0, 1.0))
    return dict(
        bounds=bounds,
        hamiltonian=eikonal(),
        kind="godunov",
        inflow=_point_inflow((0.0, 0.0)),
        frozen_boxes=((-0.15, 0.15, -0.15, 0.15),),
        rhs=_ONE,
        rhs_dx=_ZERO,
        rhs_dy=_ZERO,
        inflow_values=_ex4_exact,
        inflow_grad=_ex4_grad,
        exact=_ex4_exact,
        mask=ErrorMask(
            include_box=_whole(bounds),
            exclude_boxes=((-0.15, 0.15, -0.15, 0.15),),
        ),
        defaults=SolverDefaults(),
    )


def _build_ex5(cells, h):
    bounds = ((-1.0, 1.0), (-1.0, 1.0))
    return dict(
        bounds=bounds,
        hamiltonian=eikonal(),
        kind="godunov",
        inflow=InflowSet(
            arcs=np.array([[0.0, 0.0, 0.5, 0.5 * np.pi, TWO_PI]]),
            segments=np.array([[0.0, 0.0, 0.5, 0.0], [0.0, 0.0, 0.0, 0.5]]),
        ),
        frozen_boxes=(),
        rhs=_ONE,
        rhs_dx=_ZERO,
        rhs_dy=_ZERO,
        inflow_values=_ex5_exact,
        inflow_grad=_ex5_grad,
        exact=_ex5_exact,
        mask=ErrorMask(
            include_box=(-1.9, 1.9, -1.9, 1.9),
            exclude_boxes=((-0.5, 0.5, -0.5, 0.5),),
            predicate=lambda x, y: (x <= _TOL) | (y <= _TOL),
        ),
        defaults=SolverDefaults(),
    )


_EX6_SOURCES = ((0.25, 0.25), (0.75, 0.75), (0.25, 0.75), (0.75, 0.25), (0.5, 0.5))


def _build_ex6(cells, h, case: str):
    bounds = ((0.0, 1.0), (0.0, 1.0))
    # The whole unit-square boundary carries prescribed data, so it belongs
    # to the inflow set itself: the classifier then pins the usual 2h band
    # along the walls, exactly as it does around the five sources.
    walls = np.array(
        [
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 1.0, 1.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 0.0, 1.0, 1.0],
        ]
    )
    source_boxes = tuple((sx - h, sx + h, sy - h, sy + h) for sx, sy in _EX6_SOURCES)
    # Mesh-tied regularizer: 1e-2 at 40 cells, decaded per refinement level.
    epsilon = 10.0 ** (-2.0 - math.log2(cells / 40.0))
    exact = _ex6a_exact if case == "a" else _ex6b_exact
    grad = _ex6a_grad if case == "a" else _ex6b_grad
    return dict(
        bounds=bounds,
        hamiltonian=eikonal(),
        kind="godunov",
        inflow=InflowSet(
            points=np.array(_EX6_SOURCES, dtype=np.float64), segments=walls
        ),
        frozen_boxes=source_boxes,
        rhs=_ex6_rhs,
        rhs_dx=_ex6_rhs_dx,
        rhs_dy=_ex6_rhs_dy,
        inflow_values=exact,
        inflow_grad=grad,
        exact=exact,
        mask=ErrorMask(include_box=_whole(bounds), exclude_boxes=source_boxes),
        defaults=SolverDefaults(
            epsilon=epsilon,
            delta_tol=(1e-14, 1e-14) if case == "a" else (1e-12, 1e-12),
        ),
    )


def _build_ex7(cells, h, branch: str):
    bounds = ((-1.0, 1.0), (-1.0, 1.0))
    ham = quasi_p() if branch == "p" else quasi_sv()
    box = (-0.15, 0.15, -0.15, 0.15)
    if branch == "p":
        mask = ErrorMask(include_box=_whole(bounds), exclude_boxes=(box,))
        defaults = SolverDefaults(omega=(1.2, 1.2))
    else:
        mask = ErrorMask(
            include_box=_whole(bounds),
            exclude_boxes=(
                (-0.15, 0.15, -1.0, 1.0),
                (-1.0, 1.0, -0.15, 0.15),
            ),
        )
        defaults = SolverDefaults(omega=(0.9, 0.9), delta_tol=(1e-14, 1e-9))
    return dict(
        bounds=bounds,
        hamiltonian=ham,
        kind="lax_friedrichs",
        inflow=_point_inflow((0.0, 0.0)),
        frozen_boxes=(box,),
        rhs=_ONE,
        rhs_dx=_ZERO,
        rhs_dy=_ZERO,
        inflow_values=_support_values(ham),
        inflow_grad=_support_grad(ham),
        exact=None,
        mask=mask,
        defaults=defaults,
    )


_BUILDERS = {
    "ex1": lambda c, h: _build_ex1(c, h),
    "ex2": lambda c, h: _build_ex2(c, h),
    "ex3": lambda c, h: _build_ex3(c, h),
    "ex4": lambda c, h: _build_ex4(c, h),
    "ex5": lambda c, h: _build_ex5(c, h),
    "ex6a": lambda c, h: _build_ex6(c, h, "a"),
    "ex6b": lambda c, h: _build_ex6(c, h, "b"),
    "ex7p": lambda c, h: _build_ex7(c, h, "p"),
    "ex7sv": lambda c, h: _build_ex7(c, h, "sv"),
}

_DOMAIN_EXTENT = {
    "ex1": 2.0,
    "ex2": 2.0,
    "ex3": 6.0,
    "ex4": 2.0,
    "ex5": 2.0,
    "ex6a": 1.0,
    "ex6b": 1.0,
    "ex7p": 2.0,
    "ex7sv": 2.0,
}


def available_problems() -> tuple[str, ...]:
    return tuple(sorted(_BUILDERS))


def make_problem(pid: str, cells: int) -> tuple[Problem, Grid2D]:
    """Instantiate a catalog problem on a mesh of ``cells`` cells per axis."""
    if pid not in _BUILDERS:
        raise KeyError(f"unknown problem id {pid!r}; choose from {available_problems()}")
    if cells < 40:
        raise ValueError(f"mesh count must be at least 40, got {cells}")
    h = _DOMAIN_EXTENT[pid] / cells
    spec = _BUILDERS[pid](cells, h)
    problem = Problem(pid=pid, cells=int(cells), **spec)
    grid = build_grid(problem.bounds, cells + 1)
    return problem, grid


def exact_solution(pid: str, x, y):
    """Closed-form solution of a catalog problem; errors for ex7 variants."""
    if pid not in _BUILDERS:
        raise KeyError(f"unknown problem id {pid!r}")
    if pid.startswith("ex7"):
        raise NoClosedFormError(f"{pid} has no closed-form solution")
    problem, _ = make_problem(pid, 40)
    return problem.exact(x, y)


def in_error_mask(problem: Problem, x, y) -> np.ndarray:
    """True where error norms are measured for this problem."""
    return problem.mask.contains(x, y)
