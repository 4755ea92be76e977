"""Fast-sweeping driver and point-update reference implementations.

The production path runs through the compiled kernels in ``_kernels``; the
pure-Python updates here (`approach1_point_update`, `approach2_point_update`)
exist as an executable statement of the algorithm and as the oracle the
kernel is pinned against.  Both share the same compiled scalar primitives,
so agreement is exact, not approximate.

Approach 1 reuses the one-sided derivatives selected during the solution
update as the stored derivative data of the next visit.  Approach 2 instead
advances the stored derivatives with their own Lax-Friedrichs transport
update driven by the differentiated PDE.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

import numpy as np

from . import _kernels as K
from .grid import Grid2D, PointCategory, classify_points, sweep_orderings
from .hamiltonian import (
    DerivativeQuad,
    ViscosityPair,
    aux_update,
    godunov_update,
    lf_bounds,
    lf_update,
)
from .problems import Problem
from .reconstruction import (
    DEFAULT_GAMMA,
    big_minus,
    big_plus,
    candidates_minus,
    candidates_plus,
    combine_candidates,
    edge_derivative,
    linear_second_minus,
    linear_second_plus,
    mixed_second_central,
    nonlinear_weights,
    smoothness_minus,
    smoothness_plus,
)

INIT_FILL = 1e10
_INIT_TOL = 1e-13
_INIT_CAP = 2000
# Fixed derivative box for the first-order LF passes, before any derivative
# estimates exist.  Valid because the LF-kind Hamiltonian partials used here
# are 0-homogeneous: their range over any centered box is their full range.
_INIT_BOX = ((-1.0, 1.0), (-1.0, 1.0))


class DivergenceError(RuntimeError):
    """Solution field went non-finite during sweeping."""

    def __init__(self, iteration: int):
        super().__init__(f"non-finite solution values at iteration {iteration}")
        self.iteration = iteration


class InitializationError(RuntimeError):
    """First-order initializer failed to converge within its cap."""


@dataclass
class SolutionField:
    """Padded solution state: values, stored derivatives, point categories."""

    grid: Grid2D
    phi: np.ndarray
    u: np.ndarray
    v: np.ndarray
    categories: np.ndarray

    def copy(self) -> "SolutionField":
        return SolutionField(
            self.grid,
            self.phi.copy(),
            self.u.copy(),
            self.v.copy(),
            self.categories.copy(),
        )


@dataclass(frozen=True)
class SolverConfig:
    """User-tunable solver knobs; ``None`` fields fall back to the problem.

    omega: relaxation factor in (0, 2).
    epsilon: weight regularizer (mesh-dependent schedules are resolved by
        the caller; this field is the scalar for one solve).
    delta_tol: convergence threshold on the mean per-iteration change.
    aux_boost: dissipation multiplier for the derivative transport updates
        of approach 2 (the solution update itself is never boosted).
    freeze_tol: when set, nonlinear weights freeze per point once their
        iteration-to-iteration L1 change drops below it.
    """

    approach: int = 1
    hybrid: bool = False
    omega: float | None = None
    gamma: tuple[float, float, float] = DEFAULT_GAMMA
    epsilon: float | None = None
    delta_tol: float | None = None
    max_iterations: int | None = None
    aux_boost: float = 2.0
    freeze_tol: float | None = None

    def resolved(self, problem: Problem) -> "SolverConfig":
        """Fill ``None`` fields from the problem defaults and validate."""
        if self.approach not in (1, 2):
            raise ValueError(f"approach must be 1 or 2, got {self.approach}")
        k = self.approach - 1
        d = problem.defaults
        out = replace(
            self,
            omega=d.omega[k] if self.omega is None else self.omega,
            epsilon=d.epsilon if self.epsilon is None else self.epsilon,
            delta_tol=d.delta_tol[k] if self.delta_tol is None else self.delta_tol,
            max_iterations=(
                d.max_iterations
                if self.max_iterations is None
                else self.max_iterations
            ),
        )
        if not 0.0 < out.omega < 2.0:
            raise ValueError(f"omega must lie in (0, 2), got {out.omega}")
        if out.delta_tol <= 0.0:
            raise ValueError("delta_tol must be positive")
        if out.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if out.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")
        if not all(g > 0.0 for g in out.gamma):
            raise ValueError("gamma weights must be positive")
        if out.freeze_tol is not None and out.freeze_tol <= 0.0:
            raise ValueError("freeze_tol must be positive when set")
        return out


@dataclass(frozen=True)
class SweepReport:
    iterations: int
    delta_history: tuple[float, ...]
    converged: bool
    l1_error: float | None
    linf_error: float | None
    wall_time: float
    weights_frozen_at: int | None


def relax(phi_candidate: float, phi_old: float, omega: float) -> float:
    """Weighted write-back; ω>1 over-relaxes, ω<1 damps."""
    return omega * phi_candidate + (1.0 - omega) * phi_old


def _edge_capped_omega(omega: float, i: int, j: int, n: int) -> float:
    """Relaxation weight with the near-edge cap applied.

    The one-sided edge arms tie the stored derivatives to the phi profile
    with an O(1/h) gain; with relaxation weights past ~0.7 the phi overshoot
    makes that loop amplify.  Capping the weight on the pad-reading bands
    keeps it contractive without touching the fixed point or the interior
    relaxation.
    """
    if i <= 2 or j <= 2 or i >= n - 3 or j >= n - 3:
        return min(omega, 0.7)
    return omega


def ghost_extrapolate(field: SolutionField) -> SolutionField:
    """Refresh the ghost frame of every stored array, in place."""
    g = field.grid.ghost
    n = field.grid.n
    K.extrapolate_ghosts(field.phi, g, n)
    K.extrapolate_ghosts(field.u, g, n)
    K.extrapolate_ghosts(field.v, g, n)
    return field


def _padded_mesh(grid: Grid2D) -> tuple[np.ndarray, np.ndarray]:
    return np.meshgrid(grid.x, grid.y)


def _rhs_field(problem: Problem, grid: Grid2D) -> np.ndarray:
    X, Y = _padded_mesh(grid)
    return np.asarray(problem.rhs(X, Y), dtype=np.float64)


def first_order_init(problem: Problem, grid: Grid2D) -> SolutionField:
    """Initial guess: converged first-order FSM plus one-sided derivatives."""
    cat = classify_points(grid, problem.inflow, problem.frozen_boxes)
    phi = grid.allocate(INIT_FILL)
    u = grid.allocate(0.0)
    v = grid.allocate(0.0)

    X, Y = _padded_mesh(grid)
    presc = (cat == int(PointCategory.INFLOW)) | (
        cat == int(PointCategory.NEAR_INFLOW)
    )
    phi[presc] = np.asarray(problem.inflow_values(X[presc], Y[presc]), np.float64)
    gu, gv = problem.inflow_grad(X[presc], Y[presc])
    u[presc] = np.asarray(gu, dtype=np.float64)
    v[presc] = np.asarray(gv, dtype=np.float64)

    fv = _rhs_field(problem, grid)
    g, n, h = grid.ghost, grid.n, grid.h
    orderings = sweep_orderings(n)
    ham = problem.hamiltonian
    if problem.kind == "lax_friedrichs":
        alpha0, beta0 = lf_bounds(ham, _INIT_BOX, boost=1.0)

    for _ in range(_INIT_CAP):
        prev = phi.copy()
        for (i0, i1, istep), (j0, j1, jstep) in orderings:
            if problem.kind == "godunov":
                K.fo_godunov_pass(
                    phi, cat, fv, h, g, n, i0, i1, istep, j0, j1, jstep
                )
            else:
                K.fo_lf_pass(
                    phi, cat, fv, h, alpha0, beta0, ham.code, ham.params,
                    g, n, i0, i1, istep, j0, j1, jstep,
                )
        if K.masked_mean_abs_diff(phi, prev, cat) < _INIT_TOL:
            break
    else:
        raise InitializationError(
            f"first-order initializer did not converge in {_INIT_CAP} iterations"
        )

    K.init_derivatives(phi, u, v, cat, h, g, n)
    field = SolutionField(grid, phi, u, v, cat)
    return ghost_extrapolate(field)


def _inflate(lo: float, hi: float) -> tuple[float, float]:
    span = hi - lo
    pad = 0.1 * span if span > 0.0 else 0.5
    return (lo - pad, hi + pad)


def derivative_box(
    field: SolutionField,
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Bounding box of the stored derivatives, inflated 20 percent."""
    cat = field.categories
    m = cat != int(PointCategory.GHOST)
    m &= cat != 0
    us = field.u[m]
    vs = field.v[m]
    return (
        _inflate(float(us.min()), float(us.max())),
        _inflate(float(vs.min()), float(vs.max())),
    )


# ---------------------------------------------------------------------------
# Reference point updates.  Index arguments are interior (0-based) and get
# offset by the ghost width internally.  They mutate the field exactly like
# one kernel visit: reads first, then phi, then the derivatives.


def _side_minus(f, w, jj, ii, h, gamma, eps, axis: str):
    if axis == "x":
        fm2, fm1, f0, fp1 = f[jj, ii - 2], f[jj, ii - 1], f[jj, ii], f[jj, ii + 1]
        wa, wb = w[jj, ii - 1], w[jj, ii + 1]
    else:
        fm2, fm1, f0, fp1 = f[jj - 2, ii], f[jj - 1, ii], f[jj, ii], f[jj + 1, ii]
        wa, wb = w[jj - 1, ii], w[jj + 1, ii]
    g1, g2, g3 = gamma
    d1, d2, d3 = candidates_minus(fm2, fm1, f0, fp1, wa, wb, h)
    b1, b2, b3 = smoothness_minus(fm2, fm1, f0, fp1, wa, wb, h)
    w1, w2, w3 = nonlinear_weights(b1, b2, b3, g1, g2, g3, eps)
    return combine_candidates(d1, d2, d3, w1, w2, w3, g1, g2, g3)


def _side_plus(f, w, jj, ii, h, gamma, eps, axis: str):
    if axis == "x":
        fm1, f0, fp1, fp2 = f[jj, ii - 1], f[jj, ii], f[jj, ii + 1], f[jj, ii + 2]
        wa, wb = w[jj, ii - 1], w[jj, ii + 1]
    else:
        fm1, f0, fp1, fp2 = f[jj - 1, ii], f[jj, ii], f[jj + 1, ii], f[jj + 2, ii]
        wa, wb = w[jj - 1, ii], w[jj + 1, ii]
    g1, g2, g3 = gamma
    d1, d2, d3 = candidates_plus(fm1, f0, fp1, fp2, wa, wb, h)
    b1, b2, b3 = smoothness_plus(fm1, f0, fp1, fp2, wa, wb, h)
    w1, w2, w3 = nonlinear_weights(b1, b2, b3, g1, g2, g3, eps)
    return combine_candidates(d1, d2, d3, w1, w2, w3, g1, g2, g3)


def _hybrid_minus(f, w, jj, ii, h, gamma, eps, axis: str):
    if axis == "x":
        signs = (w[jj, ii - 2], w[jj, ii - 1], w[jj, ii], w[jj, ii + 1])
    else:
        signs = (w[jj - 2, ii], w[jj - 1, ii], w[jj, ii], w[jj + 1, ii])
    if all(s > 0.0 for s in signs) or all(s < 0.0 for s in signs):
        if axis == "x":
            return big_minus(
                f[jj, ii - 2], f[jj, ii - 1], f[jj, ii], f[jj, ii + 1],
                w[jj, ii - 1], w[jj, ii + 1], h,
            )
        return big_minus(
            f[jj - 2, ii], f[jj - 1, ii], f[jj, ii], f[jj + 1, ii],
            w[jj - 1, ii], w[jj + 1, ii], h,
        )
    return _side_minus(f, w, jj, ii, h, gamma, eps, axis)


def _hybrid_plus(f, w, jj, ii, h, gamma, eps, axis: str):
    if axis == "x":
        signs = (w[jj, ii - 1], w[jj, ii], w[jj, ii + 1], w[jj, ii + 2])
    else:
        signs = (w[jj - 1, ii], w[jj, ii], w[jj + 1, ii], w[jj + 2, ii])
    if all(s > 0.0 for s in signs) or all(s < 0.0 for s in signs):
        if axis == "x":
            return big_plus(
                f[jj, ii - 1], f[jj, ii], f[jj, ii + 1], f[jj, ii + 2],
                w[jj, ii - 1], w[jj, ii + 1], h,
            )
        return big_plus(
            f[jj - 1, ii], f[jj, ii], f[jj + 1, ii], f[jj + 2, ii],
            w[jj - 1, ii], w[jj + 1, ii], h,
        )
    return _side_plus(f, w, jj, ii, h, gamma, eps, axis)


def reconstruct_quad(
    field: SolutionField,
    i: int,
    j: int,
    cfg: SolverConfig,
) -> DerivativeQuad:
    """All four one-sided derivatives at interior point ``(i, j)``.

    Applies the hybrid small-stencil bypass when the configuration asks for
    it and the point sits outside the always-full band near the inflow set.
    """
    g = field.grid.ghost
    jj, ii = j + g, i + g
    h = field.grid.h
    n = field.grid.n
    ga, eps = cfg.gamma, cfg.epsilon
    phi = field.phi
    fast = cfg.hybrid and field.categories[jj, ii] == int(PointCategory.SWEPT_FAR)
    if i == n - 1:
        pxm = -edge_derivative(
            phi[jj, ii], phi[jj, ii - 1], phi[jj, ii - 2],
            phi[jj, ii - 3], phi[jj, ii - 4], h,
        )
        pxp = pxm
    elif i == 0:
        pxp = edge_derivative(
            phi[jj, ii], phi[jj, ii + 1], phi[jj, ii + 2],
            phi[jj, ii + 3], phi[jj, ii + 4], h,
        )
        pxm = pxp
    elif fast:
        pxm = _hybrid_minus(field.phi, field.u, jj, ii, h, ga, eps, "x")
        pxp = _hybrid_plus(field.phi, field.u, jj, ii, h, ga, eps, "x")
    else:
        pxm = _side_minus(field.phi, field.u, jj, ii, h, ga, eps, "x")
        pxp = _side_plus(field.phi, field.u, jj, ii, h, ga, eps, "x")
    if j == n - 1:
        pym = -edge_derivative(
            phi[jj, ii], phi[jj - 1, ii], phi[jj - 2, ii],
            phi[jj - 3, ii], phi[jj - 4, ii], h,
        )
        pyp = pym
    elif j == 0:
        pyp = edge_derivative(
            phi[jj, ii], phi[jj + 1, ii], phi[jj + 2, ii],
            phi[jj + 3, ii], phi[jj + 4, ii], h,
        )
        pym = pyp
    elif fast:
        pym = _hybrid_minus(field.phi, field.v, jj, ii, h, ga, eps, "y")
        pyp = _hybrid_plus(field.phi, field.v, jj, ii, h, ga, eps, "y")
    else:
        pym = _side_minus(field.phi, field.v, jj, ii, h, ga, eps, "y")
        pyp = _side_plus(field.phi, field.v, jj, ii, h, ga, eps, "y")
    return DerivativeQuad(pxm, pxp, pym, pyp)


def _phi_candidate(field, i, j, problem, cfg, d, visc, f_val):
    g = field.grid.ghost
    jj, ii = j + g, i + g
    h = field.grid.h
    if f_val is None:
        f_val = float(problem.rhs(field.grid.x[ii], field.grid.y[jj]))
    p0 = field.phi[jj, ii]
    if problem.kind == "godunov":
        xmin = min(p0 - h * d.px_minus, p0 + h * d.px_plus)
        ymin = min(p0 - h * d.py_minus, p0 + h * d.py_plus)
        return godunov_update(xmin, ymin, f_val, h)
    return lf_update(p0, d, problem.hamiltonian, visc, h, f_val)


def approach1_point_update(
    field: SolutionField,
    i: int,
    j: int,
    problem: Problem,
    cfg: SolverConfig,
    visc: ViscosityPair | None = None,
    f_val: float | None = None,
) -> tuple[float, float, float]:
    """One derivative-reuse visit at interior ``(i, j)``, mutating the field.

    phi is solved from reconstructions of the pre-write data, then the point
    is reconstructed once more around the written value and the one-sided
    results double as the new stored derivatives wherever both sides share a
    sign; mixed signs keep the old value.  Returns the written ``(phi, u, v)``.
    """
    g = field.grid.ghost
    jj, ii = j + g, i + g
    d = reconstruct_quad(field, i, j, cfg)
    cand = _phi_candidate(field, i, j, problem, cfg, d, visc, f_val)
    p0 = field.phi[jj, ii]
    phi_new = relax(cand, p0, _edge_capped_omega(cfg.omega, i, j, field.grid.n))
    field.phi[jj, ii] = phi_new

    s = reconstruct_quad(field, i, j, cfg)
    if s.px_minus > 0.0 and s.px_plus > 0.0:
        field.u[jj, ii] = s.px_minus
    elif s.px_minus < 0.0 and s.px_plus < 0.0:
        field.u[jj, ii] = s.px_plus
    if s.py_minus > 0.0 and s.py_plus > 0.0:
        field.v[jj, ii] = s.py_minus
    elif s.py_minus < 0.0 and s.py_plus < 0.0:
        field.v[jj, ii] = s.py_plus
    return phi_new, field.u[jj, ii], field.v[jj, ii]


def approach2_point_update(
    field: SolutionField,
    i: int,
    j: int,
    problem: Problem,
    cfg: SolverConfig,
    visc: ViscosityPair | None = None,
    visc_aux: ViscosityPair | None = None,
    f_val: float | None = None,
    fx_val: float | None = None,
    fy_val: float | None = None,
) -> tuple[float, float, float]:
    """One auxiliary-transport visit at interior ``(i, j)``, mutating the field.

    The stored derivatives advance by their own transport update, with
    one-sided second derivatives from the Hermite data and central cross
    derivatives; all inputs are gathered before phi is written.
    """
    if visc_aux is None:
        raise ValueError("approach 2 requires the boosted viscosity pair")
    g = field.grid.ghost
    jj, ii = j + g, i + g
    h = field.grid.h
    phi, u, v = field.phi, field.u, field.v

    d = reconstruct_quad(field, i, j, cfg)
    u0 = u[jj, ii]
    v0 = v[jj, ii]
    n = field.grid.n
    # Near a domain edge the transport update is linearly unstable: its
    # stencils read the extrapolated padding, which nothing damps.  A
    # three-point collar refreshes u, v by reconstruction around the fresh
    # phi instead, exactly as the derivative-reuse scheme does.
    near_edge = i <= 2 or j <= 2 or i >= n - 3 or j >= n - 3
    if not near_edge:
        uxm = linear_second_minus(
            phi[jj, ii - 2], phi[jj, ii - 1], phi[jj, ii], phi[jj, ii + 1],
            u[jj, ii - 1], u0, u[jj, ii + 1], h,
        )
        uxp = linear_second_plus(
            phi[jj, ii - 1], phi[jj, ii], phi[jj, ii + 1], phi[jj, ii + 2],
            u[jj, ii - 1], u0, u[jj, ii + 1], h,
        )
        uyc = mixed_second_central(
            u[jj - 2, ii], u[jj - 1, ii], u[jj + 1, ii], u[jj + 2, ii], h
        )
        vym = linear_second_minus(
            phi[jj - 2, ii], phi[jj - 1, ii], phi[jj, ii], phi[jj + 1, ii],
            v[jj - 1, ii], v0, v[jj + 1, ii], h,
        )
        vyp = linear_second_plus(
            phi[jj - 1, ii], phi[jj, ii], phi[jj + 1, ii], phi[jj + 2, ii],
            v[jj - 1, ii], v0, v[jj + 1, ii], h,
        )
        vxc = mixed_second_central(
            v[jj, ii - 2], v[jj, ii - 1], v[jj, ii + 1], v[jj, ii + 2], h
        )

    cand = _phi_candidate(field, i, j, problem, cfg, d, visc, f_val)
    p0 = phi[jj, ii]
    phi_new = relax(cand, p0, _edge_capped_omega(cfg.omega, i, j, n))
    phi[jj, ii] = phi_new

    if near_edge:
        s = reconstruct_quad(field, i, j, cfg)
        if s.px_minus > 0.0 and s.px_plus > 0.0:
            u[jj, ii] = s.px_minus
        elif s.px_minus < 0.0 and s.px_plus < 0.0:
            u[jj, ii] = s.px_plus
        if s.py_minus > 0.0 and s.py_plus > 0.0:
            v[jj, ii] = s.py_minus
        elif s.py_minus < 0.0 and s.py_plus < 0.0:
            v[jj, ii] = s.py_plus
        return phi_new, u[jj, ii], v[jj, ii]

    x = field.grid.x[ii]
    y = field.grid.y[jj]
    fx = float(problem.rhs_dx(x, y)) if fx_val is None else fx_val
    fy = float(problem.rhs_dy(x, y)) if fy_val is None else fy_val
    # A one-sided pair straddling zero marks colliding characteristics
    # along that axis; the transported derivative has no stable value
    # there, so the write is skipped on the same keep-old rule the sign
    # selection applies.
    if (d.px_minus > 0.0 and d.px_plus > 0.0) or (
        d.px_minus < 0.0 and d.px_plus < 0.0
    ):
        u[jj, ii] = aux_update(
            "u", u0, d, DerivativeQuad(uxm, uxp, uyc, uyc),
            problem.hamiltonian, visc_aux, h, fx,
        )
    if (d.py_minus > 0.0 and d.py_plus > 0.0) or (
        d.py_minus < 0.0 and d.py_plus < 0.0
    ):
        v[jj, ii] = aux_update(
            "v", v0, d, DerivativeQuad(vxc, vxc, vym, vyp),
            problem.hamiltonian, visc_aux, h, fy,
        )
    return phi_new, u[jj, ii], v[jj, ii]


def reference_sweep(
    field: SolutionField,
    problem: Problem,
    cfg: SolverConfig,
    ordering,
    visc: ViscosityPair | None = None,
    visc_aux: ViscosityPair | None = None,
) -> None:
    """One directional sweep via the Python point updates (test oracle).

    Feeds the point updates the same precomputed right-hand-side lattice the
    compiled engine uses, so the two paths see bit-identical inputs.
    """
    (i0, i1, istep), (j0, j1, jstep) = ordering
    g = field.grid.ghost
    swept = int(PointCategory.SWEPT_NEAR)
    fv = _rhs_field(problem, field.grid)
    if cfg.approach == 2:
        X, Y = _padded_mesh(field.grid)
        fxv = np.asarray(problem.rhs_dx(X, Y), dtype=np.float64)
        fyv = np.asarray(problem.rhs_dy(X, Y), dtype=np.float64)
    for j in range(j0, j1, jstep):
        jj = j + g
        for i in range(i0, i1, istep):
            ii = i + g
            if field.categories[jj, ii] < swept:
                continue
            if cfg.approach == 1:
                approach1_point_update(
                    field, i, j, problem, cfg, visc, float(fv[jj, ii])
                )
            else:
                approach2_point_update(
                    field, i, j, problem, cfg, visc, visc_aux,
                    float(fv[jj, ii]), float(fxv[jj, ii]), float(fyv[jj, ii]),
                )
    ghost_extrapolate(field)


# ---------------------------------------------------------------------------
# Production driver


def solve(
    problem: Problem,
    grid: Grid2D,
    config: SolverConfig | None = None,
) -> tuple[SolutionField, SweepReport]:
    """Run the full solver: initialize, sweep to tolerance, measure errors."""
    cfg = (config or SolverConfig()).resolved(problem)
    t0 = time.perf_counter()

    field = first_order_init(problem, grid)
    cat = field.categories
    g, n, h = grid.ghost, grid.n, grid.h

    fv = _rhs_field(problem, grid)
    X, Y = _padded_mesh(grid)
    if cfg.approach == 2:
        fxv = np.asarray(problem.rhs_dx(X, Y), dtype=np.float64)
        fyv = np.asarray(problem.rhs_dy(X, Y), dtype=np.float64)
    else:
        fxv = np.zeros_like(fv)
        fyv = np.zeros_like(fv)

    ham = problem.hamiltonian
    alpha = beta = 0.0
    alpha_aux = beta_aux = 1.0
    if problem.kind == "lax_friedrichs" or cfg.approach == 2:
        box = derivative_box(field)
        if problem.kind == "lax_friedrichs":
            alpha, beta = lf_bounds(ham, box, boost=1.0)
        if cfg.approach == 2:
            alpha_aux, beta_aux = lf_bounds(ham, box, boost=cfg.aux_boost)

    freeze_on = cfg.freeze_tol is not None
    # The kernel slices per-point weight slots unconditionally, so the store
    # must be full-size even when freezing is off.
    wstore = np.zeros((grid.npad, grid.npad, 4, 3), dtype=np.float64)
    wprev = np.zeros_like(wstore)
    frozen = np.zeros((grid.npad, grid.npad), dtype=np.uint8)

    update_code = K.UPDATE_GODUNOV if problem.kind == "godunov" else K.UPDATE_LF
    g1, g2, g3 = cfg.gamma
    orderings = sweep_orderings(n)

    history: list[float] = []
    converged = False
    weights_frozen_at: int | None = None
    iterations = 0

    for it in range(1, cfg.max_iterations + 1):
        iterations = it
        prev = field.phi.copy()
        for (i0, i1, istep), (j0, j1, jstep) in orderings:
            K.sweep_pass(
                field.phi, field.u, field.v, cat, fv, fxv, fyv, h,
                update_code, ham.code, ham.params,
                alpha, beta, alpha_aux, beta_aux,
                cfg.omega, g1, g2, g3, cfg.epsilon,
                cfg.approach, cfg.hybrid, freeze_on, frozen, wstore,
                g, n, i0, i1, istep, j0, j1, jstep,
            )
            ghost_extrapolate(field)
        delta = K.masked_mean_abs_diff(field.phi, prev, cat)
        history.append(delta)
        if not K.fields_finite(field.phi, field.u, field.v, cat):
            raise DivergenceError(it)
        if freeze_on:
            newly = K.freeze_scan(cat, frozen, wstore, wprev, cfg.freeze_tol)
            if newly > 0 and weights_frozen_at is None:
                weights_frozen_at = it
        if delta < cfg.delta_tol:
            converged = True
            break

    l1 = linf = None
    if problem.exact is not None:
        from .report import error_norms

        l1, linf = error_norms(field, problem)

    report = SweepReport(
        iterations=iterations,
        delta_history=tuple(history),
        converged=converged,
        l1_error=l1,
        linf_error=linf,
        wall_time=time.perf_counter() - t0,
        weights_frozen_at=weights_frozen_at,
    )
    return field, report
