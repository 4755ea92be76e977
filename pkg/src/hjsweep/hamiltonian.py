"""Hamiltonians for the static equation H(phi_x, phi_y) = f(x, y).

Three families are built in:

* ``eikonal``: H(p, q) = sqrt(p^2 + q^2), convex.
* ``quasi_p``: the faster branch of a two-branch quartic dispersion relation
  arising in anisotropic elastic wave propagation, convex.
* ``quasi_sv``: the slower branch of the same relation, nonconvex.

Both quasi branches evaluate H = sqrt(-W/2 +- sqrt(W^2/4 - B)) where
W = c4 p^2 + c5 q^2 and B = c1 p^4 + c2 p^2 q^2 + c3 q^4 are built from the
four elastic moduli.  H is homogeneous of degree one, so its gradient is
constant along rays, and the partial derivatives follow from differentiating
E = H^2 and dividing by 2H.

Each :class:`HamiltonianSpec` carries vectorized numpy callables for setup
work (monotonicity bounds, inflow data) together with an integer dispatch
code and packed coefficient vector consumed by the compiled sweep kernels.
The scalar kernels ``ham_value``, ``ham_d1``, ``ham_d2`` mirror the
callables exactly so both surfaces produce identical IEEE results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from numba import njit

__all__ = [
    "HAM_EIKONAL",
    "HAM_QUASI_P",
    "HAM_QUASI_SV",
    "DerivativeQuad",
    "HamiltonianSpec",
    "QUASI_P_MODULI",
    "QUASI_SV_MODULI",
    "ViscosityPair",
    "aux_update",
    "eikonal",
    "godunov_candidates",
    "godunov_update",
    "ham_d1",
    "ham_d2",
    "ham_value",
    "lf_bounds",
    "lf_update",
    "quasi_p",
    "quasi_sv",
]


class DerivativeQuad(NamedTuple):
    """One-sided derivative reconstructions at a point."""

    px_minus: float
    px_plus: float
    py_minus: float
    py_plus: float


class ViscosityPair(NamedTuple):
    """Lax-Friedrichs dissipation constants."""

    alpha: float
    beta: float

HAM_EIKONAL = 0
HAM_QUASI_P = 1
HAM_QUASI_SV = 2

# Elastic moduli (a11, a33, a13, a44) of the two reference anisotropic media.
QUASI_P_MODULI = (15.0638, 10.8373, 1.6381, 3.1258)
QUASI_SV_MODULI = (15.90, 6.21, 4.82, 4.00)


@dataclass(frozen=True)
class HamiltonianSpec:
    """A Hamiltonian H(p, q) with its partial derivatives.

    ``value``, ``d1`` and ``d2`` are vectorized over numpy arrays; ``code``
    and ``params`` select the matching compiled scalar kernels inside the
    sweep engine.  ``convex`` records whether level sets of H are convex,
    which decides the update formula a problem defaults to.
    """

    name: str
    code: int
    params: np.ndarray
    value: Callable[[np.ndarray, np.ndarray], np.ndarray]
    d1: Callable[[np.ndarray, np.ndarray], np.ndarray]
    d2: Callable[[np.ndarray, np.ndarray], np.ndarray]
    convex: bool


def _quasi_coeffs(moduli: tuple[float, float, float, float]) -> np.ndarray:
    a11, a33, a13, a44 = (float(m) for m in moduli)
    return np.array(
        [
            a11 * a44,
            a11 * a33 + a44 * a44 - (a13 + a44) ** 2,
            a33 * a44,
            -(a11 + a44),
            -(a33 + a44),
        ],
        dtype=np.float64,
    )


def eikonal() -> HamiltonianSpec:
    """H(p, q) = sqrt(p^2 + q^2)."""

    def value(p, q):
        return np.hypot(p, q)

    def d1(p, q):
        r = np.hypot(p, q)
        with np.errstate(invalid="ignore", divide="ignore"):
            out = np.where(r > 0.0, p / np.where(r > 0.0, r, 1.0), 0.0)
        return out

    def d2(p, q):
        r = np.hypot(p, q)
        with np.errstate(invalid="ignore", divide="ignore"):
            out = np.where(r > 0.0, q / np.where(r > 0.0, r, 1.0), 0.0)
        return out

    return HamiltonianSpec(
        name="eikonal",
        code=HAM_EIKONAL,
        params=np.zeros(5, dtype=np.float64),
        value=value,
        d1=d1,
        d2=d2,
        convex=True,
    )


def _quasi(moduli, sign: float, name: str, code: int, convex: bool) -> HamiltonianSpec:
    c = _quasi_coeffs(moduli)
    c1, c2, c3, c4, c5 = (float(v) for v in c)

    def _core(p, q):
        p2 = p * p
        q2 = q * q
        w = c4 * p2 + c5 * q2
        b = c1 * p2 * p2 + c2 * p2 * q2 + c3 * q2 * q2
        d = np.maximum(0.25 * w * w - b, 0.0)
        s = np.sqrt(d)
        e = np.maximum(-0.5 * w + sign * s, 0.0)
        return w, s, np.sqrt(e)

    def value(p, q):
        return _core(np.asarray(p, dtype=np.float64), np.asarray(q, dtype=np.float64))[2]

    def _grads(p, q):
        p = np.asarray(p, dtype=np.float64)
        q = np.asarray(q, dtype=np.float64)
        w, s, hval = _core(p, q)
        ok = (hval > 0.0) & (s > 0.0)
        s_safe = np.where(ok, s, 1.0)
        h_safe = np.where(ok, hval, 1.0)
        dd_dp = c4 * p * w - 4.0 * c1 * p * p * p - 2.0 * c2 * p * q * q
        dd_dq = c5 * q * w - 4.0 * c3 * q * q * q - 2.0 * c2 * p * p * q
        g1 = (-c4 * p + sign * dd_dp / (2.0 * s_safe)) / (2.0 * h_safe)
        g2 = (-c5 * q + sign * dd_dq / (2.0 * s_safe)) / (2.0 * h_safe)
        zero = np.zeros_like(g1)
        return np.where(ok, g1, zero), np.where(ok, g2, zero)

    def d1(p, q):
        return _grads(p, q)[0]

    def d2(p, q):
        return _grads(p, q)[1]

    return HamiltonianSpec(
        name=name, code=code, params=c, value=value, d1=d1, d2=d2, convex=convex
    )


def quasi_p(moduli: tuple[float, float, float, float] = QUASI_P_MODULI) -> HamiltonianSpec:
    """Convex fast branch of the anisotropic dispersion relation."""
    return _quasi(moduli, +1.0, "quasi_p", HAM_QUASI_P, convex=True)


def quasi_sv(moduli: tuple[float, float, float, float] = QUASI_SV_MODULI) -> HamiltonianSpec:
    """Nonconvex slow branch of the anisotropic dispersion relation."""
    return _quasi(moduli, -1.0, "quasi_sv", HAM_QUASI_SV, convex=False)


# ---------------------------------------------------------------------------
# Compiled scalar kernels, dispatched on the spec code.  These repeat the
# formulas above so the Gauss-Seidel engine never leaves compiled code; the
# test suite pins them against the vectorized callables.


@njit(cache=True)
def _quasi_core(c, sign, p, q):
    p2 = p * p
    q2 = q * q
    w = c[3] * p2 + c[4] * q2
    b = c[0] * p2 * p2 + c[1] * p2 * q2 + c[2] * q2 * q2
    d = 0.25 * w * w - b
    if d < 0.0:
        d = 0.0
    s = np.sqrt(d)
    e = -0.5 * w + sign * s
    if e < 0.0:
        e = 0.0
    return w, s, np.sqrt(e)


@njit(cache=True)
def ham_value(code, c, p, q):
    if code == HAM_EIKONAL:
        return np.hypot(p, q)
    sign = 1.0 if code == HAM_QUASI_P else -1.0
    return _quasi_core(c, sign, p, q)[2]


@njit(cache=True)
def ham_d1(code, c, p, q):
    if code == HAM_EIKONAL:
        r = np.hypot(p, q)
        if r > 0.0:
            return p / r
        return 0.0
    sign = 1.0 if code == HAM_QUASI_P else -1.0
    w, s, hval = _quasi_core(c, sign, p, q)
    if hval > 0.0 and s > 0.0:
        dd_dp = c[3] * p * w - 4.0 * c[0] * p * p * p - 2.0 * c[1] * p * q * q
        return (-c[3] * p + sign * dd_dp / (2.0 * s)) / (2.0 * hval)
    return 0.0


@njit(cache=True)
def ham_d2(code, c, p, q):
    if code == HAM_EIKONAL:
        r = np.hypot(p, q)
        if r > 0.0:
            return q / r
        return 0.0
    sign = 1.0 if code == HAM_QUASI_P else -1.0
    w, s, hval = _quasi_core(c, sign, p, q)
    if hval > 0.0 and s > 0.0:
        dd_dq = c[4] * q * w - 4.0 * c[2] * q * q * q - 2.0 * c[1] * p * p * q
        return (-c[4] * q + sign * dd_dq / (2.0 * s)) / (2.0 * hval)
    return 0.0


# ---------------------------------------------------------------------------
# Point update formulas shared by the solvers


def lf_bounds(
    spec: HamiltonianSpec,
    uv_range: tuple[tuple[float, float], tuple[float, float]],
    boost: float = 1.0,
    samples: int = 101,
) -> ViscosityPair:
    """Dissipation constants alpha = boost*max|H1|, beta = boost*max|H2|.

    The maxima are estimated on a ``samples`` x ``samples`` lattice over the
    derivative bounding box ``uv_range``.  Non-finite partials anywhere on
    the lattice indicate an invalid Hamiltonian/box pairing and raise.
    """
    (pmin, pmax), (qmin, qmax) = uv_range
    if not (pmax >= pmin and qmax >= qmin):
        raise ValueError("empty derivative range")
    p = np.linspace(pmin, pmax, samples)
    q = np.linspace(qmin, qmax, samples)
    pp, qq = np.meshgrid(p, q)
    a = np.abs(spec.d1(pp, qq))
    b = np.abs(spec.d2(pp, qq))
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError(f"non-finite Hamiltonian partials over box {uv_range}")
    return ViscosityPair(boost * float(a.max()), boost * float(b.max()))


def lf_update(
    phi_old: float,
    d: DerivativeQuad,
    spec: HamiltonianSpec,
    visc: ViscosityPair,
    h: float,
    f_val: float,
) -> float:
    """One Lax-Friedrichs point update."""
    alpha, beta = visc
    if alpha + beta <= 0.0:
        raise ValueError("alpha + beta must be positive")
    pbar = 0.5 * (d.px_minus + d.px_plus)
    qbar = 0.5 * (d.py_minus + d.py_plus)
    hval = float(spec.value(pbar, qbar))
    return (
        f_val
        - hval
        + 0.5 * alpha * (d.px_plus - d.px_minus)
        + 0.5 * beta * (d.py_plus - d.py_minus)
    ) * (h / (alpha + beta)) + phi_old


def godunov_candidates(
    phi_old: float, d: DerivativeQuad, h: float
) -> tuple[float, float]:
    """Directional candidate values feeding the Godunov update."""
    xmin = min(phi_old - h * d.px_minus, phi_old + h * d.px_plus)
    ymin = min(phi_old - h * d.py_minus, phi_old + h * d.py_plus)
    return xmin, ymin


@njit(cache=True)
def godunov_scalar(xmin, ymin, f_val, h):
    fh = f_val * h
    diff = xmin - ymin
    if abs(diff) >= fh:
        # Causality is one-dimensional: the smaller direction wins outright.
        return min(xmin, ymin) + fh
    return 0.5 * (xmin + ymin + np.sqrt(2.0 * fh * fh - diff * diff))


def godunov_update(xmin: float, ymin: float, f_val: float, h: float) -> float:
    """Closed-form solution of the Godunov Eikonal point equation.

    Ties ``|xmin - ymin| = f h`` route to the one-sided branch; the two
    branches coincide there, so the choice only fixes determinism.
    """
    if f_val <= 0.0 or h <= 0.0:
        raise ValueError("godunov update needs f > 0 and h > 0")
    fh = f_val * h
    if abs(xmin - ymin) < fh:
        rad = 2.0 * fh * fh - (xmin - ymin) ** 2
        assert rad >= 0.0
    return float(godunov_scalar(xmin, ymin, f_val, h))


def aux_update(
    axis: str,
    w_old: float,
    d_phi: DerivativeQuad,
    d_w: DerivativeQuad,
    spec: HamiltonianSpec,
    visc: ViscosityPair,
    h: float,
    drive: float,
) -> float:
    """One auxiliary-transport update of a stored derivative component.

    ``d_phi`` supplies the solution derivatives at which the Hamiltonian
    partials are evaluated; ``d_w`` the one-sided derivatives of the
    transported quantity itself (for ``axis='u'`` its y-pair holds the
    central cross derivative twice, and symmetrically for ``axis='v'``).
    ``drive`` is the matching partial of the right-hand side, f_x or f_y.
    """
    if axis not in ("u", "v"):
        raise ValueError(f"axis must be 'u' or 'v', got {axis!r}")
    alpha, beta = visc
    if alpha + beta <= 0.0:
        raise ValueError("alpha + beta must be positive")
    pbar = 0.5 * (d_phi.px_minus + d_phi.px_plus)
    qbar = 0.5 * (d_phi.py_minus + d_phi.py_plus)
    h1 = float(spec.d1(pbar, qbar))
    h2 = float(spec.d2(pbar, qbar))
    res = (
        drive
        - h1 * 0.5 * (d_w.px_minus + d_w.px_plus)
        - h2 * 0.5 * (d_w.py_minus + d_w.py_plus)
        + 0.5 * alpha * (d_w.px_plus - d_w.px_minus)
        + 0.5 * beta * (d_w.py_plus - d_w.py_minus)
    )
    return w_old + (h / (alpha + beta)) * res
