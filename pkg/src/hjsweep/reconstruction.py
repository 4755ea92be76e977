"""One-dimensional Hermite-WENO derivative reconstructions.

Given solution values ``phi`` on four consecutive nodes and stored first
derivatives ``u`` on the two interior-flanking nodes, the scheme builds three
candidate approximations of ``phi_x`` at the target node: a fifth-order one
from the quintic Hermite interpolant of the full data (two derivative
conditions plus four values) and two second-order ones from quadratic
interpolants of value-only substencils.  A nonlinear convex combination of
the candidates keeps fifth-order accuracy where the solution is smooth while
falling back to the one-sided quadratic across kinks.

Conventions, for a target node ``i`` with spacing ``h``:

* minus side (left-biased): values at ``i-2, i-1, i, i+1`` passed as
  ``f0..f3``, derivatives at ``i-1`` and ``i+1`` passed as ``ua, ub``;
* plus side (right-biased): values at ``i-1, i, i+1, i+2`` as ``f0..f3``,
  derivatives again at ``i-1`` and ``i+1``.

Smoothness indicators are sums over derivative orders >= 2 of the scaled
squared L2 norms of the interpolant derivatives on the central cell, reduced
to closed forms in the data.  Each indicator of a polynomial of degree <= 1
vanishes identically, which is what steers the weights away from candidates
whose stencil crosses a kink.

All reconstruction routines are compiled scalar kernels; they are used both
directly by the sweep engine and from Python by the test suite.
"""

from __future__ import annotations

from numba import njit

__all__ = [
    "DEFAULT_GAMMA",
    "big_minus",
    "big_plus",
    "candidates_minus",
    "candidates_plus",
    "combine_candidates",
    "edge_derivative",
    "hweno_minus",
    "hweno_plus",
    "linear_second_minus",
    "linear_second_plus",
    "mixed_second_central",
    "nonlinear_weights",
    "smoothness_minus",
    "smoothness_plus",
]

# Linear weights of the (big, left quadratic, right quadratic) candidates.
# Heavily favoring the quintic keeps the smooth-region combination close to
# the pure fifth-order value.
DEFAULT_GAMMA = (0.98, 0.01, 0.01)


@njit(cache=True)
def big_minus(f0, f1, f2, f3, ua, ub, h):
    """Fifth-order left-biased derivative from the quintic Hermite fit alone."""
    w1 = h * ua
    w3 = h * ub
    return -(f0 + 18.0 * f1 - 9.0 * f2 - 10.0 * f3 + 9.0 * w1 + 3.0 * w3) / (18.0 * h)


@njit(cache=True)
def big_plus(f0, f1, f2, f3, ua, ub, h):
    """Fifth-order right-biased derivative from the quintic Hermite fit alone."""
    w1 = h * ua
    w3 = h * ub
    return -(10.0 * f0 + 9.0 * f1 - 18.0 * f2 - f3 + 3.0 * w1 + 9.0 * w3) / (18.0 * h)


@njit(cache=True)
def edge_derivative(f0, f1, f2, f3, f4, h):
    """Fourth-order one-sided derivative at the first of five equispaced nodes.

    Used at domain-edge points, where it replaces the across-edge Hermite
    reconstruction: every input lies on the interior side, so the value feeds
    nothing back through the extrapolated padding.  For the far edge pass the
    values in reverse order and negate the result.
    """
    return (
        -25.0 * f0 + 48.0 * f1 - 36.0 * f2 + 16.0 * f3 - 3.0 * f4
    ) / (12.0 * h)


@njit(cache=True)
def candidates_minus(f0, f1, f2, f3, ua, ub, h):
    """Candidate left-biased derivatives at node i.

    ``f0..f3`` are phi at ``i-2 .. i+1``; ``ua, ub`` are the stored first
    derivatives at ``i-1`` and ``i+1``.  Returns ``(d1, d2, d3)``: the
    quintic Hermite derivative and the two quadratic one-sided/central ones.
    """
    d1 = big_minus(f0, f1, f2, f3, ua, ub, h)
    d2 = (f0 - 4.0 * f1 + 3.0 * f2) / (2.0 * h)
    d3 = (f3 - f1) / (2.0 * h)
    return d1, d2, d3


@njit(cache=True)
def candidates_plus(f0, f1, f2, f3, ua, ub, h):
    """Candidate right-biased derivatives at node i.

    ``f0..f3`` are phi at ``i-1 .. i+2``; ``ua, ub`` are the stored first
    derivatives at ``i-1`` and ``i+1``.
    """
    d1 = big_plus(f0, f1, f2, f3, ua, ub, h)
    d2 = (f2 - f0) / (2.0 * h)
    d3 = (-3.0 * f1 + 4.0 * f2 - f3) / (2.0 * h)
    return d1, d2, d3


@njit(cache=True)
def smoothness_minus(f0, f1, f2, f3, ua, ub, h):
    """Smoothness indicators of the three minus-side candidates."""
    w1 = h * ua
    w3 = h * ub
    # Quintic coefficients about the target node, in units of h.
    a2 = f1 - 2.0 * f2 + f3 + 0.25 * (w1 - w3)
    a3 = (
        f0 / 9.0
        + 0.75 * f1
        - f2
        + f3 * (5.0 / 36.0)
        + 0.75 * w1
        + w3 / 12.0
    )
    a4 = -0.5 * f1 + f2 - 0.5 * f3 - 0.25 * (w1 - w3)
    a5 = (
        -f0 / 18.0
        - 0.25 * f1
        + 0.5 * f2
        - f3 * (7.0 / 36.0)
        - 0.25 * w1
        + w3 / 12.0
    )
    b1 = (
        4.0 * a2 * a2
        + 4.0 * a2 * a4
        + 39.0 * a3 * a3
        + 63.0 * a3 * a5
        + (3129.0 / 5.0) * a4 * a4
        + (438085.0 / 28.0) * a5 * a5
    ) / (h * h)
    t2 = f0 - 2.0 * f1 + f2
    t3 = f1 - 2.0 * f2 + f3
    return b1, t2 * t2 / (h * h), t3 * t3 / (h * h)


@njit(cache=True)
def smoothness_plus(f0, f1, f2, f3, ua, ub, h):
    """Smoothness indicators of the three plus-side candidates."""
    w1 = h * ua
    w3 = h * ub
    a2 = f0 - 2.0 * f1 + f2 + 0.25 * (w1 - w3)
    a3 = (
        -f0 * (5.0 / 36.0)
        + f1
        - 0.75 * f2
        - f3 / 9.0
        + w1 / 12.0
        + 0.75 * w3
    )
    a4 = -0.5 * f0 + f1 - 0.5 * f2 - 0.25 * (w1 - w3)
    a5 = (
        f0 * (7.0 / 36.0)
        - 0.5 * f1
        + 0.25 * f2
        + f3 / 18.0
        + w1 / 12.0
        - 0.25 * w3
    )
    b1 = (
        4.0 * a2 * a2
        + 4.0 * a2 * a4
        + 39.0 * a3 * a3
        + 63.0 * a3 * a5
        + (3129.0 / 5.0) * a4 * a4
        + (438085.0 / 28.0) * a5 * a5
    ) / (h * h)
    t2 = f0 - 2.0 * f1 + f2
    t3 = f1 - 2.0 * f2 + f3
    return b1, t2 * t2 / (h * h), t3 * t3 / (h * h)


@njit(cache=True)
def nonlinear_weights(b1, b2, b3, g1, g2, g3, eps):
    """Normalized tau-form weights from smoothness indicators.

    ``eps`` regularizes only the denominator; equal indicators reproduce the
    linear weights exactly, and tau grows quadratically with indicator
    spread so the weights react sharply to a single rough candidate.
    """
    tau = 0.5 * (abs(b1 - b2) + abs(b1 - b3))
    tau = tau * tau
    w1 = g1 * (1.0 + tau / (eps + b1))
    w2 = g2 * (1.0 + tau / (eps + b2))
    w3 = g3 * (1.0 + tau / (eps + b3))
    s = w1 + w2 + w3
    return w1 / s, w2 / s, w3 / s


@njit(cache=True)
def combine_candidates(d1, d2, d3, w1, w2, w3, g1, g2, g3):
    """Convex combination that is exactly ``d1`` when the weights equal gamma."""
    return w1 * (d1 / g1 - (g2 / g1) * d2 - (g3 / g1) * d3) + w2 * d2 + w3 * d3


@njit(cache=True)
def hweno_minus(f0, f1, f2, f3, ua, ub, h, g1, g2, g3, eps):
    """Full left-biased reconstruction: candidates, indicators, combination."""
    d1, d2, d3 = candidates_minus(f0, f1, f2, f3, ua, ub, h)
    b1, b2, b3 = smoothness_minus(f0, f1, f2, f3, ua, ub, h)
    w1, w2, w3 = nonlinear_weights(b1, b2, b3, g1, g2, g3, eps)
    return combine_candidates(d1, d2, d3, w1, w2, w3, g1, g2, g3)


@njit(cache=True)
def hweno_plus(f0, f1, f2, f3, ua, ub, h, g1, g2, g3, eps):
    """Full right-biased reconstruction: candidates, indicators, combination."""
    d1, d2, d3 = candidates_plus(f0, f1, f2, f3, ua, ub, h)
    b1, b2, b3 = smoothness_plus(f0, f1, f2, f3, ua, ub, h)
    w1, w2, w3 = nonlinear_weights(b1, b2, b3, g1, g2, g3, eps)
    return combine_candidates(d1, d2, d3, w1, w2, w3, g1, g2, g3)


@njit(cache=True)
def linear_second_minus(f0, f1, f2, f3, ua, u0, ub, h):
    """Left-biased second derivative of phi from the degree-6 Hermite fit.

    ``f0..f3`` are phi at ``i-2 .. i+1``; ``ua, u0, ub`` the stored first
    derivatives at ``i-1, i, i+1``.  Exact for polynomials of degree <= 6.
    """
    return (
        f0
        + 54.0 * f1
        - 81.0 * f2
        + 26.0 * f3
        + h * (18.0 * ua + 18.0 * u0 - 6.0 * ub)
    ) / (18.0 * h * h)


@njit(cache=True)
def linear_second_plus(f0, f1, f2, f3, ua, u0, ub, h):
    """Right-biased second derivative; data at ``i-1 .. i+2`` and
    ``i-1, i, i+1``."""
    return (
        26.0 * f0
        - 81.0 * f1
        + 54.0 * f2
        + f3
        + h * (6.0 * ua - 18.0 * u0 - 18.0 * ub)
    ) / (18.0 * h * h)


@njit(cache=True)
def mixed_second_central(wm2, wm1, wp1, wp2, h):
    """Fourth-order central first derivative of a stored derivative field.

    Used for the cross terms (u_y and v_x) of the auxiliary transport
    scheme; exact for polynomials of degree <= 4.
    """
    return (wm2 - 8.0 * wm1 + 8.0 * wp1 - wp2) / (12.0 * h)
