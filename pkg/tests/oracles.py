"""Independent cross-checks for the numerical kernels.

Everything here is built from generic polynomial interpolation, linear
solves, and Gauss-Legendre quadrature, so none of the closed-form
coefficients under test appear anywhere in this file.
"""

from __future__ import annotations

import numpy as np


def fit_with_derivatives(nodes, values, deriv_nodes, derivs):
    """Polynomial matching point values and point derivatives.

    Solves the confluent Vandermonde system for the unique polynomial of
    degree ``len(nodes) + len(deriv_nodes) - 1`` and returns it as a
    ``numpy.polynomial.Polynomial``.
    """
    nodes = list(nodes)
    deriv_nodes = list(deriv_nodes)
    m = len(nodes) + len(deriv_nodes)
    a = np.zeros((m, m))
    b = np.zeros(m)
    for r, (x, y) in enumerate(zip(nodes, values)):
        a[r] = [x**k for k in range(m)]
        b[r] = y
    for r, (x, dy) in enumerate(zip(deriv_nodes, derivs), start=len(nodes)):
        a[r] = [0.0] + [k * x ** (k - 1) for k in range(1, m)]
        b[r] = dy
    return np.polynomial.Polynomial(np.linalg.solve(a, b))


def fit_points(nodes, values):
    return fit_with_derivatives(nodes, values, (), ())


def beta_quadrature(poly, center, h, rmax):
    """Smoothness score: sum over derivative orders 2..rmax of the scaled
    integral of the squared derivative over the cell of width h at center.

    Gauss-Legendre with 16 points is exact for every polynomial integrand
    arising here (degree well under 31).
    """
    xs, ws = np.polynomial.legendre.leggauss(16)
    xq = center + 0.5 * h * xs
    wq = 0.5 * h * ws
    total = 0.0
    for order in range(2, rmax + 1):
        d = poly.deriv(order)
        total += h ** (2 * order - 3) * float(np.sum(wq * d(xq) ** 2))
    return total


def betas_minus(f0, f1, f2, f3, ua, ub, h):
    """Quadrature smoothness triple for the backward-biased stencil.

    Candidate 1 is the Hermite quintic on the four values plus the two
    derivatives; candidates 2 and 3 are the backward and centered parabolas.
    The evaluation cell is centered on the third node.
    """
    xs = np.array([-2.0, -1.0, 0.0, 1.0]) * h
    p1 = fit_with_derivatives(xs, [f0, f1, f2, f3], [-h, h], [ua, ub])
    p2 = fit_points(xs[:3], [f0, f1, f2])
    p3 = fit_points(xs[1:], [f1, f2, f3])
    return (
        beta_quadrature(p1, 0.0, h, 5),
        beta_quadrature(p2, 0.0, h, 2),
        beta_quadrature(p3, 0.0, h, 2),
    )


def betas_plus(f0, f1, f2, f3, ua, ub, h):
    """Quadrature smoothness triple for the forward-biased stencil."""
    xs = np.array([-1.0, 0.0, 1.0, 2.0]) * h
    p1 = fit_with_derivatives(xs, [f0, f1, f2, f3], [-h, h], [ua, ub])
    p2 = fit_points(xs[:3], [f0, f1, f2])
    p3 = fit_points(xs[1:], [f1, f2, f3])
    return (
        beta_quadrature(p1, 0.0, h, 5),
        beta_quadrature(p2, 0.0, h, 2),
        beta_quadrature(p3, 0.0, h, 2),
    )


def hermite_derivative_minus(f0, f1, f2, f3, ua, ub, h, order=1):
    """Derivative of the backward-biased Hermite quintic at the third node."""
    xs = np.array([-2.0, -1.0, 0.0, 1.0]) * h
    p = fit_with_derivatives(xs, [f0, f1, f2, f3], [-h, h], [ua, ub])
    return float(p.deriv(order)(0.0))


def hermite_derivative_plus(f0, f1, f2, f3, ua, ub, h, order=1):
    """Derivative of the forward-biased Hermite quintic at the second node."""
    xs = np.array([-1.0, 0.0, 1.0, 2.0]) * h
    p = fit_with_derivatives(xs, [f0, f1, f2, f3], [-h, h], [ua, ub])
    return float(p.deriv(order)(0.0))


def second_derivative_minus(f0, f1, f2, f3, ua, u0, ub, h):
    """Second derivative at the third node of the degree-six Hermite fit."""
    xs = np.array([-2.0, -1.0, 0.0, 1.0]) * h
    p = fit_with_derivatives(xs, [f0, f1, f2, f3], [-h, 0.0, h], [ua, u0, ub])
    return float(p.deriv(2)(0.0))


def second_derivative_plus(f0, f1, f2, f3, ua, u0, ub, h):
    """Second derivative at the second node of the degree-six Hermite fit."""
    xs = np.array([-1.0, 0.0, 1.0, 2.0]) * h
    p = fit_with_derivatives(xs, [f0, f1, f2, f3], [-h, 0.0, h], [ua, u0, ub])
    return float(p.deriv(2)(0.0))


def godunov_residual(phi, xmin, ymin, f_val, h):
    """Residual of the upwind quadratic the causal point value must satisfy."""
    px = max((phi - xmin) / h, 0.0)
    py = max((phi - ymin) / h, 0.0)
    return px * px + py * py - f_val * f_val


def extrapolate(values, steps_out):
    """Value ``steps_out`` spacings beyond the last of equally spaced samples,
    from the unique polynomial through all of them."""
    values = np.asarray(values, dtype=np.float64)
    xs = np.arange(len(values), dtype=np.float64)
    p = fit_points(xs, values)
    return float(p(len(values) - 1 + steps_out))
