import numpy as np
import pytest
from numpy.testing import assert_allclose

from hjsweep.hamiltonian import (
    DerivativeQuad,
    HamiltonianSpec,
    ViscosityPair,
    aux_update,
    eikonal,
    godunov_candidates,
    godunov_update,
    ham_d1,
    ham_d2,
    ham_value,
    lf_bounds,
    lf_update,
    quasi_p,
    quasi_sv,
)
from hjsweep.reconstruction import DEFAULT_GAMMA, hweno_minus, hweno_plus

import oracles

RNG = np.random.default_rng(7)

SPECS = (eikonal(), quasi_p(), quasi_sv())


def linear_spec(a, b):
    """H(p, q) = a p + b q, for hand-checkable transport cases."""
    return HamiltonianSpec(
        name="linear",
        code=-1,
        params=np.zeros(5),
        value=lambda p, q: a * p + b * q,
        d1=lambda p, q: np.full_like(np.asarray(p, dtype=float), a),
        d2=lambda p, q: np.full_like(np.asarray(q, dtype=float), b),
        convex=True,
    )


# ---------------------------------------------------------------------------
# Lax-Friedrichs bounds


def test_lf_bounds_eikonal_unit():
    got = lf_bounds(eikonal(), ((-1.0, 1.0), (-1.0, 1.0)))
    assert got == ViscosityPair(1.0, 1.0)


def test_lf_bounds_linear():
    got = lf_bounds(linear_spec(-2.5, 0.75), ((-1.0, 1.0), (-1.0, 1.0)))
    assert_allclose(got, (2.5, 0.75), rtol=1e-14)


def test_lf_bounds_boost():
    a, b = lf_bounds(eikonal(), ((-1.0, 1.0), (-1.0, 1.0)), boost=2.0)
    assert_allclose((a, b), (2.0, 2.0), rtol=1e-14)


def test_lf_bounds_quasi_p_vs_fine_sampling():
    box = ((-1.0, 1.0), (-1.0, 1.0))
    coarse = lf_bounds(quasi_p(), box)
    fine = lf_bounds(quasi_p(), box, samples=1001)
    assert abs(coarse.alpha - fine.alpha) <= 0.01 * fine.alpha
    assert abs(coarse.beta - fine.beta) <= 0.01 * fine.beta


def test_lf_bounds_nested_boxes():
    # the wide lattice contains the narrow one point-for-point, so the
    # sampled maxima cannot decrease
    for spec in SPECS:
        small = lf_bounds(spec, ((-1.0, 1.0), (-1.0, 1.0)), samples=101)
        large = lf_bounds(spec, ((-3.0, 3.0), (-3.0, 3.0)), samples=301)
        assert large.alpha >= small.alpha
        assert large.beta >= small.beta


def test_lf_bounds_empty_range_raises():
    with pytest.raises(ValueError):
        lf_bounds(eikonal(), ((1.0, -1.0), (0.0, 1.0)))


def test_lf_bounds_nonfinite_partials_raise():
    bad = HamiltonianSpec(
        name="bad",
        code=-1,
        params=np.zeros(5),
        value=lambda p, q: p,
        d1=lambda p, q: np.asarray(p, dtype=float) / 0.0,
        d2=lambda p, q: np.zeros_like(np.asarray(q, dtype=float)),
        convex=True,
    )
    with pytest.raises(ValueError):
        with np.errstate(divide="ignore", invalid="ignore"):
            lf_bounds(bad, ((-1.0, 1.0), (-1.0, 1.0)))


# ---------------------------------------------------------------------------
# Lax-Friedrichs point update


def test_lf_update_fixed_point():
    d = DerivativeQuad(0.6, 0.6, 0.8, 0.8)
    got = lf_update(0.5, d, eikonal(), ViscosityPair(1.0, 1.0), 0.1, 1.0)
    assert_allclose(got, 0.5, rtol=1e-14)


def test_lf_update_hand_case():
    d = DerivativeQuad(0.6, 0.8, 0.0, 0.0)
    got = lf_update(0.5, d, eikonal(), ViscosityPair(1.0, 1.0), 0.1, 1.0)
    assert_allclose(got, 0.52, rtol=1e-13)


def test_lf_update_consistency_any_viscosity():
    for _ in range(20):
        p, q = RNG.uniform(-2.0, 2.0, size=2)
        a, b = RNG.uniform(0.1, 5.0, size=2)
        phi_old = float(RNG.uniform(-1.0, 1.0))
        d = DerivativeQuad(p, p, q, q)
        f = float(eikonal().value(p, q))
        got = lf_update(phi_old, d, eikonal(), ViscosityPair(a, b), 0.2, f)
        assert_allclose(got, phi_old, rtol=1e-13, atol=1e-14)


def test_lf_update_zero_viscosity_raises():
    with pytest.raises(ValueError):
        lf_update(0.0, DerivativeQuad(0, 0, 0, 0), eikonal(), ViscosityPair(0.0, 0.0), 0.1, 1.0)


def test_lf_update_exact_data_residual_order():
    # phi = sin(x) + cos(y) with f = H(grad phi): feeding reconstructed
    # derivatives of the exact solution leaves phi nearly unchanged, and the
    # defect shrinks at the reconstruction's order
    x0, y0 = 0.3, 0.4
    g1, g2, g3 = DEFAULT_GAMMA
    spec = eikonal()
    f_val = float(np.hypot(np.cos(x0), -np.sin(y0)))
    phi_old = np.sin(x0) + np.cos(y0)
    errs = []
    for h in (0.1, 0.05, 0.025):
        fx = [np.sin(x0 + k * h) + np.cos(y0) for k in (-2, -1, 0, 1, 2)]
        fy = [np.sin(x0) + np.cos(y0 + k * h) for k in (-2, -1, 0, 1, 2)]
        ux = [np.cos(x0 + k * h) for k in (-1, 1)]
        vy = [-np.sin(y0 + k * h) for k in (-1, 1)]
        d = DerivativeQuad(
            hweno_minus(fx[0], fx[1], fx[2], fx[3], ux[0], ux[1], h, g1, g2, g3, 1e-6),
            hweno_plus(fx[1], fx[2], fx[3], fx[4], ux[0], ux[1], h, g1, g2, g3, 1e-6),
            hweno_minus(fy[0], fy[1], fy[2], fy[3], vy[0], vy[1], h, g1, g2, g3, 1e-6),
            hweno_plus(fy[1], fy[2], fy[3], fy[4], vy[0], vy[1], h, g1, g2, g3, 1e-6),
        )
        got = lf_update(phi_old, d, spec, ViscosityPair(1.0, 1.0), h, f_val)
        errs.append(abs(got - phi_old))
    orders = [np.log2(a / b) for a, b in zip(errs, errs[1:])]
    assert min(orders) >= 4.5


# ---------------------------------------------------------------------------
# Godunov update


def test_godunov_candidates_hand_cases():
    xmin, _ = godunov_candidates(1.0, DerivativeQuad(2.0, -1.0, 0.0, 0.0), 0.1)
    assert_allclose(xmin, 0.8, rtol=1e-14)
    xmin, ymin = godunov_candidates(0.7, DerivativeQuad(0.0, 0.0, 0.0, 0.0), 0.1)
    assert xmin == 0.7 and ymin == 0.7
    _, ymin = godunov_candidates(0.3, DerivativeQuad(0.0, 0.0, -4.0, 2.0), 0.05)
    assert_allclose(ymin, 0.4, rtol=1e-14)


def test_godunov_update_symmetric():
    assert_allclose(godunov_update(0.0, 0.0, 1.0, 0.1), 0.1 / np.sqrt(2.0), rtol=1e-13)


def test_godunov_update_one_sided():
    assert_allclose(godunov_update(0.5, 0.2, 1.0, 0.1), 0.3, rtol=1e-14)


def test_godunov_update_quadratic_branch():
    got = godunov_update(0.3, 0.25, 2.0, 0.1)
    assert_allclose(got, 0.5 * (0.55 + np.sqrt(0.08 - 0.0025)), rtol=1e-13)
    assert abs(oracles.godunov_residual(got, 0.3, 0.25, 2.0, 0.1)) <= 1e-12


def test_godunov_update_invalid_inputs_raise():
    with pytest.raises(ValueError):
        godunov_update(0.0, 0.0, 0.0, 0.1)
    with pytest.raises(ValueError):
        godunov_update(0.0, 0.0, 1.0, 0.0)


def test_godunov_update_residual_randomized():
    # criterion: the returned value solves the point equation to 1e-12 over
    # a large random admissible sample, both branches
    n = 100_000
    xmin = RNG.uniform(-5.0, 5.0, size=n)
    ymin = RNG.uniform(-5.0, 5.0, size=n)
    f = RNG.uniform(0.1, 10.0, size=n)
    h = RNG.uniform(0.01, 1.0, size=n)
    worst = 0.0
    for k in range(n):
        phi = godunov_update(xmin[k], ymin[k], f[k], h[k])
        r = abs(oracles.godunov_residual(phi, xmin[k], ymin[k], f[k], h[k]))
        worst = max(worst, r / max(1.0, f[k] * f[k]))
    assert worst <= 1e-12


def test_godunov_update_monotone():
    for _ in range(2000):
        xmin, ymin = RNG.uniform(-2.0, 2.0, size=2)
        f = float(RNG.uniform(0.1, 5.0))
        h = float(RNG.uniform(0.01, 1.0))
        base = godunov_update(xmin, ymin, f, h)
        dx, dy = RNG.uniform(0.0, 1.0, size=2)
        assert godunov_update(xmin + dx, ymin, f, h) >= base - 1e-12
        assert godunov_update(xmin, ymin + dy, f, h) >= base - 1e-12


# ---------------------------------------------------------------------------
# auxiliary transport update


def test_aux_update_zero_residual():
    zero = DerivativeQuad(0.0, 0.0, 0.0, 0.0)
    got = aux_update("u", 0.37, zero, zero, eikonal(), ViscosityPair(1.0, 1.0), 0.1, 0.0)
    assert got == 0.37


def test_aux_update_hand_case():
    # H = p: the transported quantity rides at unit speed, so a uniform
    # slope c produces the decrement h c / 2 under unit viscosities
    c = 0.8
    d_w = DerivativeQuad(c, c, 0.0, 0.0)
    d_phi = DerivativeQuad(0.3, 0.3, 0.1, 0.1)
    got = aux_update("u", 1.0, d_phi, d_w, linear_spec(1.0, 0.0), ViscosityPair(1.0, 1.0), 0.25, 0.0)
    assert_allclose(got, 1.0 - 0.25 * c / 2.0, rtol=1e-14)


def test_aux_update_consistency_fixed_point():
    for _ in range(20):
        p, q = RNG.uniform(0.2, 2.0, size=2)
        ux, uy = RNG.uniform(-1.0, 1.0, size=2)
        spec = eikonal()
        d_phi = DerivativeQuad(p, p, q, q)
        d_w = DerivativeQuad(ux, ux, uy, uy)
        h1 = float(spec.d1(p, q))
        h2 = float(spec.d2(p, q))
        drive = h1 * ux + h2 * uy
        got = aux_update("u", 0.5, d_phi, d_w, spec, ViscosityPair(1.0, 1.0), 0.2, drive)
        assert_allclose(got, 0.5, rtol=1e-13, atol=1e-15)


def test_aux_update_validation():
    zero = DerivativeQuad(0.0, 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        aux_update("w", 0.0, zero, zero, eikonal(), ViscosityPair(1.0, 1.0), 0.1, 0.0)
    with pytest.raises(ValueError):
        aux_update("u", 0.0, zero, zero, eikonal(), ViscosityPair(0.0, 0.0), 0.1, 0.0)


# ---------------------------------------------------------------------------
# scalar kernels mirror the vectorized callables


def test_scalar_kernels_match_callables():
    pts = RNG.uniform(-2.0, 2.0, size=(500, 2))
    for spec in SPECS:
        for p, q in pts:
            assert_allclose(
                ham_value(spec.code, spec.params, p, q), float(spec.value(p, q)),
                rtol=1e-14, atol=1e-15,
            )
            assert_allclose(
                ham_d1(spec.code, spec.params, p, q), float(spec.d1(p, q)),
                rtol=1e-13, atol=1e-14,
            )
            assert_allclose(
                ham_d2(spec.code, spec.params, p, q), float(spec.d2(p, q)),
                rtol=1e-13, atol=1e-14,
            )


def test_partials_match_finite_differences():
    # gradient callables agree with centered differences of the value
    step = 1e-6
    for spec in SPECS:
        for _ in range(200):
            p, q = RNG.uniform(0.2, 1.5, size=2) * RNG.choice([-1.0, 1.0], size=2)
            d1_fd = (float(spec.value(p + step, q)) - float(spec.value(p - step, q))) / (2 * step)
            d2_fd = (float(spec.value(p, q + step)) - float(spec.value(p, q - step))) / (2 * step)
            assert_allclose(float(spec.d1(p, q)), d1_fd, rtol=1e-5, atol=1e-7)
            assert_allclose(float(spec.d2(p, q)), d2_fd, rtol=1e-5, atol=1e-7)


def test_quasi_homogeneous_degree_one():
    for spec in SPECS[1:]:
        for _ in range(50):
            p, q = RNG.uniform(-1.5, 1.5, size=2)
            t = float(RNG.uniform(0.1, 4.0))
            assert_allclose(
                float(spec.value(t * p, t * q)), t * float(spec.value(p, q)),
                rtol=1e-12, atol=1e-14,
            )
