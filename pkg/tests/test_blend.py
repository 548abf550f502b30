import math

import numpy as np
import pytest
from scipy.integrate import simpson

from blends import EvalOverflowError
from blends.blend import (
    Blend,
    blend_condition_integral,
    blend_eval,
    blend_eval_derivs,
    blend_eval_derivs_bounded,
    blend_integrate,
    lebesgue_function,
    truncation_factor,
)
from blends.series import LocalTaylor


def make(p, q):
    return Blend(LocalTaylor(0.0, p), LocalTaylor(1.0, q))


SMOOTHSTEP = make((0.0, 0.0), (1.0, 0.0))


def test_constant_blend():
    b = make((1.0,), (1.0,))
    for s in (0.0, 0.3, 1.0, 2.5, -1.0):
        assert blend_eval(b, s) == pytest.approx(1.0, abs=1e-15)
    assert np.allclose(blend_eval_derivs(b, 0.7, 2), [1.0, 0.0, 0.0])


def test_linear_blend():
    b = make((0.0,), (1.0,))
    assert blend_eval(b, 0.25) == pytest.approx(0.25)
    assert np.allclose(blend_eval_derivs(b, 0.3, 1), [0.3, 1.0])
    assert blend_integrate(b) == pytest.approx(0.5)


def test_smoothstep():
    assert blend_eval(SMOOTHSTEP, 0.5) == pytest.approx(0.5)
    # closed form s^2 (3 - 2 s)
    for s in np.linspace(0, 1, 11):
        assert blend_eval(SMOOTHSTEP, s) == pytest.approx(s * s * (3 - 2 * s), abs=1e-14)
    assert np.allclose(blend_eval_derivs(SMOOTHSTEP, 0.5, 1), [0.5, 1.5])
    assert blend_integrate(SMOOTHSTEP) == pytest.approx(0.5)


def test_distinct_knots_required():
    with pytest.raises(ValueError):
        Blend(LocalTaylor(1.0, (1.0,)), LocalTaylor(1.0, (2.0,)))


def test_vectorized_eval_matches_scalar():
    rng = np.random.default_rng(0)
    p = rng.standard_normal(5)
    q = rng.standard_normal(4)
    b = make(tuple(p), tuple(q))
    s = np.linspace(-0.1, 1.1, 37)
    vec = blend_eval(b, s)
    for si, vi in zip(s, vec):
        assert blend_eval(b, float(si)) == pytest.approx(vi, rel=1e-14)
    jets = blend_eval_derivs(b, s, 2)
    for i, si in enumerate(s):
        single = blend_eval_derivs(b, float(si), 2)
        for k in range(3):
            assert single[k] == pytest.approx(jets[k][i], rel=1e-12, abs=1e-13)


def test_interpolation_conditions():
    # j-th s-derivative at the ends reproduces the given coefficients
    rng = np.random.default_rng(11)
    for m in range(9):
        p = rng.standard_normal(m + 1) + 1j * rng.standard_normal(m + 1)
        q = rng.standard_normal(m + 1) + 1j * rng.standard_normal(m + 1)
        b = make(tuple(p), tuple(q))
        left = blend_eval_derivs(b, 0.0, m)
        right = blend_eval_derivs(b, 1.0, m)
        fact = 1.0
        for j in range(m + 1):
            if j > 1:
                fact *= j
            assert abs(left[j] / fact - p[j]) <= 1e-10 * max(1.0, abs(p[j]))
            assert abs(right[j] / fact - q[j]) <= 1e-10 * max(1.0, abs(q[j]))


def test_polynomial_reproduction():
    # any polynomial of degree <= m+n+1 is reproduced from its Taylor data
    rng = np.random.default_rng(5)
    for _ in range(8):
        m = int(rng.integers(0, 7))
        n = int(rng.integers(0, 7))
        deg = m + n + 1
        coef = rng.standard_normal(deg + 1)
        poly = np.polynomial.Polynomial(coef)
        p = [poly.deriv(j)(0.0) / math.factorial(j) for j in range(m + 1)]
        q = [poly.deriv(j)(1.0) / math.factorial(j) for j in range(n + 1)]
        b = make(tuple(p), tuple(q))
        for s in rng.uniform(0, 1, 100):
            want = poly(s)
            assert abs(blend_eval(b, float(s)) - want) <= 1e-12 * max(1.0, abs(want))


def test_linearity_in_coefficients():
    rng = np.random.default_rng(9)
    m = 4
    p1, q1 = rng.standard_normal(m + 1), rng.standard_normal(m + 1)
    p2, q2 = rng.standard_normal(m + 1), rng.standard_normal(m + 1)
    al, be = 0.7, -1.3
    b12 = make(tuple(al * p1 + be * p2), tuple(al * q1 + be * q2))
    for s in np.linspace(0, 1, 9):
        lhs = blend_eval(b12, float(s))
        rhs = al * blend_eval(make(tuple(p1), tuple(q1)), float(s)) + be * blend_eval(
            make(tuple(p2), tuple(q2)), float(s)
        )
        assert lhs == pytest.approx(rhs, abs=1e-13)


def test_integral_against_simpson():
    rng = np.random.default_rng(21)
    s = np.linspace(0.0, 1.0, 10001)
    for m in range(11):
        p = rng.uniform(-1, 1, m + 1)
        q = rng.uniform(-1, 1, m + 1)
        b = make(tuple(p), tuple(q))
        quad = simpson(blend_eval(b, s).real, x=s)
        assert abs(blend_integrate(b).real - quad) <= 1e-10


def test_derivatives_against_finite_differences():
    rng = np.random.default_rng(14)
    b = make(tuple(rng.standard_normal(6)), tuple(rng.standard_normal(6)))
    h = 1e-5
    for s in (0.2, 0.5, 0.8):
        v, d1, d2 = blend_eval_derivs(b, s, 2)
        fd1 = (blend_eval(b, s + h) - blend_eval(b, s - h)) / (2 * h)
        fd2 = (blend_eval(b, s + h) - 2 * v + blend_eval(b, s - h)) / (h * h)
        assert d1 == pytest.approx(fd1, rel=1e-8)
        assert d2 == pytest.approx(fd2, rel=1e-4)


def test_bounded_derivs_agree_and_bound_is_positive():
    rng = np.random.default_rng(2)
    b = make(tuple(rng.standard_normal(8)), tuple(rng.standard_normal(8)))
    vals, bounds = blend_eval_derivs_bounded(b, 0.37, 2)
    plain = blend_eval_derivs(b, 0.37, 2)
    for v, pv, e in zip(vals, plain, bounds):
        assert v == pytest.approx(pv, rel=1e-13, abs=1e-15)
        assert e > 0


def test_condition_integral_values():
    assert blend_condition_integral(0, 0) == pytest.approx(1.0)
    assert abs(blend_condition_integral(50, 50) - 2 * math.log(2)) < 0.02


def test_condition_integral_matches_quadrature():
    # integral of the blend with all-ones left and alternating right data
    s = np.linspace(0.0, 1.0, 10001)
    for m in range(11):
        ones = (1.0,) * (m + 1)
        alt = tuple((-1.0) ** j for j in range(m + 1))
        vals = blend_eval(make(ones, alt), s)
        quad = simpson(vals.real, x=s)
        assert abs(blend_condition_integral(m, m) - quad) <= 1e-8


def test_lebesgue_values():
    assert lebesgue_function(0, 0, 0.5) == pytest.approx(1.0)
    assert lebesgue_function(1, 1, 0.0) == pytest.approx(1.0)


def test_lebesgue_balanced_bound():
    s = np.linspace(0.0, 1.0, 1000)
    for m in range(21):
        assert float(np.max(lebesgue_function(m, m, s))) <= 2.0 + 1e-12


def test_truncation_factor():
    assert truncation_factor(0, 0) == pytest.approx(0.25)
    for m in (1, 3, 10, 40):
        assert truncation_factor(m, m) == pytest.approx(2.0 ** (-2 * (m + 1)), rel=1e-12)
    # maximize s^2 (1-s)^3 on a fine grid; maximum sits at s = 2/5
    s = np.linspace(0, 1, 2_000_001)
    vals = s**2 * (1 - s) ** 3
    k = int(np.argmax(vals))
    assert abs(s[k] - 0.4) < 1e-5
    assert truncation_factor(1, 2) == pytest.approx(float(vals[k]), rel=1e-10)


def test_overflow_policy():
    big = Blend(LocalTaylor(0.0, (1.0,) * 601), LocalTaylor(1.0, (1.0,) * 601))
    with pytest.raises(EvalOverflowError):
        blend_eval(big, 0.5)
    with pytest.raises(EvalOverflowError):
        blend_eval_derivs(big, 0.5, 1)
