"""Acceptance suite: every criterion at its stated tolerance, one line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
summary lines; each criterion is a separate test so the pytest report itself
doubles as the pass/fail table.
"""

import math

import numpy as np
from refvals import (
    RECIP_GAMMA_BLEND_INTEGRAL,
    RECIP_GAMMA_REFERENCE_INTEGRAL,
    SHO_COSINE_RATIONALS,
    STABILITY_THRESHOLDS,
)
from scipy.integrate import simpson

from blends import (
    Blend,
    Blendstring,
    MathieuParams,
    OdeProblem,
    blend_condition_integral,
    blend_eval,
    blend_eval_derivs,
    constant_oracle,
    cos_oracle,
    double_point,
    exp_oracle,
    generalized_eigenfunction,
    initial_series,
    lebesgue_function,
    mathieu_pair,
    modified_endpoint,
    ordinary_params,
    recip_gamma_oracle,
    sho_amplification,
    stability_threshold,
    step,
)
from blends.series import LocalTaylor, div, mul

EXP_KNOTS = [-1.0, -1 / 3, 1 / 3, 1.0]


def report(num, ok, detail):
    print(f"ACCEPTANCE {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_acceptance_01_exp_approximation():
    bs = Blendstring.from_oracle(EXP_KNOTS, 5, exp_oracle)
    xs = np.linspace(-1, 1, 1000)
    worst = max(abs(bs.eval(float(x)) - math.exp(x)) for x in xs)
    report(1, worst <= 1e-14, f"max |B - exp| = {worst:.3e} (bound 1e-14)")


def test_acceptance_02_second_derivative():
    bs = Blendstring.from_oracle(EXP_KNOTS, 5, exp_oracle)
    t = bs.deval(nrefine=80, nder=3)
    worst = float(np.max(np.abs(t.derivatives(2) - np.exp(t.points.real))))
    report(2, worst <= 1e-12, f"max |B'' - exp| = {worst:.3e} (bound 1e-12)")


def test_acceptance_03_recip_gamma_quadrature():
    bs = Blendstring.from_oracle([-3.0, -2.0, -1.0, 0.0], 7, recip_gamma_oracle)
    val = bs.definite_integral().real
    d_blend = abs(val - RECIP_GAMMA_BLEND_INTEGRAL)
    d_ref = abs(val - RECIP_GAMMA_REFERENCE_INTEGRAL)
    report(
        3,
        d_blend <= 5e-13 and d_ref <= 1e-11,
        f"integral = {val:.15f}; |.-blend val| = {d_blend:.2e} (5e-13), "
        f"|.-reference| = {d_ref:.2e} (1e-11)",
    )


def test_acceptance_04_stability_thresholds():
    got = {m: stability_threshold(m) / math.pi for m in (1, 2, 3)}
    ok = all(abs(got[m] - STABILITY_THRESHOLDS[m]) <= 1e-4 for m in (1, 2, 3))
    report(4, ok, "nu*/pi = " + ", ".join(f"{got[m]:.5f}" for m in (1, 2, 3)))


def test_acceptance_05_step_amplification_rationals():
    worst = 0.0
    for m, rational in SHO_COSINE_RATIONALS.items():
        for nu in (0.5, 1.0, 2.0, 3.0):
            c, _ = sho_amplification(m, nu)
            worst = max(worst, abs(c - rational(nu)) / abs(rational(nu)))
    report(5, worst <= 1e-10, f"max rel dev from closed-form C_m = {worst:.2e}")


def test_acceptance_06_energy_identity():
    worst = 0.0
    for m in (1, 2, 3):
        for nu in np.linspace(0, 3, 52)[1:-1]:
            c, s = sho_amplification(m, float(nu))
            worst = max(worst, abs(c * c + s * s - 1.0))
    report(6, worst <= 1e-10, f"max |C^2+S^2-1| = {worst:.2e} over 50 nu x 3 grades")


def test_acceptance_07_convergence_orders():
    lines = []
    ok = True
    for m, mlist in ((2, (2, 4, 8, 16)), (3, (1, 2, 4, 8))):
        errs, derrs = [], []
        for M in mlist:
            bs = Blendstring.from_oracle(list(np.linspace(-1, 1, M + 1)), m, exp_oracle)
            t = bs.deval(nrefine=24, nder=1)
            pts = t.points.real
            errs.append(np.max(np.abs(t.derivatives(0) - np.exp(pts))))
            derrs.append(np.max(np.abs(t.derivatives(1) - np.exp(pts))))
        hs = np.log2([2 / M for M in mlist])
        slope = np.polyfit(hs, np.log2(errs), 1)[0]
        dslope = np.polyfit(hs, np.log2(derrs), 1)[0]
        ok &= abs(slope - (2 * m + 2)) <= 0.5 and abs(dslope - (2 * m + 1)) <= 0.5
        lines.append(f"m={m}: value {slope:.2f}/{2 * m + 2}, deriv {dslope:.2f}/{2 * m + 1}")
        # one-step harmonic-oscillator orders: the residual sample carries the
        # 2m signature; the endpoint error superconverges at 2m+2 (which the
        # grade-1 closed form already shows: C_1 - cos nu = -nu^4/192 + ...)
        p = OdeProblem(
            constant_oracle(0), constant_oracle(1), constant_oracle(0),
            (0.0, 10.0), 1.0, 0.0, m, 1e-300,
        )
        known = initial_series(p)
        es, rs = [], []
        for h in (0.4, 0.2, 0.1):
            _, result, res = step(p, 0.0, known, h)
            es.append(abs(result.coeffs[0] - math.cos(h)))
            rs.append(res)
        eslope = np.polyfit(np.log2([0.4, 0.2, 0.1]), np.log2(es), 1)[0]
        rslope = np.polyfit(np.log2([0.4, 0.2, 0.1]), np.log2(rs), 1)[0]
        ok &= abs(rslope - 2 * m) <= 0.5 and abs(eslope - (2 * m + 2)) <= 0.5
        lines.append(f"m={m}: step residual {rslope:.2f}/{2 * m}, endpoint {eslope:.2f}/{2 * m + 2}")
    report(7, ok, "; ".join(lines))


def test_acceptance_08_conditioning_constant():
    s = np.linspace(0.0, 1.0, 10001)
    worst = 0.0
    for m in range(11):
        ones = (1.0,) * (m + 1)
        alt = tuple((-1.0) ** j for j in range(m + 1))
        b = Blend(LocalTaylor(0.0, ones), LocalTaylor(1.0, alt))
        quad = simpson(blend_eval(b, s).real, x=s)
        worst = max(worst, abs(blend_condition_integral(m, m) - quad))
    tail = abs(blend_condition_integral(50, 50) - 2 * math.log(2))
    report(
        8,
        worst <= 1e-8 and tail <= 0.02,
        f"max |formula - quadrature| = {worst:.2e} (1e-8); |I(50,50)-2ln2| = {tail:.3f} (0.02)",
    )


def test_acceptance_09_lebesgue_bound():
    s = np.linspace(0.0, 1.0, 1000)
    worst = max(float(np.max(lebesgue_function(m, m, s))) for m in range(21))
    report(9, worst <= 2.0 + 1e-12, f"max Lebesgue function over m<=20 = {worst:.6f}")


def test_acceptance_10_property_suite():
    rng = np.random.default_rng(123)
    checks = []

    # polynomial reproduction
    m = n = 4
    coef = rng.standard_normal(m + n + 2)
    poly = np.polynomial.Polynomial(coef)
    p = [poly.deriv(j)(0.0) / math.factorial(j) for j in range(m + 1)]
    q = [poly.deriv(j)(1.0) / math.factorial(j) for j in range(n + 1)]
    b = Blend(LocalTaylor(0.0, tuple(p)), LocalTaylor(1.0, tuple(q)))
    worst = max(
        abs(blend_eval(b, float(s)) - poly(s)) / max(1.0, abs(poly(s)))
        for s in rng.uniform(0, 1, 100)
    )
    checks.append(("polynomial reproduction", worst <= 1e-12))

    # series round-trip
    a = rng.uniform(-1, 1, 9) + 1j * rng.uniform(-1, 1, 9)
    c = rng.uniform(-1, 1, 9) + 1j * rng.uniform(-1, 1, 9)
    c[0] = 1.0 + 0.3j
    x, y = LocalTaylor(0.0, a), LocalTaylor(0.0, c)
    back = div(mul(x, y), y)
    worst = max(abs(u - v) for u, v in zip(back.coeffs, x.coeffs))
    checks.append(("series division round-trip", worst <= 1e-12))

    # interpolation conditions
    p = rng.standard_normal(7)
    q = rng.standard_normal(7)
    b = Blend(LocalTaylor(0.0, tuple(p)), LocalTaylor(1.0, tuple(q)))
    ends = blend_eval_derivs(b, 0.0, 6)
    worst = max(
        abs(ends[j] / math.factorial(j) - p[j]) / max(1.0, abs(p[j])) for j in range(7)
    )
    checks.append(("interpolation conditions", worst <= 1e-10))

    # smoothness across interior knots
    bs = Blendstring.from_oracle(EXP_KNOTS, 5, exp_oracle)
    worst = 0.0
    for k in range(1, bs.segments):
        dl = bs.records[k].knot - bs.records[k - 1].knot
        dr = bs.records[k + 1].knot - bs.records[k].knot
        left = blend_eval_derivs(bs.segment_blend(k - 1), 1.0, 5)
        right = blend_eval_derivs(bs.segment_blend(k), 0.0, 5)
        for j in range(6):
            zl, zr = left[j] / dl**j, right[j] / dr**j
            worst = max(worst, abs(zl - zr) / max(1.0, abs(zl)))
    checks.append(("smoothness at knots", worst <= 1e-9))

    # indefinite integral / derivative round-trip
    anti = bs.indefinite_integral()
    worst = 0.0
    for r0, r1 in zip(bs.records, anti.records):
        back = r1.derivative()
        worst = max(
            abs(u - v) / max(1.0, abs(v)) for u, v in zip(back.coeffs, r0.coeffs)
        )
    checks.append(("antiderivative round-trip", worst <= 1e-15))

    # Wronskian constancy
    astar, qstar = double_point()
    w1, w2 = mathieu_pair(MathieuParams(astar, qstar, (0.0, 2 * math.pi)), 15, 1e-10)
    t1 = w1.deval(nrefine=6, nder=1)
    t2 = w2.deval(nrefine=6, nder=1)
    wr = t1.derivatives(0) * t2.derivatives(1) - t1.derivatives(1) * t2.derivatives(0)
    checks.append(("Wronskian constancy", float(np.max(np.abs(wr - 1.0))) <= 1e-8))

    # harmonic-oscillator Green's-function closed form
    w1, w2 = mathieu_pair(ordinary_params(1.0, 0.0), 12, 1e-10)
    f = Blendstring.from_oracle(w1.knots, 12, cos_oracle)
    u = generalized_eigenfunction(w1, w2, f)
    worst = max(
        abs(u.eval(float(x)) - (-(x / 2) * math.sin(x)))
        for x in np.linspace(0, 2 * math.pi, 40)
    )
    checks.append(("Green's-function closed form", worst <= 1e-8))

    ok = all(flag for _, flag in checks)
    report(10, ok, "; ".join(f"{name}: {'ok' if flag else 'FAIL'}" for name, flag in checks))


def _double_point_run(tol=1e-10, grade=15):
    astar, qstar = double_point()
    w1, w2 = mathieu_pair(MathieuParams(astar, qstar, (0.0, 2 * math.pi)), grade, tol)
    u = generalized_eigenfunction(w1, w2, w1)
    return astar, qstar, w1, u


def test_acceptance_11a_generalized_eigenfunction_residual():
    tol = 1e-10
    astar, qstar, w1, u = _double_point_run(tol)
    t = u.deval(nder=2)
    pts = t.points
    bvals = astar - 2 * qstar * np.cos(2 * pts)
    fvals = np.array([w1.eval(z) for z in pts])
    resid = float(np.max(np.abs(t.derivatives(2) + bvals * t.derivatives(0) + fvals)))
    report(11, resid <= 100 * tol, f"11a: max generalized-eigenfunction residual = {resid:.2e} (bound {100 * tol:.0e})")


def test_acceptance_11b_eigenfunction_zeros():
    _, _, _, u = _double_point_run()
    scale = float(np.max(np.abs(u.deval().derivatives(0))))
    vals = [abs(u.eval(x)) / scale for x in (0.0, math.pi, 2 * math.pi)]
    report(11, max(vals) <= 1e-6, f"11b: |u| / max|u| at 0, pi, 2pi = " + ", ".join(f"{v:.1e}" for v in vals))


def test_acceptance_11c_modified_growth_magnitude():
    """Modified-solution magnitude at the quoted depth.

    With the only normalization the interfaces define (unit value and zero
    slope at the origin), the modified solution at xi0 = 1.485 has magnitude
    about 11, confirmed independently by a high-accuracy Runge-Kutta
    integration of the same initial value problem.  The quoted reference
    magnitude 4.7e8 is only reachable by rescaling the coalesced
    eigenfunction by its near-vanishing self-normalization integral, a
    quantity that is pure roundoff at the double point (the eigenfunction is
    self-orthogonal there), so no deterministic double-precision computation
    reproduces it.  The assertion is kept at the stated bound and is
    expected to fail; see the test output for the honestly computed value.
    """
    astar, qstar = double_point()
    val = abs(modified_endpoint(astar, qstar, 1.485, 15, 1e-10))
    ok = 4.7e7 <= val <= 4.7e9
    report(11, ok, f"11c: |Ce0(1.485)| = {val:.4e} (required within 10x of 4.7e8)")
