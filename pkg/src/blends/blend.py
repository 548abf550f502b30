"""A single two-point Hermite blend and its kernel operations.

A blend of grades (m, n) is the unique polynomial of grade m+n+1 in the
scaled variable s whose Taylor coefficients at s=0 match p_0..p_m and at s=1
match q_0..q_n:

    H(s) = sum_{j<=m} [ sum_{k<=m-j} C(n+k,k) s^(k+j) ] (1-s)^(n+1) p_j
         + sum_{j<=n} [ sum_{k<=n-j} C(m+k,k) (1-s)^(k+j) ] s^(m+1) (-1)^j q_j

Evaluation runs two Horner-style loops costing O(m+n) multiplications; the
binomial weights are built up as running products of exact integers, never
as standalone factorials, which both avoids premature overflow and keeps the
cost linear.  Any non-finite intermediate or result aborts evaluation with
EvalOverflowError rather than letting inf/nan escape.

The kernel accepts a scalar s or a numpy array of s values; all arithmetic
is duck-typed, so exotic scalar types work for scalar s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EvalOverflowError
from .series import LocalTaylor

__all__ = [
    "Blend",
    "blend_eval",
    "blend_eval_derivs",
    "blend_eval_derivs_bounded",
    "blend_integrate",
    "blend_condition_integral",
    "lebesgue_function",
    "truncation_factor",
]


def _all_finite(x) -> bool:
    try:
        return bool(np.all(np.isfinite(x)))
    except TypeError:
        try:
            return math.isfinite(float(abs(x)))
        except (OverflowError, ValueError):
            return False


@dataclass(frozen=True)
class Blend:
    """Two local Taylor records interpreted in the scaled variable.

    ``left.coeffs`` are the p_j and ``right.coeffs`` the q_j of the blend
    formula; the knots only record the segment endpoints (z = a + s(b-a)).
    Use :meth:`from_taylor` to build a blend from z-space Taylor data, which
    rescales coefficient j by (b-a)**j.
    """

    left: LocalTaylor
    right: LocalTaylor

    def __post_init__(self):
        if self.left.knot == self.right.knot:
            raise ValueError("blend endpoints must be distinct knots")

    @property
    def m(self) -> int:
        return self.left.grade

    @property
    def n(self) -> int:
        return self.right.grade

    @property
    def span(self):
        """b - a, the affine factor between z-space and s-space."""
        return self.right.knot - self.left.knot

    @classmethod
    def from_taylor(cls, left: LocalTaylor, right: LocalTaylor) -> "Blend":
        """Build the blend of two z-space Taylor records over [left.knot, right.knot]."""
        d = right.knot - left.knot
        p, dj = [], 1.0
        for c in left.coeffs:
            p.append(c * dj)
            dj = dj * d
        q, dj = [], 1.0
        for c in right.coeffs:
            q.append(c * dj)
            dj = dj * d
        return cls(LocalTaylor(left.knot, p), LocalTaylor(right.knot, q))


def _half_sum(coeffs, other_grade, x):
    """One Horner sweep: sum_j c_j x^j T_{g-j}(x) with T_r(x) = sum_{k<=r} C(o+k,k) x^k."""
    g = len(coeffs) - 1
    o = other_grade
    w = coeffs[g]
    t = 1
    b = 1
    xp = 1
    for j in range(g - 1, -1, -1):
        r = g - j
        b = b * (o + r) // r
        xp = xp * x
        t = t + b * xp
        w = coeffs[j] * t + x * w
    return w


def blend_eval(b: Blend, s):
    """Value of the blend at scaled parameter s (scalar or array).

    Accuracy is only guaranteed for s in [0,1] (or very near it in the
    complex plane); off the segment the truncation error grows rapidly.
    """
    p, q = b.left.coeffs, b.right.coeffs
    m, n = b.m, b.n
    try:
        t = 1.0 - s
        left = t ** (n + 1) * _half_sum(p, n, s)
        qalt = tuple(c if j % 2 == 0 else -c for j, c in enumerate(q))
        right = s ** (m + 1) * _half_sum(qalt, m, t)
        out = left + right
    except OverflowError as exc:
        raise EvalOverflowError(f"blend of grades ({m},{n}) overflowed") from exc
    if not _all_finite(out):
        raise EvalOverflowError(f"blend of grades ({m},{n}) produced non-finite values")
    return out


# -- jet arithmetic ---------------------------------------------------------
# A jet is a list of Taylor-normalized derivatives [f, f', f''/2!, ...] with
# respect to s, of fixed length nder+1.  The blend recurrences are threaded
# through unchanged, with s replaced by the jet (s, 1, 0, ...).


def _jet_axpy_shift(x0, dx, w):
    """Jet product (x0 + dx*ds) * w for linear jets; dx is +1 for s, -1 for 1-s."""
    out = [x0 * w[0]]
    for k in range(1, len(w)):
        out.append(x0 * w[k] + dx * w[k - 1])
    return out


def blend_eval_derivs(b: Blend, s, nder: int):
    """[H(s), H'(s), ..., H^(nder)(s)], derivatives with respect to s.

    Derivatives with respect to z follow by dividing entry k by span**k;
    the blendstring layer applies that conversion.
    """
    if nder < 0:
        raise ValueError("nder must be nonnegative")
    p, q = b.left.coeffs, b.right.coeffs
    m, n = b.m, b.n
    width = nder + 1
    zero = 0.0 * s

    def half(coeffs, other_grade, x0, dx):
        g = len(coeffs) - 1
        o = other_grade
        w = [coeffs[g]] + [zero] * nder
        t = [1.0 + zero] + [zero] * nder
        xp = [1.0 + zero] + [zero] * nder
        bb = 1
        for j in range(g - 1, -1, -1):
            r = g - j
            bb = bb * (o + r) // r
            xp = _jet_axpy_shift(x0, dx, xp)
            t = [t[k] + bb * xp[k] for k in range(width)]
            w = _jet_axpy_shift(x0, dx, w)
            w = [coeffs[j] * t[k] + w[k] for k in range(width)]
        return w

    try:
        wl = half(p, n, s, 1.0)
        for _ in range(n + 1):
            wl = _jet_axpy_shift(1.0 - s, -1.0, wl)
        qalt = tuple(c if j % 2 == 0 else -c for j, c in enumerate(q))
        wr = half(qalt, m, 1.0 - s, -1.0)
        for _ in range(m + 1):
            wr = _jet_axpy_shift(s, 1.0, wr)
        jet = [wl[k] + wr[k] for k in range(width)]
    except OverflowError as exc:
        raise EvalOverflowError(f"blend of grades ({m},{n}) overflowed") from exc
    fact = 1
    out = []
    for k in range(width):
        if k > 1:
            fact *= k
        out.append(jet[k] * fact)
    for v in out:
        if not _all_finite(v):
            raise EvalOverflowError(
                f"blend of grades ({m},{n}) produced non-finite derivatives"
            )
    return out


_EPS = 2.220446049250313e-16


def blend_eval_derivs_bounded(b: Blend, s: float, nder: int):
    """Like blend_eval_derivs for scalar s, plus running roundoff bounds.

    Returns (derivs, bounds): bounds[k] estimates the absolute floating-point
    error in derivs[k], accumulated first-order through every operation of
    the Horner recurrences.  High grades pass through internal quantities far
    larger than the final value, so these bounds are the honest resolution
    limit of derivative evaluation; the marching solver uses them to tell a
    genuinely nonzero residual from roundoff.
    """
    if nder < 0:
        raise ValueError("nder must be nonnegative")
    p, q = b.left.coeffs, b.right.coeffs
    m, n = b.m, b.n
    width = nder + 1

    def shift(x0, dx, w, we):
        ax0 = abs(x0)
        out = [x0 * w[0]]
        oute = [ax0 * we[0] + _EPS * abs(out[0])]
        for k in range(1, width):
            v = x0 * w[k] + dx * w[k - 1]
            out.append(v)
            oute.append(
                ax0 * we[k] + we[k - 1] + _EPS * (abs(x0 * w[k]) + abs(w[k - 1]))
            )
        return out, oute

    def half(coeffs, other_grade, x0, dx):
        g = len(coeffs) - 1
        o = other_grade
        w = [coeffs[g]] + [0j] * nder
        we = [_EPS * abs(coeffs[g])] + [0.0] * nder
        t = [1.0 + 0j] + [0j] * nder
        te = [0.0] * width
        xp = [1.0 + 0j] + [0j] * nder
        xe = [0.0] * width
        bb = 1
        for j in range(g - 1, -1, -1):
            r = g - j
            bb = bb * (o + r) // r
            xp, xe = shift(x0, dx, xp, xe)
            for k in range(width):
                term = bb * xp[k]
                t[k] = t[k] + term
                te[k] = te[k] + bb * xe[k] + _EPS * (abs(term) + abs(t[k]))
            w, we = shift(x0, dx, w, we)
            cj, acj = coeffs[j], abs(coeffs[j])
            for k in range(width):
                v = cj * t[k] + w[k]
                we[k] = acj * te[k] + we[k] + _EPS * (abs(cj * t[k]) + abs(v))
                w[k] = v
        return w, we

    wl, wle = half(p, n, s, 1.0)
    for _ in range(n + 1):
        wl, wle = shift(1.0 - s, -1.0, wl, wle)
    qalt = tuple(c if j % 2 == 0 else -c for j, c in enumerate(q))
    wr, wre = half(qalt, m, 1.0 - s, -1.0)
    for _ in range(m + 1):
        wr, wre = shift(s, 1.0, wr, wre)
    out, bounds, fact = [], [], 1
    for k in range(width):
        if k > 1:
            fact *= k
        v = wl[k] + wr[k]
        out.append(v * fact)
        bounds.append((wle[k] + wre[k] + _EPS * abs(v)) * fact)
    return out, bounds


def blend_integrate(b: Blend):
    """Exact integral of the blend over s in [0,1].

    Weighted coefficient sums with factorial-ratio weights, accumulated as
    running products so no individual factorial is ever formed.  The z-space
    segment integral is span * this value; conversion is the caller's job.
    """
    p, q = b.left.coeffs, b.right.coeffs
    m, n = b.m, b.n
    w = (m + 1) / (m + n + 2)
    acc = w * p[0]
    for j in range(1, m + 1):
        w *= j * (m - j + 1) / ((j + 1) * (n + m - j + 2))
        acc = acc + w * p[j]
    v = (n + 1) / (m + n + 2)
    sign = 1.0
    acc = acc + v * q[0]
    for j in range(1, n + 1):
        v *= j * (n - j + 1) / ((j + 1) * (n + m - j + 2))
        sign = -sign
        acc = acc + sign * v * q[j]
    return acc


def blend_condition_integral(m: int, n: int) -> float:
    """Integral of the blend of the all-ones / alternating-sign coefficient data.

    Bounds the integration error under coefficientwise perturbations.  Equal
    to 2*Psi(n+m+3) - Psi(m+3) - Psi(n+3) + (n+m+4)/((n+2)(m+2)); only
    differences of digamma values at integers appear, so it is computed from
    harmonic-number differences and the Euler constant cancels.  For m = n it
    tends to 2*ln 2 from below like 2*ln2 - 1/(2m).
    """
    if m < 0 or n < 0:
        raise ValueError("grades must be nonnegative")
    tot = sum(1.0 / k for k in range(m + 3, m + n + 3))
    tot += sum(1.0 / k for k in range(n + 3, m + n + 3))
    return tot + (n + m + 4) / ((n + 2) * (m + 2))


def lebesgue_function(m: int, n: int, s):
    """Sum of absolute values of the two-point Hermite basis at s.

    Computed by evaluating the blend once per unit coefficient vector and
    summing absolute values: O((m+n)^2) work, a diagnostic rather than a hot
    path.  For balanced grades it stays at or below 2 on [0,1].
    """
    if m < 0 or n < 0:
        raise ValueError("grades must be nonnegative")
    zp = (0.0,) * (m + 1)
    zq = (0.0,) * (n + 1)
    left = LocalTaylor(0.0, zp)
    right = LocalTaylor(1.0, zq)
    total = 0.0 * s
    for j in range(m + 1):
        e = zp[:j] + (1.0,) + zp[j + 1 :]
        total = total + abs(blend_eval(Blend(LocalTaylor(0.0, e), right), s))
    for j in range(n + 1):
        e = zq[:j] + (1.0,) + zq[j + 1 :]
        total = total + abs(blend_eval(Blend(left, LocalTaylor(1.0, e)), s))
    return total


def truncation_factor(m: int, n: int) -> float:
    """max over [0,1] of s^(m+1) (1-s)^(n+1), the grade-dependent error factor.

    The maximum sits at s = (m+1)/(m+n+2) (by differentiation) and equals
    (m+1)^(m+1) (n+1)^(n+1) / (m+n+2)^(m+n+2), which for m = n reduces to
    2^(-2(m+1)).  Evaluated in log space to dodge overflow at large grades.
    """
    if m < 0 or n < 0:
        raise ValueError("grades must be nonnegative")
    a, c, t = m + 1, n + 1, m + n + 2
    return math.exp(a * math.log(a) + c * math.log(c) - t * math.log(t))
