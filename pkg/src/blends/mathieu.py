"""Mathieu-equation application layer.

Provides coefficient oracles for y'' + (a - 2 q cos 2z) y = g, computation of
the two independent solutions on a shared mesh, the Green's-function
construction of a particular solution (the generalized eigenfunction at a
double characteristic value), a shooting-based characteristic-value search,
and an independent Fourier-matrix oracle for even pi-periodic characteristic
values including the location of the first double point on the imaginary-q
axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .blendstring import Blendstring, zip_with
from .errors import SolveError
from .odesolve import OdeProblem, solve_ivp, solve_on_mesh
from .series import combine, mul

__all__ = [
    "MathieuParams",
    "ordinary_params",
    "modified_params",
    "mathieu_operator",
    "mathieu_problem",
    "mathieu_pair",
    "generalized_eigenfunction",
    "even_eigenvalue_search",
    "even_characteristic_values",
    "double_point",
    "modified_endpoint",
]


@dataclass(frozen=True)
class MathieuParams:
    """Characteristic value a, parameter q, and the path to integrate along."""

    a: complex
    q: complex
    path: tuple

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(complex(w) for w in self.path))


def ordinary_params(a, q) -> MathieuParams:
    """Parameters for the ordinary functions on the real interval [0, 2*pi]."""
    return MathieuParams(complex(a), complex(q), (0j, 2 * math.pi + 0j))


def modified_params(a, q, xi0: float) -> MathieuParams:
    """Parameters for the modified functions on the vertical segment [0, i*xi0]."""
    return MathieuParams(complex(a), complex(q), (0j, 1j * xi0))


def mathieu_operator(a, q):
    """Series oracles (a(x), b(x), g(x)) for the homogeneous Mathieu operator.

    The first-derivative coefficient is identically zero and
    b(z) = a - 2 q cos 2z, whose derivatives are 2^j cos(2z + j*pi/2).
    """
    a = complex(a)
    q = complex(q)

    def zero(point, grade):
        return [0j] * (grade + 1)

    def bcoef(point, grade):
        w = 2.0 * complex(point)
        out = []
        pw, fact = 1.0, 1.0
        for j in range(grade + 1):
            if j > 1:
                fact *= j
            c = -2.0 * q * pw * cmath.cos(w + j * math.pi / 2.0) / fact
            if j == 0:
                c = c + a
            out.append(c)
            pw *= 2.0
        return out

    return zero, bcoef, zero


def mathieu_problem(
    params: MathieuParams,
    grade: int,
    tol: float,
    y0=1.0,
    y1=0.0,
    g=None,
    **kwargs,
) -> OdeProblem:
    aorc, borc, zero = mathieu_operator(params.a, params.q)
    return OdeProblem(
        aorc, borc, g if g is not None else zero,
        params.path, y0, y1, grade, tol, **kwargs,
    )


def mathieu_pair(params: MathieuParams, grade: int, tol: float):
    """Both independent homogeneous solutions on one shared knot sequence.

    The (1,0) solution is marched adaptively at a quarter of the requested
    tolerance; the (0,1) solution is then re-solved on the frozen mesh with
    acceptance checks only, so the two blendstrings come out compatible.
    """
    p1 = mathieu_problem(params, grade, 0.25 * tol, y0=1.0, y1=0.0)
    r1 = solve_ivp(p1)
    p2 = mathieu_problem(params, grade, tol, y0=0.0, y1=1.0)
    r2 = solve_on_mesh(p2, r1.solution.knots)
    return r1.solution, r2.solution


def generalized_eigenfunction(
    w1: Blendstring, w2: Blendstring, f: Blendstring
) -> Blendstring:
    """Particular solution -w2 * int(w1 f) + w1 * int(w2 f) from the first knot.

    Built entirely from knot-wise products and exact indefinite integrals;
    the grade-raising integrals are truncated back to the common grade before
    the outer products, dropping terms one order beyond the method accuracy.
    With unit Wronskian w1 w2' - w1' w2 = 1 the result solves
    u'' + a(x) u' + b(x) u + f = 0 for the operator the pair solves.
    """
    m = w1.grade
    i1 = zip_with(w1, f, mul).indefinite_integral().truncate(m)
    i2 = zip_with(w2, f, mul).indefinite_integral().truncate(m)
    t1 = zip_with(w2, i1, mul)
    t2 = zip_with(w1, i2, mul)
    return zip_with(t1, t2, lambda x, y: combine(x, y, -1.0, 1.0))


def even_eigenvalue_search(
    q, a_bracket, grade: int = 12, tol: float = 1e-10, maxiter: int = 100
):
    """Characteristic value of an even pi-periodic solution by shooting.

    Root of a -> y'(pi/2; a) for y(0)=1, y'(0)=0, located by a
    secant/bisection hybrid inside the given real bracket.  Intended for
    real q, where the shooting function is real.
    """
    lo, hi = float(a_bracket[0]), float(a_bracket[1])

    def shoot(a: float) -> float:
        params = MathieuParams(a, complex(q), (0j, math.pi / 2 + 0j))
        sol = solve_ivp(mathieu_problem(params, grade, tol)).solution
        return sol.records[-1].coeffs[1].real

    fa, fb = shoot(lo), shoot(hi)
    scale = max(1.0, abs(fa), abs(fb))
    if fa == 0:
        return lo
    if fb == 0:
        return hi
    if fa * fb > 0:
        raise ValueError(f"no sign change of the shooting residual on [{lo}, {hi}]")
    a, b = lo, hi
    for _ in range(maxiter):
        c = b - fb * (b - a) / (fb - fa) if fb != fa else 0.5 * (a + b)
        if not min(a, b) < c < max(a, b):
            c = 0.5 * (a + b)
        fc = shoot(c)
        if abs(fc) < tol * scale or abs(b - a) < 1e-14 * max(1.0, abs(c)):
            return c
        if fa * fc < 0:
            b, fb = c, fc
        else:
            a, fa = c, fc
    raise SolveError(f"shooting search did not converge in {maxiter} iterations")


# -- independent Fourier-matrix oracle ---------------------------------------


def _even_matrix(q: complex, size: int) -> np.ndarray:
    """Symmetrized truncation of the cos(2kz) recurrence for even solutions."""
    M = np.zeros((size, size), dtype=complex)
    r2 = math.sqrt(2.0)
    M[0, 1] = M[1, 0] = r2 * q
    for k in range(1, size):
        M[k, k] = 4.0 * k * k
        if k + 1 < size:
            M[k, k + 1] = M[k + 1, k] = q
    return M


def even_characteristic_values(q, n: int, size: int | None = None) -> np.ndarray:
    """First n characteristic values a_0, a_2, ... for even pi-periodic solutions."""
    q = complex(q)
    if size is None:
        size = max(2 * n + 20, 30)
    ev = np.linalg.eigvals(_even_matrix(q, size))
    return np.array(sorted(ev, key=lambda z: z.real)[:n])


def double_point(qhat_lo: float = 1.0, qhat_hi: float = 2.0, size: int = 36):
    """The first coalescence of a_0 and a_2 on the imaginary-q axis.

    Below the double point the two lowest characteristic values are real and
    distinct; above it they form a conjugate pair, so the real part of
    (a_2 - a_0)^2 crosses zero simply and bisects cleanly.  Returns (a*, q*)
    with q* purely imaginary.
    """

    def gap2(qhat: float) -> float:
        ev = even_characteristic_values(1j * qhat, 2, size)
        return ((ev[1] - ev[0]) ** 2).real

    lo, hi = qhat_lo, qhat_hi
    if not (gap2(lo) > 0 > gap2(hi)):
        raise ValueError(f"bracket [{qhat_lo}, {qhat_hi}] does not enclose the double point")
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if gap2(mid) > 0:
            lo = mid
        else:
            hi = mid
    qhat = 0.5 * (lo + hi)
    ev = even_characteristic_values(1j * qhat, 2, size)
    return 0.5 * (ev[0] + ev[1]), 1j * qhat


def modified_endpoint(a, q, xi0: float, grade: int = 15, tol: float = 1e-10):
    """Value of the modified solution (unit value, zero slope at 0) at i*xi0."""
    params = modified_params(a, q, xi0)
    sol = solve_ivp(mathieu_problem(params, grade, tol)).solution
    return sol.records[-1].coeffs[0]
