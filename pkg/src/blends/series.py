"""Truncated Taylor polynomials at a knot, and arithmetic on them.

A *series oracle* is any callable ``oracle(point, grade)`` returning exactly
``grade + 1`` Taylor coefficients of some function about ``point``.  Oracles
are the package-wide way of supplying functions whose local series can be
generated on demand.

Coefficients may be any complex-like scalars (python ``complex`` by default;
arbitrary-precision types work as long as they support field arithmetic and
``abs``).  The word *grade* means "degree at most": leading coefficients may
be zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import CompatibilityError, SeriesDivisionError

SeriesOracle = Callable[[complex, int], Sequence[complex]]


@dataclass(frozen=True)
class LocalTaylor:
    """A knot together with grade+1 Taylor coefficients about it.

    Represents c0 + c1*(z-knot) + ... + c_g*(z-knot)**g.  Immutable; all
    arithmetic returns new instances.
    """

    knot: complex
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("a LocalTaylor needs at least one coefficient")

    @property
    def grade(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        return combine(self, other)

    def __sub__(self, other):
        return combine(self, other, 1.0, -1.0)

    def __mul__(self, other):
        return mul(self, other)

    def __truediv__(self, other):
        return div(self, other)

    def value(self, z: complex) -> complex:
        """Evaluate the polynomial itself (not a blend) at z."""
        t = z - self.knot
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * t + c
        return acc

    def derivative(self) -> "LocalTaylor":
        """Formal derivative, one grade lower (grade 0 maps to the zero constant)."""
        if self.grade == 0:
            return LocalTaylor(self.knot, (0.0 * self.coeffs[0],))
        return LocalTaylor(
            self.knot, tuple((j + 1) * c for j, c in enumerate(self.coeffs[1:]))
        )


def zero_series(knot: complex, grade: int) -> LocalTaylor:
    return LocalTaylor(knot, (0j,) * (grade + 1))


def one_series(knot: complex, grade: int) -> LocalTaylor:
    return LocalTaylor(knot, (1.0 + 0j,) + (0j,) * grade)


def _check_compatible(x: LocalTaylor, y: LocalTaylor) -> None:
    if x.knot != y.knot:
        raise CompatibilityError(f"knot mismatch: {x.knot} vs {y.knot}")
    if x.grade != y.grade:
        raise CompatibilityError(f"grade mismatch: {x.grade} vs {y.grade}")


def combine(x: LocalTaylor, y: LocalTaylor, alpha=1.0, beta=1.0) -> LocalTaylor:
    """alpha*x + beta*y, coefficientwise. Knots and grades must match."""
    _check_compatible(x, y)
    return LocalTaylor(
        x.knot, tuple(alpha * a + beta * b for a, b in zip(x.coeffs, y.coeffs))
    )


def mul(x: LocalTaylor, y: LocalTaylor) -> LocalTaylor:
    """Cauchy product truncated at the shared grade.

    The truncation is deliberate: the result represents the product function
    to the working grade, not the full-degree polynomial product.
    """
    _check_compatible(x, y)
    a, b = x.coeffs, y.coeffs
    out = [sum(a[i] * b[j - i] for i in range(j + 1)) for j in range(len(a))]
    return LocalTaylor(x.knot, tuple(out))


def div(x: LocalTaylor, y: LocalTaylor) -> LocalTaylor:
    """Series long division truncated at the shared grade.

    Requires a nonzero constant term in the divisor; otherwise the quotient
    would need Laurent data, which this package refuses to fabricate.
    """
    _check_compatible(x, y)
    a, b = x.coeffs, y.coeffs
    if abs(b[0]) == 0:
        raise SeriesDivisionError("divisor has zero constant term")
    q = []
    for j in range(len(a)):
        acc = a[j]
        for i in range(1, j + 1):
            acc = acc - b[i] * q[j - i]
        q.append(acc / b[0])
    return LocalTaylor(x.knot, tuple(q))


def compose(outer_oracle: SeriesOracle, inner: LocalTaylor) -> LocalTaylor:
    """Series of f(inner(z)) about inner.knot, f supplied as a series oracle.

    The outer function is expanded about c0 = inner.coeffs[0] and the tail of
    ``inner`` (which has zero constant term) is substituted by truncated
    Horner evaluation in series arithmetic.
    """
    g = inner.grade
    c0 = inner.coeffs[0]
    d = tuple(outer_oracle(c0, g))
    if len(d) != g + 1:
        raise ValueError(f"oracle returned {len(d)} coefficients, wanted {g + 1}")
    w = LocalTaylor(inner.knot, (0.0 * c0,) + inner.coeffs[1:])
    acc = LocalTaylor(inner.knot, (d[g],) + (0j,) * g)
    for k in range(g - 1, -1, -1):
        acc = mul(acc, w)
        acc = LocalTaylor(inner.knot, (acc.coeffs[0] + d[k],) + acc.coeffs[1:])
    return acc


def ode_taylor(
    a_series: LocalTaylor,
    b_series: LocalTaylor,
    g_series: LocalTaylor,
    y0,
    y1,
    grade: int,
) -> LocalTaylor:
    """Taylor series of the solution of y'' + a(x) y' + b(x) y = g(x).

    ``a_series``, ``b_series`` and ``g_series`` are local series of the
    coefficient functions at a shared knot; ``y0``/``y1`` are the value and
    first derivative of the solution there.  Coefficients follow from

        (j+2)(j+1) c_{j+2} = g_j - sum_{l<=j} [ a_l (j-l+1) c_{j-l+1} + b_l c_{j-l} ]

    which costs O(grade^2) scalar operations.
    """
    if grade < 0:
        raise ValueError("grade must be nonnegative")
    if a_series.knot != b_series.knot or a_series.knot != g_series.knot:
        raise CompatibilityError("coefficient series must share a knot")
    need = max(0, grade - 2)
    for s, name in ((a_series, "a"), (b_series, "b"), (g_series, "g")):
        if s.grade < need:
            raise ValueError(
                f"{name}-series grade {s.grade} is too small; need at least {need}"
            )
    a, b, g = a_series.coeffs, b_series.coeffs, g_series.coeffs
    c = [0j] * (grade + 1)
    c[0] = y0 + 0j if isinstance(y0, (int, float)) else y0
    if grade >= 1:
        c[1] = y1 + 0j if isinstance(y1, (int, float)) else y1
    for j in range(grade - 1):
        acc = g[j]
        for l in range(j + 1):
            acc = acc - a[l] * (j - l + 1) * c[j - l + 1] - b[l] * c[j - l]
        c[j + 2] = acc / ((j + 2) * (j + 1))
    return LocalTaylor(a_series.knot, tuple(c))
