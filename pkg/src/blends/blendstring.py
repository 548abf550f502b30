"""Blendstrings: chains of local Taylor records blended over polygonal paths.

A blendstring is an ordered sequence of LocalTaylor records, all of one
grade, whose consecutive knots are distinct.  Each consecutive pair spans a
straight segment in the complex plane over which the two records are blended;
the chain as a whole represents a piecewise-polynomial function with grade-m
smoothness at the interior knots.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .blend import Blend, blend_eval, blend_eval_derivs, blend_integrate
from .errors import CompatibilityError, DocumentError, OffPathError
from .series import LocalTaylor, SeriesOracle, compose

__all__ = ["Blendstring", "EvalTable", "zip_with", "DISPATCH_RTOL"]

# A point belongs to a segment when its affine parameter is within this
# tolerance (relative to the segment length) of the real interval [0,1];
# the first matching segment wins, so dispatch is deterministic on paths
# that cross themselves.
DISPATCH_RTOL = 1e-10


@dataclass(frozen=True)
class EvalTable:
    """Batch evaluation output: points along the path with z-derivatives.

    Every row holds the evaluation point and derivatives 0..nder with
    respect to z (actual derivatives, not Taylor coefficients).  Points are
    ordered along the path and each knot appears exactly once.
    """

    rows: tuple
    nder: int

    def __post_init__(self):
        for z, derivs in self.rows:
            if len(derivs) != self.nder + 1:
                raise ValueError("every row needs nder+1 derivative entries")

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def points(self) -> np.ndarray:
        return np.array([z for z, _ in self.rows], dtype=complex)

    def derivatives(self, order: int = 0) -> np.ndarray:
        return np.array([d[order] for _, d in self.rows], dtype=complex)

    def to_csv(self) -> str:
        cols = ["re_z", "im_z"]
        for k in range(self.nder + 1):
            cols += [f"re_d{k}", f"im_d{k}"]
        lines = [",".join(cols)]
        for z, derivs in self.rows:
            vals = [z.real, z.imag]
            for d in derivs:
                d = complex(d)
                vals += [d.real, d.imag]
            lines.append(",".join(_fmt(v) for v in vals))
        return "\n".join(lines) + "\n"

    def save_csv(self, path) -> None:
        with open(path, "w") as f:
            f.write(self.to_csv())


class Blendstring:
    """Ordered local Taylor records of a shared grade along a polygonal path."""

    __slots__ = ("records",)

    def __init__(self, records: Sequence[LocalTaylor]):
        records = tuple(records)
        if not records:
            raise ValueError("a blendstring needs at least one record")
        g = records[0].grade
        for r in records:
            if r.grade != g:
                raise CompatibilityError("all records must share one grade")
        for a, b in zip(records, records[1:]):
            if a.knot == b.knot:
                raise CompatibilityError(
                    f"consecutive knots must be distinct (knot {a.knot!r} repeats)"
                )
        object.__setattr__(self, "records", records)

    def __setattr__(self, name, value):
        raise AttributeError("Blendstring is immutable")

    def __len__(self) -> int:
        return len(self.records)

    def __eq__(self, other) -> bool:
        return isinstance(other, Blendstring) and self.records == other.records

    def __repr__(self) -> str:
        return (
            f"Blendstring({len(self.records)} knots, grade {self.grade}, "
            f"{self.knots[0]!r} -> {self.knots[-1]!r})"
        )

    # -- construction --------------------------------------------------

    @classmethod
    def from_oracle(
        cls, knots: Sequence[complex], grade: int, oracle: SeriesOracle
    ) -> "Blendstring":
        """Fill a blendstring by asking ``oracle(knot, grade)`` at every knot."""
        if grade < 0:
            raise ValueError("grade must be nonnegative")
        recs = []
        for a in knots:
            c = tuple(oracle(a, grade))
            if len(c) != grade + 1:
                raise ValueError(
                    f"oracle returned {len(c)} coefficients at {a!r}, wanted {grade + 1}"
                )
            recs.append(LocalTaylor(a, c))
        return cls(recs)

    # -- basic queries ---------------------------------------------------

    @property
    def grade(self) -> int:
        return self.records[0].grade

    @property
    def knots(self) -> tuple:
        return tuple(r.knot for r in self.records)

    @property
    def segments(self) -> int:
        return len(self.records) - 1

    def compatible(self, other: "Blendstring") -> bool:
        """True iff equal length, equal corresponding knots, equal grade."""
        return (
            len(self.records) == len(other.records)
            and self.grade == other.grade
            and all(a.knot == b.knot for a, b in zip(self.records, other.records))
        )

    def segment_blend(self, k: int) -> Blend:
        """The blend over segment k, with coefficients scaled to s-space."""
        return Blend.from_taylor(self.records[k], self.records[k + 1])

    # -- evaluation ------------------------------------------------------

    def eval(self, z: complex, rtol: float = DISPATCH_RTOL) -> complex:
        """Value at a single point on (or within rtol of) some segment."""
        if self.segments == 0:
            if z == self.records[0].knot:
                return self.records[0].coeffs[0]
            raise OffPathError(f"{z!r} is not the single knot of this blendstring")
        for k in range(self.segments):
            a = self.records[k].knot
            d = self.records[k + 1].knot - a
            s = (z - a) / d
            if abs(s.imag) <= rtol and -rtol <= s.real <= 1.0 + rtol:
                return blend_eval(self.segment_blend(k), s)
        raise OffPathError(f"{z!r} lies on no segment of this blendstring")

    def deval(self, nrefine: int | None = None, nder: int = 0) -> EvalTable:
        """Evaluate everywhere: knots plus nrefine interior points per segment.

        Defaults to nrefine = 2*(grade+1) interior points.  Derivatives are
        returned with respect to z, so each s-jet is divided by span**k.
        """
        if nrefine is None:
            nrefine = 2 * (self.grade + 1)
        if nrefine < 0 or nder < 0:
            raise ValueError("nrefine and nder must be nonnegative")
        if self.segments == 0:
            r = self.records[0]
            derivs, fact = [], 1
            for k in range(nder + 1):
                if k > 1:
                    fact *= k
                derivs.append(fact * r.coeffs[k] if k <= r.grade else 0j)
            return EvalTable(((r.knot, tuple(derivs)),), nder)
        rows = []
        for k in range(self.segments):
            a = self.records[k].knot
            d = self.records[k + 1].knot - a
            last = k == self.segments - 1
            s = np.arange(0, nrefine + (2 if last else 1)) / (nrefine + 1)
            jets = blend_eval_derivs(self.segment_blend(k), s, nder)
            pts = a + s * d
            if last:
                pts[-1] = self.records[k + 1].knot
            scale = 1.0
            zjets = []
            for order in range(nder + 1):
                zjets.append(np.asarray(jets[order]) / scale)
                scale = scale * d
            for i, z in enumerate(pts):
                rows.append((complex(z), tuple(complex(zj[i]) for zj in zjets)))
        return EvalTable(tuple(rows), nder)

    # -- algebra ----------------------------------------------------------

    def map(self, outer_oracle: SeriesOracle) -> "Blendstring":
        """Compose an outer function onto this blendstring, knot by knot."""
        return Blendstring([compose(outer_oracle, r) for r in self.records])

    def truncate(self, grade: int) -> "Blendstring":
        """Drop coefficients above ``grade`` at every knot."""
        if grade < 0 or grade > self.grade:
            raise ValueError(f"cannot truncate grade {self.grade} to {grade}")
        return Blendstring(
            [LocalTaylor(r.knot, r.coeffs[: grade + 1]) for r in self.records]
        )

    # -- calculus ----------------------------------------------------------

    def indefinite_integral(self) -> "Blendstring":
        """Antiderivative blendstring, grade+1, vanishing at the first knot.

        Coefficient lists integrate termwise; the running constants are the
        exact per-segment blend integrals, so the result is the exact
        antiderivative of this blendstring along its own path.
        """
        if self.segments < 1:
            raise ValueError("need at least one segment to integrate")
        recs = []
        F = 0j
        for k, r in enumerate(self.records):
            coeffs = (F,) + tuple(c / (j + 1) for j, c in enumerate(r.coeffs))
            recs.append(LocalTaylor(r.knot, coeffs))
            if k < self.segments:
                d = self.records[k + 1].knot - r.knot
                F = F + d * blend_integrate(self.segment_blend(k))
        return Blendstring(recs)

    def definite_integral(self) -> complex:
        """Integral along the whole path: sum of exact per-segment integrals."""
        total = 0j
        for k in range(self.segments):
            d = self.records[k + 1].knot - self.records[k].knot
            total = total + d * blend_integrate(self.segment_blend(k))
        return total

    # -- serialization ------------------------------------------------------

    def to_document(self) -> str:
        """Human-readable JSON document, 17 significant digits per number."""
        knots = ",\n    ".join(_cplx(r.knot) for r in self.records)
        rows = []
        for r in self.records:
            rows.append("[" + ", ".join(_cplx(c) for c in r.coeffs) + "]")
        coeffs = ",\n    ".join(rows)
        return (
            "{\n"
            '  "format_version": 1,\n'
            f'  "grade": {self.grade},\n'
            '  "knots": [\n    ' + knots + "\n  ],\n"
            '  "coefficients": [\n    ' + coeffs + "\n  ]\n"
            "}\n"
        )

    @classmethod
    def from_document(cls, text: str) -> "Blendstring":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(
                f"line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from exc
        if not isinstance(doc, dict):
            raise DocumentError("top level: expected an object")
        if doc.get("format_version") != 1:
            raise DocumentError("format_version: expected 1")
        grade = doc.get("grade")
        if not isinstance(grade, int) or grade < 0:
            raise DocumentError("grade: expected a nonnegative integer")
        knots = doc.get("knots")
        if not isinstance(knots, list) or not knots:
            raise DocumentError("knots: expected a non-empty list")
        coeffs = doc.get("coefficients")
        if not isinstance(coeffs, list) or len(coeffs) != len(knots):
            raise DocumentError("coefficients: expected one row per knot")
        recs = []
        for i, (kn, row) in enumerate(zip(knots, coeffs)):
            if not isinstance(row, list) or len(row) != grade + 1:
                raise DocumentError(f"coefficients[{i}]: expected {grade + 1} entries")
            recs.append(
                LocalTaylor(
                    _read_cplx(kn, f"knots[{i}]"),
                    tuple(
                        _read_cplx(c, f"coefficients[{i}][{j}]")
                        for j, c in enumerate(row)
                    ),
                )
            )
        try:
            return cls(recs)
        except (CompatibilityError, ValueError) as exc:
            raise DocumentError(str(exc)) from exc

    def save(self, path) -> None:
        with open(path, "w") as f:
            f.write(self.to_document())

    @classmethod
    def load(cls, path) -> "Blendstring":
        with open(path) as f:
            return cls.from_document(f.read())


def zip_with(
    x: Blendstring,
    y: Blendstring,
    op: Callable[[LocalTaylor, LocalTaylor], LocalTaylor],
) -> Blendstring:
    """Apply a binary record operation knot-wise to two compatible blendstrings."""
    if not x.compatible(y):
        raise CompatibilityError("blendstrings are not compatible")
    return Blendstring([op(a, b) for a, b in zip(x.records, y.records)])


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _cplx(c) -> str:
    c = complex(c)
    return '{"re": ' + _fmt(c.real) + ', "im": ' + _fmt(c.imag) + "}"


def _read_cplx(obj, where: str) -> complex:
    if (
        not isinstance(obj, dict)
        or not isinstance(obj.get("re"), (int, float))
        or not isinstance(obj.get("im"), (int, float))
    ):
        raise DocumentError(f"{where}: expected an object with re/im numbers")
    return complex(obj["re"], obj["im"])
