"""Collocation marching for linear second-order ODEs along polygonal paths.

The equation is y'' + a(x) y' + b(x) y = g(x) with the three coefficient
functions supplied as series oracles.  One marching step from a knot z0 to a
tentative knot z1 = z0 + h*direction works entirely in blend space:

 1. generate grade-m solution series at z1 for the two homogeneous initial
    data sets (1,0) and (0,1), and the particular series with zero data
    (identically zero whenever g is, which recovers the plain blend of the
    known data with the zero series);
 2. blend the known series at z0 against the particular series, and the zero
    series at z0 against each homogeneous series;
 3. collocate: force the residual of y = L + A*C + B*S to vanish at
    s = 1/4 and s = 3/4 of the step, a 2x2 linear solve;
 4. sample the combined residual at s = 1/2, asymptotically the location of
    its maximum, and accept the step iff that sample is within tolerance.

The step is implicit, of order 2m in the residual, and the accepted solution
series at z1 is pser + A*cser + B*sser, which by linearity of the Taylor
recurrence is again a solution series, so marching can continue from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .blend import Blend, blend_eval_derivs_bounded
from .blendstring import Blendstring
from .errors import SolveError
from .series import LocalTaylor, SeriesOracle, combine, ode_taylor, zero_series

__all__ = [
    "OdeProblem",
    "StepRecord",
    "SolveResult",
    "initial_series",
    "step",
    "solve_ivp",
    "solve_on_mesh",
    "sho_amplification",
    "sho_step_matrix",
    "stability_threshold",
]

_COLLOCATION_S = (0.25, 0.75)
_SAMPLE_S = 0.5
_COND_LIMIT = 1e12
_MAX_RETRIES = 60
_EPS = 2.220446049250313e-16
_FLOOR_SAFETY = 1.0


@dataclass(frozen=True)
class OdeProblem:
    """A linear second-order IVP y'' + a y' + b y = g along a polygonal path."""

    a: SeriesOracle
    b: SeriesOracle
    g: SeriesOracle
    path: tuple
    y0: complex
    y1: complex
    grade: int
    tol: float
    h_init: float | None = None
    h_min: float = 1e-10
    h_max: float = math.inf

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(complex(w) for w in self.path))
        if len(self.path) < 2:
            raise ValueError("path needs at least two waypoints")
        for u, v in zip(self.path, self.path[1:]):
            if u == v:
                raise ValueError("consecutive waypoints must be distinct")
        if self.grade < 1:
            raise ValueError("grade must be at least 1")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if not 0 < self.h_min <= self.h_max:
            raise ValueError("need 0 < h_min <= h_max")
        if self.h_init is not None and not self.h_init > 0:
            raise ValueError("h_init must be positive when given")


@dataclass(frozen=True)
class StepRecord:
    """Diagnostics for one step attempt.

    ``noise_floor`` is the estimated smallest residual sample distinguishable
    from zero at working precision for this step's grade and length; a step
    is accepted when the sample is within tolerance or within that floor.
    """

    z_from: complex
    z_to: complex
    h: float
    residual: float
    accepted: bool
    retries: int
    noise_floor: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    solution: Blendstring
    steps: tuple = field(default_factory=tuple)

    @property
    def accepted_steps(self) -> int:
        return sum(1 for s in self.steps if s.accepted)

    def step_log_csv(self) -> str:
        lines = ["index,re_from,im_from,re_to,im_to,h,residual,accepted,retries"]
        for i, s in enumerate(self.steps):
            lines.append(
                f"{i},{s.z_from.real:.17g},{s.z_from.imag:.17g},"
                f"{s.z_to.real:.17g},{s.z_to.imag:.17g},"
                f"{s.h:.17g},{s.residual:.17g},{int(s.accepted)},{s.retries}"
            )
        return "\n".join(lines) + "\n"


def initial_series(problem: OdeProblem, at: complex | None = None) -> LocalTaylor:
    """Grade-m solution series from the initial data via the Taylor recurrence."""
    z0 = problem.path[0] if at is None else at
    m = problem.grade
    return ode_taylor(
        LocalTaylor(z0, problem.a(z0, m)),
        LocalTaylor(z0, problem.b(z0, m)),
        LocalTaylor(z0, problem.g(z0, m)),
        problem.y0,
        problem.y1,
        m,
    )


def _coeff_values(problem: OdeProblem, z: complex):
    return (
        problem.a(z, 0)[0],
        problem.b(z, 0)[0],
        problem.g(z, 0)[0],
    )


def _collocate(problem: OdeProblem, z0: complex, z1: complex, known: LocalTaylor):
    """One collocation solve over [z0, z1].

    Returns (series at z1, residual sample, noise floor); a singular or
    ill-conditioned 2x2 system comes back as (None, inf, 0).  The noise
    floor estimates the residual magnitude produced by mere coefficient
    roundoff: machine epsilon times the data magnitude times the summed
    basis derivative magnitudes of the representation.  Samples at or below
    the floor are indistinguishable from a zero residual.
    """
    m = problem.grade
    d = z1 - z0
    a1 = LocalTaylor(z1, problem.a(z1, m))
    b1 = LocalTaylor(z1, problem.b(z1, m))
    g1 = LocalTaylor(z1, problem.g(z1, m))
    zs1 = zero_series(z1, m)
    cser = ode_taylor(a1, b1, zs1, 1.0, 0.0, m)
    sser = ode_taylor(a1, b1, zs1, 0.0, 1.0, m)
    pser = ode_taylor(a1, b1, g1, 0.0, 0.0, m)

    zs0 = zero_series(z0, m)
    L = Blend.from_taylor(known, pser)
    C = Blend.from_taylor(zs0, cser)
    S = Blend.from_taylor(zs0, sser)

    ad = abs(d)

    def residuals(s: float):
        """Operator values of the three blends at s, with roundoff bounds."""
        z = z0 + s * d
        aval, bval, gval = _coeff_values(problem, z)
        out = []
        for X, inhom in ((C, 0.0), (S, 0.0), (L, gval)):
            jet, err = blend_eval_derivs_bounded(X, s, 2)
            val = jet[2] / (d * d) + aval * (jet[1] / d) + bval * jet[0] - inhom
            bound = (
                err[2] / (ad * ad)
                + abs(aval) * err[1] / ad
                + abs(bval) * err[0]
                + _EPS * abs(inhom)
            )
            out.append((val, bound))
        return out, (aval, bval, gval)

    ((c1, ec1), (s1, es1), (l1, el1)), _ = residuals(_COLLOCATION_S[0])
    ((c2, ec2), (s2, es2), (l2, el2)), _ = residuals(_COLLOCATION_S[1])

    det = c1 * s2 - s1 * c2
    if det == 0:
        return None, math.inf, 0.0
    ninf = max(abs(c1) + abs(s1), abs(c2) + abs(s2))
    ninf_inv = max(abs(s2) + abs(s1), abs(c2) + abs(c1)) / abs(det)
    if ninf * ninf_inv > _COND_LIMIT:
        return None, math.inf, 0.0

    # 2x2 elimination with partial pivoting
    r1, r2 = (c1, s1, -l1), (c2, s2, -l2)
    if abs(r2[0]) > abs(r1[0]):
        r1, r2 = r2, r1
    f = r2[0] / r1[0]
    denom = r2[1] - f * r1[1]
    B = (r2[2] - f * r1[2]) / denom
    A = (r1[2] - r1[1] * B) / r1[0]

    result = combine(pser, combine(cser, sser, A, B))
    ((rcm, ecm), (rsm, esm), (rlm, elm)), _ = residuals(_SAMPLE_S)
    res = abs(rlm + A * rcm + B * rsm)
    if not math.isfinite(res):
        return None, math.inf, 0.0

    # noise floor of the sample: evaluation error of the combination plus the
    # wobble of (A, B) induced by the evaluation errors in the 2x2 system
    ab = max(abs(A), abs(B))
    d_ab = ninf_inv * (max(el1, el2) + ab * max(ec1 + es1, ec2 + es2))
    floor = _FLOOR_SAFETY * (
        elm
        + abs(A) * ecm
        + abs(B) * esm
        + d_ab * (abs(rcm) + abs(rsm))
        + _EPS * (abs(rlm) + abs(A * rcm) + abs(B * rsm))
    )
    return result, res, floor


def step(
    problem: OdeProblem,
    from_knot: complex,
    known: LocalTaylor,
    h: float,
    direction: complex = 1.0 + 0j,
):
    """One tentative marching step of arclength h.

    Returns (accepted, series_at_target, residual_sample); a singular or
    ill-conditioned collocation system comes back as a rejection with
    series None and an infinite residual.
    """
    if not h > 0:
        raise ValueError("h must be positive")
    z1 = from_knot + h * direction
    result, res, floor = _collocate(problem, from_knot, z1, known)
    accepted = result is not None and res <= max(problem.tol, floor)
    return accepted, result, res


def _grow(h: float, res: float, tol: float, order: int) -> float:
    if res == 0 or not math.isfinite(res):
        return 2.0 * h
    return h * min(2.0, 0.9 * (tol / res) ** (1.0 / order))


def _shrink(h: float, res: float, tol: float, order: int) -> float:
    if not math.isfinite(res):
        return 0.5 * h
    return h * max(0.1, 0.9 * (tol / res) ** (1.0 / order))


def solve_ivp(problem: OdeProblem) -> SolveResult:
    """March the problem along its path with adaptive stepsize control.

    Steps never straddle waypoints: the last step of each segment is clamped
    to land exactly on the waypoint.  The accepted per-step series assemble
    into the solution blendstring; every attempt is logged in the step list.
    On accept the stepsize grows by at most 2x, on reject it shrinks by at
    least 10x less than the order-matched estimate, and a shrink below h_min
    aborts with diagnostics.
    """
    m = problem.grade
    order = 2 * m
    records = [initial_series(problem)]
    steps: list[StepRecord] = []
    known = records[0]
    current = problem.path[0]

    for w0, w1 in zip(problem.path, problem.path[1:]):
        seglen = abs(w1 - w0)
        direction = (w1 - w0) / seglen
        h = problem.h_init if problem.h_init is not None else min(problem.h_max, seglen / 8.0)
        h = min(max(h, problem.h_min), problem.h_max)
        pos = 0.0
        retries = 0
        while pos < seglen:
            rem = seglen - pos
            hs = min(h, rem)
            landing = hs >= rem * (1.0 - 1e-14)
            if landing:
                hs = rem
                z1 = w1
            else:
                z1 = current + hs * direction
            result, res, floor = _collocate(problem, current, z1, known)
            teff = max(problem.tol, floor)
            accepted = result is not None and res <= teff
            steps.append(StepRecord(current, z1, hs, res, accepted, retries, floor))
            if accepted:
                records.append(result)
                known = result
                current = z1
                pos = seglen if landing else pos + hs
                retries = 0
                # a sample at the noise floor carries no size information;
                # grow decisively instead of trusting the ratio
                grown = 2.0 * hs if res <= floor else _grow(hs, res, teff, order)
                h = min(max(grown, problem.h_min), problem.h_max)
            else:
                retries += 1
                h = _shrink(hs, res, teff, order)
                if h < problem.h_min or retries > _MAX_RETRIES:
                    raise SolveError(
                        f"step from {current!r} rejected down to h={h:.3e} "
                        f"(h_min={problem.h_min:.3e}, residual={res:.3e}, "
                        f"tol={problem.tol:.3e}, retries={retries})"
                    )
    return SolveResult(Blendstring(records), tuple(steps))


def solve_on_mesh(problem: OdeProblem, knots: Sequence[complex]) -> SolveResult:
    """March over a frozen knot sequence, accepting only within-tolerance steps.

    Used to produce a solution compatible with an earlier one: no adaptivity,
    each consecutive knot pair is one step, and a residual above tolerance is
    an error rather than a retry.
    """
    knots = [complex(k) for k in knots]
    if len(knots) < 2:
        raise ValueError("mesh needs at least two knots")
    if knots[0] != problem.path[0]:
        raise ValueError("mesh must start at the first waypoint")
    records = [initial_series(problem)]
    steps = []
    known = records[0]
    for z0, z1 in zip(knots, knots[1:]):
        result, res, floor = _collocate(problem, z0, z1, known)
        if result is None or res > max(problem.tol, floor):
            raise SolveError(
                f"frozen-mesh step {z0!r} -> {z1!r} has residual {res:.3e} > tol"
            )
        steps.append(StepRecord(z0, z1, abs(z1 - z0), res, True, 0, floor))
        records.append(result)
        known = result
    return SolveResult(Blendstring(records), tuple(steps))


# -- harmonic-oscillator step analysis ---------------------------------------


def _sho_problem(m: int, tol: float = 1e-12) -> OdeProblem:
    def zero(point, grade):
        return [0j] * (grade + 1)

    def one(point, grade):
        return [1.0 + 0j] + [0j] * grade

    return OdeProblem(zero, one, zero, (0.0, 4 * math.pi), 1.0, 0.0, m, tol)


def sho_step_matrix(m: int, nu: float) -> np.ndarray:
    """The 2x2 matrix mapping (y, y') across one collocation step for y'' + y = 0."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if not nu > 0:
        raise ValueError("nu must be positive")
    problem = _sho_problem(m)
    z0, z1 = 0.0 + 0j, nu + 0j
    cols = []
    for y0, y1 in ((1.0, 0.0), (0.0, 1.0)):
        known = ode_taylor(
            zero_series(z0, m),
            LocalTaylor(z0, (1.0 + 0j,) + (0j,) * m),
            zero_series(z0, m),
            y0,
            y1,
            m,
        )
        result, _, _ = _collocate(problem, z0, z1, known)
        if result is None:
            raise SolveError(f"singular collocation system at nu={nu!r}")
        cols.append((result.coeffs[0], result.coeffs[1]))
    return np.array([[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]])


def sho_amplification(m: int, nu: float) -> tuple:
    """Cosine/sine analogues (C_m, S_m) of one collocation step for y'' + y = 0.

    C_m is the common diagonal entry of the step matrix.  The two
    off-diagonal entries agree with +-S_m only to higher order, but their
    product is what the eigenvalues see, so S_m is returned as the signed
    geometric mean sqrt(M12 * -M21); with that convention C_m^2 + S_m^2 = 1
    holds to roundoff wherever |C_m| <= 1, and the step matrix has
    characteristic polynomial lambda^2 - 2 C_m lambda + 1.  Inside the narrow
    instability windows (|C_m| > 1) the off-diagonal product goes negative
    and |S_m| is returned as sqrt of its absolute value.
    """
    M = sho_step_matrix(m, nu)
    C = (M[0, 0].real + M[1, 1].real) / 2.0
    prod = (-M[0, 1] * M[1, 0]).real
    S = math.copysign(math.sqrt(abs(prod)), M[0, 1].real)
    return C, S


def stability_threshold(m: int, tol: float = 1e-8) -> float:
    """Smallest positive nu with C_m(nu)^2 = 1, located by scan plus bisection.

    Supported for 1 <= m <= 6.  The primary scan walks nu in steps of
    pi/1000 across (0, 4*pi]; if the sign change is narrower than that (the
    windows shrink rapidly with m) a fine scan near pi is tried before
    giving up.
    """
    if not 1 <= m <= 6:
        raise ValueError("stability_threshold supports 1 <= m <= 6")

    def excess(nu: float) -> float:
        c, _ = sho_amplification(m, nu)
        return c * c - 1.0

    bracket = None
    coarse = math.pi / 1000.0
    prev = coarse
    k = 1
    while k * coarse <= 4 * math.pi:
        nu = k * coarse
        if excess(nu) > 0:
            bracket = (prev, nu)
            break
        prev = nu
        k += 1
    if bracket is None:
        lo = 0.999 * math.pi
        fine = math.pi * 1e-6
        prev = lo
        for j in range(1, 4001):
            nu = lo + j * fine
            if excess(nu) > 0:
                bracket = (prev, nu)
                break
            prev = nu
    if bracket is None:
        raise SolveError(f"no instability onset found in (0, 4*pi) for m={m}")
    lo, hi = bracket
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
