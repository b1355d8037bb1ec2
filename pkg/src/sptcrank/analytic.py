"""Floating-point evaluation of h_{A,B} and f_{j,a,b} near and away from q = +-1.

All checks here measure and report constants; the O(1) bounds they probe
have no explicit constants, so verdicts are about trends across a y-grid.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

LOG2 = math.log(2.0)
Y_FLOOR = 1e-4
TOL_FLOOR = 1e-12
MAX_TERMS = 10**6

# Measured over y = 2^-4 .. 2^-10 with x at the cone centers, then padded
# about 1.5x: observed maxima 0.62/0.50 (pole +1) and 0.50/0.66 (pole -1)
# for (A, B) = (1/2, 3/2)/(3/2, 1/2); away band max |h| y^1.5 = 0.0155.
RECORDED_POLE_ONE_BOUND = {(0.5, 1.5): 1.0, (1.5, 0.5): 1.0}
RECORDED_POLE_MINUS_ONE_BOUND = {(0.5, 1.5): 1.0, (1.5, 0.5): 1.0}
RECORDED_AWAY_BOUND = 0.025


class NoConvergence(RuntimeError):
    pass


class BadParity(ValueError):
    pass


class EmptyBand(ValueError):
    pass


class PoleInput(ValueError):
    pass


@dataclass(frozen=True)
class ComplexPoint:
    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError("y must be positive")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def tau(self) -> complex:
        return self.z - 0.5

    @property
    def q(self) -> complex:
        return cmath.exp(2j * math.pi * self.z)

    @property
    def Q(self) -> complex:
        return cmath.exp(2j * math.pi * self.tau)

    def conjugate_point(self) -> "ComplexPoint":
        """The point -x + iy, where q takes the conjugate value."""
        return ComplexPoint(-self.x, self.y)


@dataclass(frozen=True)
class HParams:
    A: float
    B: float

    def __post_init__(self):
        a2, b2 = 2 * self.A, 2 * self.B
        if a2 != round(a2) or a2 < 1:
            raise ValueError(f"2A must be a positive integer, got A={self.A}")
        if b2 != round(b2):
            raise ValueError(f"2B must be an integer, got B={self.B}")
        s = self.A + self.B
        if s != round(s) or s < 1:
            raise ValueError(f"A + B must be a positive integer, got {s}")

    @property
    def key(self) -> tuple:
        return (float(self.A), float(self.B))


def _sum_series(term, bound, pt: ComplexPoint, tol: float) -> complex:
    """Sum term(n) for n >= 1 until the bound on |term(n)| drops below tol*(1 + |S|)."""
    if pt.y < Y_FLOOR:
        raise ValueError(f"y={pt.y} is below the supported floor {Y_FLOOR}")
    tol = max(tol, TOL_FLOOR)
    total = 0j
    for n in range(1, MAX_TERMS + 1):
        total += term(n)
        if bound(n) < tol * (1.0 + abs(total)):
            return total
    raise NoConvergence(f"no convergence after {MAX_TERMS} terms")


def eval_h(p: HParams, pt: ComplexPoint, tol: float = 1e-13) -> complex:
    """h_{A,B}(q) = sum_{n>=1} (-1)^n q^{An^2+Bn} / (1 - q^n)."""
    z = pt.z
    r = math.exp(-2 * math.pi * pt.y)
    tw = 2j * math.pi * z

    def term(n):
        return (-1) ** n * cmath.exp(tw * (p.A * n * n + p.B * n)) / (1 - cmath.exp(tw * n))

    def bound(n):
        return r ** (p.A * n * n + p.B * n) / (1 - r**n)

    return _sum_series(term, bound, pt, tol)


def eval_f(j: int, a: int, b: int, pt: ComplexPoint, tol: float = 1e-13) -> complex:
    """f_{j,a,b}(z) = sum_{n>=1} (-1)^n n^{-j} q^{(an^2+bn)/2}."""
    if a < 1:
        raise ValueError("a must be a positive integer")
    tw = 2j * math.pi * pt.z
    y = pt.y

    def term(n):
        return (-1) ** n * n ** (-j) * cmath.exp(tw * (a * n * n + b * n) / 2)

    def bound(n):
        # only trust the bound once the Gaussian factor is decreasing
        e = (a * n * n + b * n) / 2
        if a * n + b / 2 <= 0:
            return math.inf
        return n ** (-j) * math.exp(-2 * math.pi * y * e)

    return _sum_series(term, bound, pt, tol)


def h_on_series(p: HParams, x: float, y: float, order: int) -> complex:
    """h_{A,B} summed through its exact integer q-expansion (cross-check path)."""
    from .series import lambert_accumulate, QSeries

    acc = [0] * (order + 1)
    n = 1
    while p.A * n * n + p.B * n <= order:
        e = int(round(p.A * n * n + p.B * n))
        lambert_accumulate(acc, (-1) ** n, e, n, 1)
        n += 1
    return QSeries(acc).evaluate(ComplexPoint(x, y).q)


# ---------------------------------------------------------------- lemma checks


@dataclass
class ResidualTable:
    params: tuple
    pole: int
    ys: list
    residuals: list
    main_terms: list
    bound: float
    verdict: str = field(init=False)

    def __post_init__(self):
        self.verdict = _pole_verdict(self.ys, self.residuals, self.bound)

    @property
    def scaled(self) -> list:
        """residual * y, which should shrink with y."""
        return [r * y for r, y in zip(self.residuals, self.ys)]

    def rows(self) -> list:
        return [
            {"y": y, "residual": r, "main_term": mt, "residual_times_y": r * y}
            for y, r, mt in zip(self.ys, self.residuals, self.main_terms)
        ]


def _pole_verdict(ys, residuals, bound) -> str:
    if len(ys) < 2:
        return "insufficient data"
    if max(residuals) > bound:
        return "unbounded"
    scaled = [r * y for r, y in zip(residuals, ys)]
    if all(b < a for a, b in zip(scaled, scaled[1:])):
        return "bounded"
    return "no trend"


def _check_ys(ys) -> list:
    ys = [float(y) for y in ys]
    if not ys:
        raise ValueError("ys must be non-empty")
    if any(b >= a for a, b in zip(ys, ys[1:])):
        raise ValueError("ys must be strictly decreasing")
    if ys[0] > 0.1:
        raise ValueError("lemma checks need y <= 0.1")
    return ys


def check_pole_one(p: HParams, ys, bound: float | None = None, x: float = 0.0) -> ResidualTable:
    """Residuals |h - log2/(2 pi i z)| at x = 0 (center of the cone |x| <= y)."""
    ys = _check_ys(ys)
    res, main = [], []
    for y in ys:
        pt = ComplexPoint(x, y)
        mt = LOG2 / (2j * math.pi * pt.z)
        res.append(abs(eval_h(p, pt) - mt))
        main.append(abs(mt))
    if bound is None:
        bound = RECORDED_POLE_ONE_BOUND.get(p.key, math.inf)
    return ResidualTable(p.key, 1, ys, res, main, bound)


def check_pole_minus_one(p: HParams, ys, bound: float | None = None, x: float = 0.5) -> ResidualTable:
    """Residuals |h - log2/(4 pi i tau)| at x = 1/2; needs 2B odd."""
    if round(2 * p.B) % 2 == 0:
        raise BadParity(f"B={p.B} is not a half-integer")
    ys = _check_ys(ys)
    res, main = [], []
    for y in ys:
        pt = ComplexPoint(x, y)
        mt = LOG2 / (4j * math.pi * pt.tau)
        res.append(abs(eval_h(p, pt) - mt))
        main.append(abs(mt))
    if bound is None:
        bound = RECORDED_POLE_MINUS_ONE_BOUND.get(p.key, math.inf)
    return ResidualTable(p.key, -1, ys, res, main, bound)


@dataclass(frozen=True)
class AwayReport:
    y: float
    xs: tuple
    max_scaled: float  # max over xs of |h| * y^{3/2}
    argmax_x: float


def check_away(p: HParams, y: float, xs) -> AwayReport:
    xs = tuple(float(x) for x in xs)
    if not xs:
        raise EmptyBand("no x values given")
    if y > 0.1:
        raise ValueError("away check needs y <= 0.1")
    lo, hi = y, 0.5 - y
    eps = 1e-12
    if any(not (lo - eps <= abs(x) <= hi + eps) for x in xs):
        raise ValueError(f"x values must satisfy {lo} <= |x| <= {hi}")
    vals = [abs(eval_h(p, ComplexPoint(x, y))) * y**1.5 for x in xs]
    i = int(np.argmax(vals))
    return AwayReport(y, xs, vals[i], xs[i])


def away_band(y: float, count: int = 32) -> list:
    """count equispaced points of [y, 1/2 - y], endpoints included."""
    return list(np.linspace(y, 0.5 - y, count))


def away_verdict(reports, bound: float = RECORDED_AWAY_BOUND) -> str:
    if not reports:
        raise EmptyBand("no reports")
    return "bounded" if max(r.max_scaled for r in reports) <= bound else "unbounded"


# ---------------------------------------------------------------- Mittag-Leffler


@dataclass(frozen=True)
class MittagLeffler:
    w: complex
    K: int
    lhs: complex
    partial_rhs: complex
    gap: float


def mittag_leffler_check(w: complex, K: int) -> MittagLeffler:
    """Compare e^{pi i w}/(1 - e^{2 pi i w}) with its partial fractions up to k = K."""
    w = complex(w)
    if abs(w.imag) > 10:
        raise ValueError("|Im w| > 10 overflows the exponentials")
    if abs(w.imag) < 1e-8 and abs(w.real - round(w.real)) < 1e-8:
        raise PoleInput(f"w={w} is at an integer pole")
    if K < 1:
        raise ValueError("K must be positive")
    lhs = cmath.exp(1j * math.pi * w) / (1 - cmath.exp(2j * math.pi * w))
    k = np.arange(1, K + 1, dtype=float)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    pairs = 1.0 / (w - k) + 1.0 / (w + k)
    # sum smallest terms first to limit rounding in the tail
    s = complex(np.sum((signs * pairs)[::-1]))
    rhs = 1.0 / (-2j * math.pi * w) + s / (-2j * math.pi)
    return MittagLeffler(w, K, lhs, rhs, abs(lhs - rhs))


__all__ = [
    "LOG2",
    "ComplexPoint",
    "HParams",
    "NoConvergence",
    "BadParity",
    "EmptyBand",
    "PoleInput",
    "eval_h",
    "eval_f",
    "h_on_series",
    "ResidualTable",
    "check_pole_one",
    "check_pole_minus_one",
    "AwayReport",
    "check_away",
    "away_band",
    "away_verdict",
    "MittagLeffler",
    "mittag_leffler_check",
]
