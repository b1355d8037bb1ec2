"""Main terms, ratio and sign scans over crank tables, and Wright's P_s(u) integral."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .crank_table import CrankTable
from .generating import _check_family, gen_SD

LOG2 = math.log(2.0)
U_MAX = 30.0
X_MAX = 700.0


class GridOutOfRange(ValueError):
    pass


class UnsupportedOrder(ValueError):
    pass


class Overflow(OverflowError):
    pass


# ---------------------------------------------------------------- main terms


def log_main_term(n: int) -> float:
    """log of (log 2)/(4 pi sqrt n) * exp(pi sqrt(n/3))."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.log(LOG2 / (4 * math.pi)) - 0.5 * math.log(n) + math.pi * math.sqrt(n / 3)


def main_term(n: int) -> float:
    return math.exp(log_main_term(n))


def log_secondary_term(n: int) -> float:
    """log of exp(pi sqrt(n/3)) / (8 sqrt(3) n), the size of the crank differences."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.pi * math.sqrt(n / 3) - math.log(8 * math.sqrt(3) * n)


def _ratio(exact: int, log_ref: float) -> float:
    if exact <= 0:
        return 0.0 if exact == 0 else -math.exp(math.log(-exact) - log_ref)
    return math.exp(math.log(exact) - log_ref)


# ---------------------------------------------------------------- ratio scan


@dataclass(frozen=True)
class AsymReport:
    family: str
    m: int
    grid: tuple
    exact: tuple
    main: tuple
    ratio: tuple
    smoothed: tuple  # ratio averaged with the neighbouring n to cancel the q = -1 wobble
    verdict: str

    def deviations(self) -> list:
        return [abs(r - 1) for r in self.ratio]

    def smoothed_deviations(self) -> list:
        return [abs(r - 1) for r in self.smoothed]

    def rows(self) -> list:
        return [
            {"n": n, "exact": str(e), "main": mt, "ratio": r, "pair_averaged_ratio": s}
            for n, e, mt, r, s in zip(self.grid, self.exact, self.main, self.ratio, self.smoothed)
        ]


def _decreasing_tail(values) -> int:
    """Length of the longest strictly decreasing run ending at the last entry."""
    k = 1
    while k < len(values) and values[-k - 1] > values[-k]:
        k += 1
    return k


def ratio_verdict(deviations, smoothed_deviations) -> str:
    if len(deviations) < 2:
        return "insufficient data"
    if deviations[-1] >= deviations[0]:
        return "not converging"
    # eventual monotonicity: the decreasing run must cover more than half the grid
    if _decreasing_tail(smoothed_deviations) * 2 > len(smoothed_deviations):
        return "converging"
    return "not converging"


def ratio_scan(family: str, m: int, grid, table: CrankTable) -> AsymReport:
    _check_family(family)
    if table.family != family:
        raise ValueError(f"table holds {table.family}, asked for {family}")
    grid = tuple(int(n) for n in grid)
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    if not grid or grid[0] < 1 or grid[-1] > table.N:
        raise GridOutOfRange(f"grid must lie in [1, {table.N}]")
    row = table.row(m)
    exact, main, ratio, smoothed = [], [], [], []
    for n in grid:
        lm = log_main_term(n)
        r = _ratio(row[n], lm)
        nb = n + 1 if n + 1 <= table.N else n - 1
        rb = _ratio(row[nb], log_main_term(nb)) if nb >= 1 else r
        exact.append(row[n])
        main.append(math.exp(lm))
        ratio.append(r)
        smoothed.append((r + rb) / 2)
    dev = [abs(r - 1) for r in ratio]
    sdev = [abs(r - 1) for r in smoothed]
    return AsymReport(family, m, grid, tuple(exact), tuple(main), tuple(ratio), tuple(smoothed),
                      ratio_verdict(dev, sdev))


def default_grid(top: int, start: int = 500) -> list:
    """Geometric grid start * 2^k up to top."""
    grid = []
    n = start
    while n <= top:
        grid.append(n)
        n *= 2
    return grid


# ---------------------------------------------------------------- sign scan


@dataclass(frozen=True)
class SignScan:
    family: str
    m: int
    N: int
    n0: int
    holds: bool


def signed_differences(family: str, m: int, order: int) -> list:
    """(-1)^{m+n+1} (N(m, n) - N(m+1, n)) for n = 0..order."""
    d = gen_SD(family, m, order)
    return [(-1) ** (m + n + 1) * d[n] for n in range(order + 1)]


def sign_scan(family: str, m: int, N: int) -> SignScan:
    """Smallest n0 with a strictly positive signed difference on all of [n0, N]."""
    _check_family(family)
    if m < 0:
        raise ValueError("m must be non-negative")
    if N < 10:
        raise ValueError("N must be at least 10")
    signed = signed_differences(family, m, N)
    n0 = 1
    for n in range(N, 0, -1):
        if signed[n] <= 0:
            n0 = n + 1
            break
    holds = n0 <= N and N - n0 >= N / 2
    return SignScan(family, m, N, n0, holds)


def secondary_ratios(family: str, m: int, grid, order: int | None = None) -> list:
    """|N(m,n) - N(m+1,n)| over the secondary main term, averaged over n and n+1."""
    grid = [int(n) for n in grid]
    order = order or grid[-1] + 1
    d = gen_SD(family, m, order)
    out = []
    for n in grid:
        a = _ratio(abs(d[n]), log_secondary_term(n))
        b = _ratio(abs(d[n + 1]), log_secondary_term(n + 1))
        out.append((a + b) / 2)
    return out


# ---------------------------------------------------------------- Wright / Bessel


def wright_P(s: float, u: float, M: float = 1.0, steps: int = 4000) -> complex:
    """(1/2 pi i) * integral of v^s e^{u(v + 1/v)} over the segment 1 - iM .. 1 + iM.

    Composite Simpson in t with v = 1 + i t.
    """
    if u > U_MAX:
        raise Overflow(f"u={u} > {U_MAX} overflows e^(2u)")
    if u <= 0 or M <= 0:
        raise ValueError("u and M must be positive")
    if steps < 1000:
        raise ValueError("steps must be at least 1000")
    steps += steps % 2
    t = np.linspace(-M, M, steps + 1)
    v = 1 + 1j * t
    f = v**s * np.exp(u * (v + 1 / v))
    w = np.ones(steps + 1)
    w[1:-1:2] = 4
    w[2:-1:2] = 2
    h = 2 * M / steps
    # dv = i dt cancels the i in 1/(2 pi i)
    return complex(np.dot(w, f) * h / 3 / (2 * math.pi))


_SUPPORTED = {0.5, -0.5, 1.5, -1.5}


def bessel_I(order: float, x: float) -> float:
    """Modified Bessel I of half-integer order +-1/2 or +-3/2 in closed form."""
    order = float(order)
    if order not in _SUPPORTED:
        raise UnsupportedOrder(f"order {order} not in {sorted(_SUPPORTED)}")
    if not 0 < x <= X_MAX:
        raise ValueError(f"x must lie in (0, {X_MAX}]")
    c = math.sqrt(2 / (math.pi * x))
    sh, ch = math.sinh(x), math.cosh(x)
    if order == 0.5:
        return c * sh
    if order == -0.5:
        return c * ch
    # one step of I_{v-1} - I_{v+1} = (2v/x) I_v from the order +-1/2 pair
    if order == 1.5:
        return c * (ch - sh / x)
    return c * (sh - ch / x)


@dataclass(frozen=True)
class WrightCheck:
    s: float
    us: tuple
    P: tuple
    bessel: tuple
    scaled_gaps: tuple  # |P_s(u) - I_{-s-1}(2u)| e^{-2u}

    @property
    def decreasing(self) -> bool:
        g = self.scaled_gaps
        return all(b < a for a, b in zip(g, g[1:]))


def wright_check(s: float, us, M: float = 1.0, steps: int = 4000) -> WrightCheck:
    us = tuple(float(u) for u in us)
    P, I, gaps = [], [], []
    for u in us:
        p = wright_P(s, u, M, steps)
        b = bessel_I(-s - 1, 2 * u)
        P.append(p)
        I.append(b)
        gaps.append(abs(p - b) * math.exp(-2 * u))
    return WrightCheck(s, us, tuple(P), tuple(I), tuple(gaps))


__all__ = [
    "GridOutOfRange",
    "UnsupportedOrder",
    "Overflow",
    "log_main_term",
    "main_term",
    "log_secondary_term",
    "AsymReport",
    "ratio_verdict",
    "ratio_scan",
    "default_grid",
    "SignScan",
    "signed_differences",
    "sign_scan",
    "secondary_ratios",
    "wright_P",
    "bessel_I",
    "WrightCheck",
    "wright_check",
]
