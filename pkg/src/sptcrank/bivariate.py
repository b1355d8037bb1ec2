"""Bivariate generating functions in (z, q): S_C1, the rank R and the crank C.

Three independent routes to S_C1(z, q) meet here:

* ``gen_SC1_bivariate`` expands each Lambert term's z-kernel directly;
* ``prop51_SC1`` divides R(z, q^2) - (q;q^2)_inf C(z, q) by (1-z)(1-1/z);
* the univariate rows ``gen_SC1_m`` in :mod:`sptcrank.generating`.
"""
from __future__ import annotations

import numpy as np

from .generating import gen_S_m
from .series import (
    QSeries,
    ZQSeries,
    euler_product,
    inverse_euler_product,
    pochhammer,
    qs_mul,
    zq_divide_crank_kernel,
)

# The rank/crank quotient assembly is O(M N^2); keep it at desk scale.
PROP51_MAX_ORDER = 200


def _window(order: int, zwindow: int | None) -> int:
    if zwindow is None:
        return order
    if zwindow < order:
        raise ValueError(f"zwindow {zwindow} < order {order} would drop nonzero rows")
    return zwindow


def _empty(order: int, M: int):
    return np.zeros((2 * M + 1, order + 1), dtype=object)


def _divide_z_geometric(t, k: int, s: int) -> None:
    """In place: t <- t / (1 - z^s q^k) for s = +1 or -1.

    G = F + z^s q^k G, swept over q in blocks of k columns: each block only
    reads the previous, already final, block shifted one row in z.
    """
    ncols = t.shape[1]
    for e0 in range(k, ncols, k):
        e1 = min(e0 + k, ncols)
        prev = t[:, e0 - k:e1 - k]
        if s == 1:
            t[1:, e0:e1] += prev[:-1]
        else:
            t[:-1, e0:e1] += prev[1:]


def gen_SC1_bivariate(order: int, zwindow: int | None = None, family: str = "C1") -> ZQSeries:
    """S(z, q) with its z-kernel expanded term by term.

    (1 + x) / ((1 - z x)(1 - x/z)) = sum_m z^m x^|m| / (1 - x), so each
    Lambert term adds one base series shifted by |m| * (kernel exponent)
    into row m.
    """
    M = _window(order, zwindow)
    t = _empty(order, M)
    n = 1
    while n * (n + 1) // 2 <= order:
        sign = 1 if n % 2 else -1
        if family == "C1":
            terms = ((sign, n * (n + 1) // 2, n), (-sign, 3 * n * n + n, 2 * n))
        else:
            terms = ((sign, n * (n + 1) // 2, n), (-sign, n * n + n, 2 * n))
        for sg, lead, x in terms:
            if lead > order:
                continue
            base = np.zeros(order + 1, dtype=object)
            base[lead::x] = sg
            for m in range(0, min(M, (order - lead) // x) + 1):
                s = m * x + lead
                seg = base[lead:order + 1 - m * x]
                t[M + m, s:] += seg
                if m:
                    t[M - m, s:] += seg
        n += 1
    p2 = inverse_euler_product(2, order)
    rows = {m: qs_mul(QSeries(t[M + m]), p2) for m in range(-M, M + 1)}
    return ZQSeries.from_rows(rows)


def gen_SC5_bivariate(order: int, zwindow: int | None = None) -> ZQSeries:
    return gen_SC1_bivariate(order, zwindow, family="C5")


def gen_rank_bivariate(order: int, zwindow: int | None = None) -> ZQSeries:
    """R(z, q) = sum_{n>=0} q^{n^2} / ((zq;q)_n (q/z;q)_n)."""
    M = _window(order, zwindow)
    total = _empty(order, M)
    n = 0
    while n * n <= order:
        t = _empty(order, M)
        t[M, n * n] = 1
        for k in range(1, n + 1):
            _divide_z_geometric(t, k, 1)
            _divide_z_geometric(t, k, -1)
        total += t
        n += 1
    return ZQSeries(-M, total)


def gen_crank_bivariate(order: int, zwindow: int | None = None) -> ZQSeries:
    """C(z, q) = (q;q)_inf / ((zq;q)_inf (q/z;q)_inf)."""
    M = _window(order, zwindow)
    t = _empty(order, M)
    t[M, :] = euler_product(1, order).coeffs
    for k in range(1, order + 1):
        _divide_z_geometric(t, k, 1)
        _divide_z_geometric(t, k, -1)
    return ZQSeries(-M, t)


def prop51_numerator(order: int) -> ZQSeries:
    """R(z, q^2) - (q;q^2)_inf C(z, q), the numerator over the crank kernel."""
    half = order // 2
    rank = gen_rank_bivariate(half).map_rows(lambda r: r.dilate(2, order))
    odd = pochhammer(1, 2, "infinite", order)
    crank = gen_crank_bivariate(order).map_rows(lambda r: qs_mul(odd, r))
    return rank - crank


def prop51_SC1(order: int, max_order: int = PROP51_MAX_ORDER) -> ZQSeries:
    """S_C1(z, q) by exact division of the rank/crank numerator."""
    if order > max_order:
        raise ValueError(f"order {order} exceeds the rank/crank quotient cap {max_order}")
    return zq_divide_crank_kernel(prop51_numerator(order))


def rows_from_univariate(order: int, family: str = "C1") -> ZQSeries:
    rows = {}
    for m in range(order + 1):
        rows[m] = rows[-m] = gen_S_m(family, m, order)
    return ZQSeries.from_rows(rows)


__all__ = [
    "PROP51_MAX_ORDER",
    "gen_SC1_bivariate",
    "gen_SC5_bivariate",
    "gen_rank_bivariate",
    "gen_crank_bivariate",
    "prop51_numerator",
    "prop51_SC1",
    "rows_from_univariate",
]
