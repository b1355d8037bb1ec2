"""Exact truncated power series in q and Laurent series in z over the integers.

Coefficients are plain Python ints. Dense products go through Kronecker
substitution (pack both operands into one big integer, multiply once with
GMP, unpack); sparse operands such as Pochhammer products take a direct
loop over their nonzero terms instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import gmpy2
import numpy as np

__all__ = [
    "QSeries",
    "ZQSeries",
    "NonUnitLeadingCoefficient",
    "NotDivisible",
    "qs_mul",
    "qs_invert",
    "qs_divide",
    "pochhammer",
    "lambert_add",
    "lambert_accumulate",
    "zq_divide_crank_kernel",
    "euler_product",
    "inverse_euler_product",
]

# Below this many nonzero terms a schoolbook loop beats packing.
_SPARSE_LIMIT = 48


class NonUnitLeadingCoefficient(ValueError):
    pass


class NotDivisible(ArithmeticError):
    def __init__(self, n: int):
        super().__init__(f"z-polynomial at q^{n} is not divisible by (1-z)(1-1/z)")
        self.n = n


@dataclass(frozen=True, eq=False)
class QSeries:
    """c_0 + c_1 q + ... + c_N q^N, known exactly up to q^N."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        cs = [int(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = cs[: order + 1] + [0] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a QSeries needs at least the q^0 coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls((1,), order)

    @classmethod
    def monomial(cls, exp: int, order: int, coeff: int = 1) -> "QSeries":
        cs = [0] * (order + 1)
        if 0 <= exp <= order:
            cs[exp] = coeff
        return cls(cs)

    @classmethod
    def from_sparse(cls, terms: dict, order: int) -> "QSeries":
        cs = [0] * (order + 1)
        for e, c in terms.items():
            if 0 <= e <= order:
                cs[e] += c
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if len(self.coeffs) > 8 else ""
        return f"QSeries([{shown}{more}], order={self.order})"

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to q^{self.order} to q^{order}")
        return QSeries(self.coeffs[: order + 1])

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order) + 1
        a, b = self.coeffs, other.coeffs
        return QSeries([a[i] + b[i] for i in range(n)])

    def __sub__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order) + 1
        a, b = self.coeffs, other.coeffs
        return QSeries([a[i] - b[i] for i in range(n)])

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        if isinstance(other, int):
            return QSeries([other * c for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k (k >= 0), keeping the same order."""
        if k < 0:
            raise ValueError("negative shifts leave the power-series ring")
        if k == 0:
            return self
        n = len(self.coeffs)
        return QSeries([0] * min(k, n) + list(self.coeffs[: max(n - k, 0)]))

    def dilate(self, k: int, order: int | None = None) -> "QSeries":
        """Substitute q -> q^k. The result is exact up to q^(k*order + k - 1)."""
        if k < 1:
            raise ValueError("dilation factor must be a positive integer")
        top = k * self.order + k - 1
        if order is None:
            order = top
        if order > top:
            raise ValueError(f"q -> q^{k} of a series of order {self.order} is only known to q^{top}")
        cs = [0] * (order + 1)
        for i in range(order // k + 1):
            cs[k * i] = self.coeffs[i]
        return QSeries(cs)

    def nonzero(self) -> list:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def evaluate(self, q: complex) -> complex:
        """Numerically evaluate the truncated polynomial at q (Horner)."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc


# ---------------------------------------------------------------- products


def _kronecker_mul(a: Sequence[int], b: Sequence[int], n: int) -> list:
    """First n coefficients of a*b via a single big-integer product."""
    a = a[:n]
    b = b[:n]
    amax = max((abs(c) for c in a), default=0)
    bmax = max((abs(c) for c in b), default=0)
    if amax == 0 or bmax == 0:
        return [0] * n
    # each product coefficient is bounded by len * amax * bmax; one sign bit
    bits = amax.bit_length() + bmax.bit_length() + min(len(a), len(b)).bit_length() + 2
    width = (bits + 7) // 8
    A = _pack(a, width)
    B = _pack(b, width)
    C = A * B
    # bias every digit by 2^(8w-1) so all digits become non-negative
    half = 1 << (8 * width - 1)
    bias = gmpy2.mpz(int.from_bytes(half.to_bytes(width, "little") * n, "little"))
    # digits at q^n and beyond are discarded, so reduce before unpacking
    low = gmpy2.f_mod_2exp(C + bias, 8 * width * n)
    raw = int(low).to_bytes(width * n, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") - half for i in range(n)]


def _pack(cs: Sequence[int], width: int):
    pos = b"".join((c if c > 0 else 0).to_bytes(width, "little") for c in cs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(width, "little") for c in cs)
    return gmpy2.mpz(int.from_bytes(pos, "little")) - gmpy2.mpz(int.from_bytes(neg, "little"))


def _sparse_mul(sparse: list, dense: Sequence[int], n: int) -> list:
    out = [0] * n
    for e, c in sparse:
        if e >= n:
            continue
        if c == 1:
            for i in range(n - e):
                out[e + i] += dense[i]
        elif c == -1:
            for i in range(n - e):
                out[e + i] -= dense[i]
        else:
            for i in range(n - e):
                out[e + i] += c * dense[i]
    return out


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated at the smaller of the two orders."""
    n = min(a.order, b.order) + 1
    sa = [t for t in a.nonzero() if t[0] < n]
    sb = [t for t in b.nonzero() if t[0] < n]
    if len(sa) <= _SPARSE_LIMIT and len(sa) <= len(sb):
        return QSeries(_sparse_mul(sa, b.coeffs, n))
    if len(sb) <= _SPARSE_LIMIT:
        return QSeries(_sparse_mul(sb, a.coeffs, n))
    return QSeries(_kronecker_mul(a.coeffs, b.coeffs, n))


def qs_invert(a: QSeries) -> QSeries:
    """Multiplicative inverse of a series with constant term +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitLeadingCoefficient(f"constant term {a0} is not a unit in Z")
    n = a.order + 1
    terms = [(e, c) for e, c in a.nonzero() if e > 0]
    if len(terms) <= 4 * _SPARSE_LIMIT:
        return QSeries(_sparse_divide([1] + [0] * (n - 1), a0, terms, n))
    # Newton iteration b <- b (2 - a b), doubling the precision each round
    b = [a0]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        ab = _kronecker_mul(a.coeffs[:prec], b + [0] * (prec - len(b)), prec)
        ab = [-c for c in ab]
        ab[0] += 2
        b = _kronecker_mul(b + [0] * (prec - len(b)), ab, prec)
    return QSeries(b)


def _sparse_divide(num: list, a0: int, terms: list, n: int) -> list:
    # solve a * out = num for out, a = a0 + sum(c q^e for e, c in terms)
    out = list(num[:n])
    for i in range(n):
        acc = out[i]
        for e, c in terms:
            if e > i:
                break
            acc -= c * out[i - e]
        out[i] = acc * a0
    return out


def qs_divide(num: QSeries, den: QSeries) -> QSeries:
    """num / den for a unit den; cheap when den is sparse."""
    d0 = den.coeffs[0]
    if d0 not in (1, -1):
        raise NonUnitLeadingCoefficient(f"constant term {d0} is not a unit in Z")
    n = min(num.order, den.order) + 1
    terms = [(e, c) for e, c in den.nonzero() if 0 < e < n]
    if len(terms) <= _SPARSE_LIMIT:
        return QSeries(_sparse_divide(list(num.coeffs), d0, terms, n))
    return qs_mul(num.truncate(n - 1), qs_invert(den.truncate(n - 1)))


def pochhammer(start_exp: int, step: int, count, order: int) -> QSeries:
    """prod_{k=0}^{count-1} (1 - q^(start_exp + k*step)) truncated at q^order.

    ``count`` may be the string ``"infinite"``; factors with exponent above
    ``order`` are then dropped since they act as 1.
    """
    if start_exp < 1 or step < 1:
        raise ValueError("start_exp and step must be positive")
    if count == "infinite":
        count = max(0, (order - start_exp) // step + 1)
    cs = [0] * (order + 1)
    cs[0] = 1
    top = 0  # highest exponent that can be nonzero so far
    for k in range(count):
        e = start_exp + k * step
        if e > order:
            break
        top = min(order, top + e)
        for i in range(top, e - 1, -1):
            cs[i] -= cs[i - e]
    return QSeries(cs)


@lru_cache(maxsize=32)
def euler_product(k: int, order: int) -> QSeries:
    """(q^k; q^k)_inf from Euler's pentagonal number theorem."""
    cs = [0] * (order + 1)
    j = 0
    while True:
        lo = k * j * (3 * j - 1) // 2
        if lo > order:
            break
        sign = -1 if j % 2 else 1
        cs[lo] += sign
        if j:
            hi = k * j * (3 * j + 1) // 2
            if hi <= order:
                cs[hi] += sign
        j += 1
    return QSeries(cs)


@lru_cache(maxsize=32)
def inverse_euler_product(k: int, order: int) -> QSeries:
    """1/(q^k; q^k)_inf."""
    return qs_invert(euler_product(k, order))


# ---------------------------------------------------------------- Lambert


def lambert_accumulate(acc: list, sign: int, num_exp: int, den_exp: int, den_power: int = 1) -> None:
    """In-place acc += sign * q^num_exp / (1 - q^den_exp)^den_power."""
    if den_exp < 1:
        raise ValueError("den_exp must be positive")
    order = len(acc) - 1
    if num_exp > order:
        return
    if den_power == 1:
        for e in range(num_exp, order + 1, den_exp):
            acc[e] += sign
    elif den_power == 2:
        w = sign
        for e in range(num_exp, order + 1, den_exp):
            acc[e] += w
            w += sign
    else:
        raise ValueError("den_power must be 1 or 2")


def lambert_add(acc: QSeries, sign: int, num_exp: int, den_exp: int, den_power: int = 1) -> QSeries:
    """acc + sign * q^num_exp / (1 - q^den_exp)^den_power."""
    if num_exp > acc.order:
        return acc
    cs = list(acc.coeffs)
    lambert_accumulate(cs, sign, num_exp, den_exp, den_power)
    return QSeries(cs)


# ---------------------------------------------------------------- bivariate


class ZQSeries:
    """Laurent polynomial in z with QSeries coefficients.

    Stored densely as an object array ``table[m - zmin, n]``; rows are
    read-only once built.
    """

    __slots__ = ("zmin", "table")

    def __init__(self, zmin: int, table):
        table = np.array(table, dtype=object)
        if table.ndim != 2 or table.shape[0] < 1 or table.shape[1] < 1:
            raise ValueError("table must be a non-empty 2-d array")
        table.setflags(write=False)
        self.zmin = int(zmin)
        self.table = table

    @classmethod
    def from_rows(cls, rows: dict) -> "ZQSeries":
        orders = {r.order for r in rows.values()}
        if len(orders) != 1:
            raise ValueError("all rows must share one truncation order")
        lo, hi = min(rows), max(rows)
        order = orders.pop()
        table = np.zeros((hi - lo + 1, order + 1), dtype=object)
        for m, r in rows.items():
            table[m - lo, :] = r.coeffs
        return cls(lo, table)

    @property
    def zmax(self) -> int:
        return self.zmin + self.table.shape[0] - 1

    @property
    def order(self) -> int:
        return self.table.shape[1] - 1

    def row(self, m: int) -> QSeries:
        if m < self.zmin or m > self.zmax:
            return QSeries.zero(self.order)
        return QSeries(self.table[m - self.zmin])

    def rows(self) -> dict:
        return {m: self.row(m) for m in range(self.zmin, self.zmax + 1)}

    def at_z_one(self) -> QSeries:
        return QSeries(self.table.sum(axis=0))

    def is_symmetric(self) -> bool:
        return all(self.row(m) == self.row(-m) for m in range(self.zmin, self.zmax + 1))

    def __sub__(self, other: "ZQSeries") -> "ZQSeries":
        order = min(self.order, other.order)
        lo, hi = min(self.zmin, other.zmin), max(self.zmax, other.zmax)
        out = np.zeros((hi - lo + 1, order + 1), dtype=object)
        out[self.zmin - lo:self.zmax - lo + 1] += self.table[:, : order + 1]
        out[other.zmin - lo:other.zmax - lo + 1] -= other.table[:, : order + 1]
        return ZQSeries(lo, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZQSeries):
            return NotImplemented
        lo, hi = min(self.zmin, other.zmin), max(self.zmax, other.zmax)
        return self.order == other.order and all(self.row(m) == other.row(m) for m in range(lo, hi + 1))

    __hash__ = None

    def map_rows(self, fn) -> "ZQSeries":
        return ZQSeries.from_rows({m: fn(r) for m, r in self.rows().items()})

    def __repr__(self) -> str:
        return f"ZQSeries(z^{self.zmin}..z^{self.zmax}, order={self.order})"


def zq_divide_crank_kernel(numerator: ZQSeries) -> ZQSeries:
    """Exact quotient by (1 - z)(1 - 1/z), one q-power at a time.

    Raises NotDivisible with the first offending q-power if any z-polynomial
    leaves a remainder.
    """
    t = numerator.table
    if t.shape[0] < 3:
        nz = [n for n in range(t.shape[1]) if any(t[:, n])]
        if nz:
            raise NotDivisible(nz[0])
        return ZQSeries(0, np.zeros((1, t.shape[1]), dtype=object))
    # P = (1 - z) Q: partial sums from the bottom, top partial sum must vanish
    s = np.cumsum(t, axis=0)
    _check_remainder(s[-1])
    s = s[:-1]
    # Q = (1 - 1/z) R: partial sums from the top, bottom partial sum must vanish
    r = np.cumsum(s[::-1], axis=0)[::-1]
    _check_remainder(r[0])
    return ZQSeries(numerator.zmin + 1, r[1:])


def _check_remainder(rem) -> None:
    for n, c in enumerate(rem):
        if c:
            raise NotDivisible(n)
