"""Dense tables of N_C1(m, n) or N_C5(m, n)."""
from __future__ import annotations

from dataclasses import dataclass

from .generating import _check_family, lambert_part
from .series import QSeries, ZQSeries, inverse_euler_product, qs_mul


@dataclass(frozen=True)
class CrankTable:
    """N(m, n) for 0 <= n <= N; rows stored for m = 0..M and mirrored to -m."""

    family: str
    N: int
    rows: tuple  # rows[m] is the QSeries sum_n N(m, n) q^n

    @property
    def M(self) -> int:
        return len(self.rows) - 1

    def row(self, m: int) -> QSeries:
        m = abs(m)
        if m <= self.M:
            return self.rows[m]
        if self.M >= self.N:
            return QSeries.zero(self.N)
        raise KeyError(f"|m|={m} outside the stored window M={self.M}")

    def value(self, m: int, n: int) -> int:
        if not 0 <= n <= self.N:
            raise KeyError(f"n={n} outside 0..{self.N}")
        if abs(m) >= max(n, 1):
            return 0
        return self.row(m)[n]

    def _ms(self, n: int) -> range:
        if n - 1 > self.M:
            raise KeyError(f"n={n} needs rows up to |m|={n - 1}, table has M={self.M}")
        return range(-(n - 1), n)

    def marginal(self, n: int) -> int:
        """sum over all m of N(m, n)."""
        return sum(self.value(m, n) for m in self._ms(n))

    def class_sum(self, i: int, modulus: int, n: int) -> int:
        """N(i, modulus, n): sum of N(m, n) over m congruent to i."""
        return sum(self.value(m, n) for m in self._ms(n) if (m - i) % modulus == 0)

    def class_sums(self, modulus: int, n: int) -> list:
        sums = [0] * modulus
        for m in self._ms(n):
            sums[m % modulus] += self.value(m, n)
        return sums

    def negative_entries(self) -> list:
        """(m, n) with N(m, n) < 0 for m >= 0 (mirror entries are identical)."""
        return [(m, n) for m, r in enumerate(self.rows) for n, c in enumerate(r.coeffs) if c < 0]

    def as_zq(self) -> ZQSeries:
        rows = {}
        for m, r in enumerate(self.rows):
            rows[m] = rows[-m] = r
        return ZQSeries.from_rows(rows)


def crank_table(family: str, order: int, mmax: int | None = None) -> CrankTable:
    """Build N_{family}(m, n) for 0 <= m <= mmax (default: all m < order).

    Rows with m >= order vanish identically up to q^order and are not built.
    """
    _check_family(family)
    if order < 0:
        raise ValueError("order must be non-negative")
    if mmax is None:
        mmax = order
    p2 = inverse_euler_product(2, order)
    rows = []
    for m in range(mmax + 1):
        if m >= order:
            rows.append(QSeries.zero(order))
        else:
            rows.append(qs_mul(lambert_part(family, m, order), p2))
    return CrankTable(family, order, tuple(rows))


__all__ = ["CrankTable", "crank_table"]
