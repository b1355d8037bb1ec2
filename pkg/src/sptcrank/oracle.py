"""Brute-force partition enumeration, used as ground truth for the series."""
from __future__ import annotations

from collections import Counter
from typing import Iterator

DEFAULT_CAP = 70


class CapExceeded(ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"n={n} exceeds the enumeration cap {cap}; pass cap= to raise it")
        self.n = n
        self.cap = cap


def _check(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise CapExceeded(n, cap)


def enumerate_partitions(n: int, cap: int = DEFAULT_CAP) -> Iterator[tuple]:
    """Yield each partition of n once as a weakly decreasing tuple.

    Order is reverse lexicographic, starting from (n,). n = 0 yields the
    single empty partition.
    """
    _check(n, cap)
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        k = parts[-1] - 1
        parts[-1] = k
        rest = ones + 1
        while rest > k:
            parts.append(k)
            rest -= k
        if rest:
            parts.append(rest)


def _is_omega(parts: tuple) -> bool:
    s = parts[-1]
    return all(p % 2 == 0 or p < 2 * s for p in parts)


def p_omega_oracle(n: int, cap: int = DEFAULT_CAP) -> int:
    """Partitions of n whose odd parts are all below twice the smallest part."""
    _check(n, cap)
    if n == 0:
        return 0
    return sum(1 for p in enumerate_partitions(n, cap) if _is_omega(p))


def spt_omega_oracle(n: int, cap: int = DEFAULT_CAP) -> int:
    _check(n, cap)
    if n == 0:
        return 0
    return sum(p.count(p[-1]) for p in enumerate_partitions(n, cap) if _is_omega(p))


def spt_oracle(n: int, cap: int = DEFAULT_CAP) -> int:
    _check(n, cap)
    if n == 0:
        return 0
    return sum(p.count(p[-1]) for p in enumerate_partitions(n, cap))


def rank_counts(n: int, cap: int = DEFAULT_CAP) -> Counter:
    """Counter mapping rank (largest part minus number of parts) to N(m, n)."""
    _check(n, cap)
    return Counter(p[0] - len(p) if p else 0 for p in enumerate_partitions(n, cap))


def rank_count_oracle(m: int, n: int, cap: int = DEFAULT_CAP) -> int:
    return rank_counts(n, cap)[m]


def rank_moment2_oracle(n: int, cap: int = DEFAULT_CAP) -> int:
    """N_2(n) = sum over ranks m of m^2 N(m, n)."""
    return sum(m * m * c for m, c in rank_counts(n, cap).items())


def partition_statistics(n: int, cap: int = DEFAULT_CAP) -> dict:
    """All oracle quantities for n from a single enumeration pass."""
    _check(n, cap)
    out = {"p": 0, "p_omega": 0, "spt": 0, "spt_omega": 0, "rank_moment2": 0}
    if n == 0:
        out["p"] = 1
        return out
    for p in enumerate_partitions(n, cap):
        mult = p.count(p[-1])
        r = p[0] - len(p)
        out["p"] += 1
        out["spt"] += mult
        out["rank_moment2"] += r * r
        if _is_omega(p):
            out["p_omega"] += 1
            out["spt_omega"] += mult
    return out
