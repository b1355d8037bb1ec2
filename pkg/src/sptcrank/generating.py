"""Univariate generating functions for p_omega, spt_omega, spt, the spt-cranks and E2/R2.

Every function returns an exact QSeries truncated at ``order``. Where two
constructions of the same series exist (Lambert form vs. product-sum form)
both are exposed so they can be checked against each other.
"""
from __future__ import annotations

from dataclasses import dataclass

from .series import (
    QSeries,
    inverse_euler_product,
    lambert_accumulate,
    qs_mul,
)

FAMILIES = ("C1", "C5")


class IntegralityViolation(ArithmeticError):
    pass


def _check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    return family


def _divide_by_one_minus(cs: list, k: int) -> None:
    """In place: cs <- cs / (1 - q^k)."""
    for i in range(k, len(cs)):
        cs[i] += cs[i - k]


# ---------------------------------------------------------------- p_omega, spt_omega


def _omega_product_sum(order: int, smallest_power: int) -> QSeries:
    # sum_{n>=1} q^n / ((1-q^n)^s (q^{n+1};q)_n (q^{2n+2};q^2)_inf)
    total = [0] * (order + 1)
    for n in range(1, order + 1):
        top = order - n  # the term starts at q^n
        cs = [0] * (top + 1)
        cs[0] = 1
        for _ in range(smallest_power):
            _divide_by_one_minus(cs, n)
        for k in range(n + 1, 2 * n + 1):
            if k > top:
                break
            _divide_by_one_minus(cs, k)
        for k in range(2 * n + 2, top + 1, 2):
            _divide_by_one_minus(cs, k)
        for i, c in enumerate(cs):
            total[n + i] += c
    return QSeries(total)


def gen_p_omega(order: int) -> QSeries:
    """sum p_omega(n) q^n via the product-sum over the smallest part."""
    return _omega_product_sum(order, 1)


def gen_omega(order: int) -> QSeries:
    """Ramanujan's third order mock theta function omega(q)."""
    total = [0] * (order + 1)
    n = 0
    while 2 * n * n + 2 * n <= order:
        cs = [0] * (order + 1)
        cs[2 * n * n + 2 * n] = 1
        for k in range(n + 1):
            _divide_by_one_minus(cs, 2 * k + 1)
            _divide_by_one_minus(cs, 2 * k + 1)
        total = [a + b for a, b in zip(total, cs)]
        n += 1
    return QSeries(total)


def gen_spt_omega(order: int) -> QSeries:
    """sum spt_omega(n) q^n from its two-Lambert-sum form over (q^2;q^2)_inf."""
    acc = [0] * (order + 1)
    for n in range(1, order + 1):
        # n q^n / (1 - q^n) contributes n at every multiple of n
        for e in range(n, order + 1, n):
            acc[e] += n
    n = 1
    while n * (3 * n + 1) <= order:
        sign = -1 if n % 2 else 1
        e = n * (3 * n + 1)
        lambert_accumulate(acc, sign, e, 2 * n, 2)
        lambert_accumulate(acc, sign, e + 2 * n, 2 * n, 2)
        n += 1
    return qs_mul(QSeries(acc), inverse_euler_product(2, order))


def gen_spt_omega_product(order: int) -> QSeries:
    """sum spt_omega(n) q^n via the product-sum with (1 - q^n)^2. Cubic cost."""
    return _omega_product_sum(order, 2)


def gen_spt(order: int) -> QSeries:
    """Classical spt(n) from sum_k q^k / ((1-q^k)^2 (q^{k+1};q)_inf).

    Uses 1/(q^{k+1};q)_inf = (q;q)_k / (q;q)_inf, so each term is
    q^k (q;q)_{k-1} / (1 - q^k) over a common 1/(q;q)_inf.
    """
    total = [0] * (order + 1)
    poch = [1] + [0] * order  # (q;q)_{k-1}
    for k in range(1, order + 1):
        term = [0] * k + poch[: order + 1 - k]
        _divide_by_one_minus(term, k)
        for i in range(k, order + 1):
            total[i] += term[i]
        for i in range(order, k - 1, -1):
            poch[i] -= poch[i - k]
    return qs_mul(QSeries(total), inverse_euler_product(1, order))


def gen_spt_half(order: int) -> QSeries:
    """sum spt(n/2) q^n, with spt(n/2) = 0 for odd n."""
    return gen_spt(order // 2).dilate(2, order)


# ---------------------------------------------------------------- spt-cranks


def _second_exponent(family: str, n: int, m: int) -> int:
    if family == "C1":
        return 3 * n * n + n + 2 * m * n
    return n * n + n + 2 * m * n


def lambert_part(family: str, m: int, order: int) -> QSeries:
    """The Lambert sum multiplying 1/(q^2;q^2)_inf in S_{family,m}."""
    _check_family(family)
    m = abs(m)
    acc = [0] * (order + 1)
    n = 1
    while n * (n + 1) // 2 + m * n <= order:
        sign = 1 if n % 2 else -1
        lambert_accumulate(acc, sign, n * (n + 1) // 2 + m * n, n, 1)
        lambert_accumulate(acc, -sign, _second_exponent(family, n, m), 2 * n, 1)
        n += 1
    return QSeries(acc)


def gen_S_m(family: str, m: int, order: int) -> QSeries:
    """sum_n N_{family}(m, n) q^n."""
    return qs_mul(lambert_part(family, m, order), inverse_euler_product(2, order))


def gen_SC1_m(m: int, order: int) -> QSeries:
    return gen_S_m("C1", m, order)


def gen_SC5_m(m: int, order: int) -> QSeries:
    return gen_S_m("C5", m, order)


def gen_SD(family: str, m: int, order: int) -> QSeries:
    """S_{family,m} - S_{family,m+1} from its theta-type difference form."""
    _check_family(family)
    if m < 0:
        raise ValueError("crank differences are defined for m >= 0")
    acc = [0] * (order + 1)
    n = 1
    while n * (n + 1) // 2 + m * n <= order:
        sign = 1 if n % 2 else -1
        acc[n * (n + 1) // 2 + m * n] += sign
        e = (n * (3 * n + 1) if family == "C1" else n * (n + 1)) + 2 * m * n
        if e <= order:
            acc[e] -= sign
        n += 1
    return qs_mul(QSeries(acc), inverse_euler_product(2, order))


def gen_SD_C1(m: int, order: int) -> QSeries:
    return gen_SD("C1", m, order)


def gen_SD_C5(m: int, order: int) -> QSeries:
    return gen_SD("C5", m, order)


# ---------------------------------------------------------------- E2, R2 and the mock identity


def sigma1_list(order: int) -> list:
    """[0, sigma_1(1), ..., sigma_1(order)] by a divisor sieve."""
    sig = [0] * (order + 1)
    for d in range(1, order + 1):
        for k in range(d, order + 1, d):
            sig[k] += d
    return sig


def gen_E2(order: int) -> QSeries:
    sig = sigma1_list(order)
    return QSeries([1] + [-24 * s for s in sig[1:]])


def gen_R2(order: int) -> QSeries:
    """sum N_2(n)/2 q^n, the halved second rank moment."""
    acc = [0] * (order + 1)
    n = 1
    while n * (3 * n + 1) // 2 <= order:
        sign = -1 if n % 2 else 1
        e = n * (3 * n + 1) // 2
        # leading minus of R2 folded into the sign
        lambert_accumulate(acc, -sign, e, n, 2)
        lambert_accumulate(acc, -sign, e + n, n, 2)
        n += 1
    out = qs_mul(QSeries(acc), inverse_euler_product(1, order))
    if any(type(c) is not int for c in out.coeffs):
        raise IntegralityViolation("R2 produced a non-integer coefficient")
    return out


@dataclass(frozen=True)
class IdentityReport:
    order: int
    ok: bool
    first_mismatch: int | None = None
    lhs: int | None = None
    rhs: int | None = None

    @classmethod
    def compare(cls, lhs: QSeries, rhs: QSeries) -> "IdentityReport":
        order = min(lhs.order, rhs.order)
        for n in range(order + 1):
            if lhs[n] != rhs[n]:
                return cls(order, False, n, lhs[n], rhs[n])
        return cls(order, True)


def mock_identity_sides(order: int) -> tuple:
    """Both sides of S_omega = sigma-part / (q^2;q^2)_inf - R2(q^2), in integers.

    The right side is (1 - E2)/24 over (q^2;q^2)_inf; the eta quotient's
    fractional q-powers cancel, leaving an integral q-series.
    """
    lhs = gen_spt_omega(order)
    e2 = gen_E2(order)
    sigma_part = QSeries([0] + [-c // 24 for c in e2.coeffs[1:]])
    if any(-c % 24 for c in e2.coeffs[1:]):
        raise IntegralityViolation("(1 - E2)/24 is not integral")
    rhs = qs_mul(sigma_part, inverse_euler_product(2, order)) - gen_R2(order // 2).dilate(2, order)
    return lhs, rhs


def verify_mock_identity(order: int) -> IdentityReport:
    lhs, rhs = mock_identity_sides(order)
    return IdentityReport.compare(lhs, rhs)


def q_omega(order: int) -> QSeries:
    """q * omega(q), which should equal gen_p_omega."""
    return gen_omega(order).shift(1)


__all__ = [
    "FAMILIES",
    "IntegralityViolation",
    "IdentityReport",
    "gen_p_omega",
    "gen_omega",
    "q_omega",
    "gen_spt_omega",
    "gen_spt_omega_product",
    "gen_spt",
    "gen_spt_half",
    "lambert_part",
    "gen_S_m",
    "gen_SC1_m",
    "gen_SC5_m",
    "gen_SD",
    "gen_SD_C1",
    "gen_SD_C5",
    "sigma1_list",
    "gen_E2",
    "gen_R2",
    "mock_identity_sides",
    "verify_mock_identity",
]
