"""Exact verification suites over the generated series."""
from __future__ import annotations

from dataclasses import dataclass

from .bivariate import PROP51_MAX_ORDER, gen_SC1_bivariate, prop51_SC1, rows_from_univariate
from .crank_table import crank_table
from .generating import (
    gen_p_omega,
    gen_R2,
    gen_spt,
    gen_spt_half,
    gen_spt_omega,
    q_omega,
    verify_mock_identity,
)
from .oracle import DEFAULT_CAP, partition_statistics

SUITES = ("congruence", "equidistribution", "marginals", "mock-identity", "prop51", "positivity")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    first_failure: int | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" (first failure at n={self.first_failure})" if self.first_failure is not None else ""
        return f"{status} {self.name}: {self.detail}{tail}"


def _first(pred, ns):
    for n in ns:
        if not pred(n):
            return n
    return None


def check_congruence(order: int) -> CheckResult:
    s = gen_spt_omega(order)
    ns = range(3, order + 1, 5)
    bad = _first(lambda n: s[n] % 5 == 0, ns)
    return CheckResult("spt_omega(5k+3) = 0 mod 5", bad is None, f"{len(ns)} values up to n={order}", bad)


def check_equidistribution(order: int, table=None) -> CheckResult:
    t = table or crank_table("C1", order)
    ns = range(3, order + 1, 5)
    bad = _first(lambda n: len(set(t.class_sums(5, n))) == 1, ns)
    return CheckResult("N_C1(i,5,5k+3) equal for i=0..4", bad is None, f"{len(ns)} values up to n={order}", bad)


def check_marginals(order: int, t1=None, t5=None) -> list:
    t1 = t1 or crank_table("C1", order)
    t5 = t5 or crank_table("C5", order)
    so = gen_spt_omega(order)
    half = gen_spt_half(order)
    ns = range(1, order + 1)
    bad1 = _first(lambda n: t1.marginal(n) == so[n], ns)
    bad5 = _first(lambda n: t5.marginal(n) == so[n] - half[n], ns)
    return [
        CheckResult("sum_m N_C1(m,n) = spt_omega(n)", bad1 is None, f"n=1..{order}", bad1),
        CheckResult("sum_m N_C5(m,n) = spt_omega(n) - spt(n/2)", bad5 is None, f"n=1..{order}", bad5),
    ]


def check_oracle(order: int, cap: int = DEFAULT_CAP) -> list:
    """Series coefficients against brute-force enumeration for n <= order."""
    if order > cap:
        raise ValueError(f"oracle order {order} exceeds cap {cap}")
    stats = [partition_statistics(n, cap) for n in range(order + 1)]
    series = {
        "p_omega": gen_p_omega(order),
        "spt_omega": gen_spt_omega(order),
        "spt": gen_spt(order),
        "rank_moment2": gen_R2(order),
    }
    out = []
    for key, s in series.items():
        want = (lambda n: stats[n][key] // 2) if key == "rank_moment2" else (lambda n: stats[n][key])
        bad = _first(lambda n: s[n] == want(n), range(1, order + 1))
        label = "N2(n)/2" if key == "rank_moment2" else key
        out.append(CheckResult(f"{label} series = enumeration", bad is None, f"n=1..{order}", bad))
    qw = q_omega(order)
    bad = _first(lambda n: series["p_omega"][n] == qw[n], range(order + 1))
    out.append(CheckResult("p_omega series = q omega(q)", bad is None, f"n=0..{order}", bad))
    return out


def check_mock_identity(order: int) -> CheckResult:
    r = verify_mock_identity(order)
    return CheckResult("S_omega = sigma/(q^2;q^2) - R2(q^2)", r.ok, f"order {order}", r.first_mismatch)


def check_prop51(order: int) -> list:
    """Univariate rows, bivariate Lambert and rank/crank quotient of S_C1 agree."""
    if order > PROP51_MAX_ORDER:
        raise ValueError(f"prop51 is capped at order {PROP51_MAX_ORDER}")
    uni = rows_from_univariate(order)
    biv = gen_SC1_bivariate(order)
    p51 = prop51_SC1(order)  # raises NotDivisible on a nonzero remainder
    out = []
    for name, other in (("bivariate Lambert", biv), ("rank/crank quotient", p51)):
        bad = _first(lambda n: all(uni.row(m)[n] == other.row(m)[n] for m in range(-order, order + 1)),
                     range(order + 1))
        out.append(CheckResult(f"univariate rows = {name}", bad is None, f"order {order}", bad))
    return out


def check_positivity(order: int, t1=None, t5=None) -> list:
    out = []
    for fam, t in (("C1", t1), ("C5", t5)):
        t = t or crank_table(fam, order)
        neg = t.negative_entries()
        first = min((n for _, n in neg), default=None)
        out.append(CheckResult(f"N_{fam}(m,n) >= 0", not neg, f"{len(neg)} negative entries, n<={order}", first))
    return out


def run_suite(suite: str, order: int, oracle: bool = False, oracle_order: int = 60) -> list:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if suite == "congruence":
        results = [check_congruence(order)]
    elif suite == "equidistribution":
        results = [check_equidistribution(order)]
    elif suite == "marginals":
        results = check_marginals(order)
    elif suite == "mock-identity":
        results = [check_mock_identity(order)]
    elif suite == "prop51":
        results = check_prop51(order)
    else:
        results = check_positivity(order)
    if oracle:
        results += check_oracle(min(order, oracle_order))
    return results
