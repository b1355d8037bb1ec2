"""Acceptance gate: one test per criterion, each logging a PASS/FAIL line.

The lines are printed in an "acceptance criteria" section at the end of the
pytest run (see conftest.py).
"""
import math
import time

import pytest

from sptcrank.analytic import (
    HParams,
    away_band,
    away_verdict,
    check_away,
    check_pole_minus_one,
    check_pole_one,
    mittag_leffler_check,
)
from sptcrank.asymptotics import bessel_I, ratio_scan, sign_scan, wright_check, wright_P
from sptcrank.bivariate import gen_SC1_bivariate, prop51_SC1, rows_from_univariate
from sptcrank.crank_table import crank_table
from sptcrank.generating import gen_spt_half, gen_spt_omega, verify_mock_identity
from sptcrank.oracle import partition_statistics, spt_oracle
from sptcrank.verify import check_oracle

# Empirical n0 of the sign scans (N = 2000) for m = 0..4, recorded on first run.
RECORDED_N0 = {"C1": [7, 4, 7, 8, 11], "C5": [7, 5, 5, 8, 9]}
YS = [2.0**-k for k in range(4, 11)]


def record(log, number, ok, detail):
    log.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {detail}")
    assert ok, detail


def test_c01_congruence(acceptance_log):
    t0 = time.perf_counter()
    s = gen_spt_omega(2000)
    bad = [n for n in range(3, 2001, 5) if s[n] % 5]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    record(acceptance_log, 1, ok,
           f"spt_omega(5k+3) = 0 mod 5 for all 400 n <= 2000 ({elapsed:.2f}s, bad={bad[:3]})")


def test_c02_equidistribution(acceptance_log, table_c1_2000):
    bad = [n for n in range(3, 1001, 5) if len(set(table_c1_2000.class_sums(5, n))) != 1]
    record(acceptance_log, 2, not bad, f"N_C1(i,5,5k+3) equal for i=0..4, all 200 n <= 1000 (bad={bad[:3]})")


def test_c03_oracle(acceptance_log):
    t0 = time.perf_counter()
    results = check_oracle(60)
    elapsed = time.perf_counter() - t0
    failed = [r.line() for r in results if not r.ok]
    ok = not failed and elapsed < 300
    record(acceptance_log, 3, ok,
           f"p_omega, spt_omega, spt, N2/2 equal enumeration for n <= 60 ({elapsed:.1f}s) {failed}")


def test_c04_marginals(acceptance_log, table_c1_2000, table_c5_2000):
    so = gen_spt_omega(1000)
    half = gen_spt_half(1000)
    bad1 = [n for n in range(1, 1001) if table_c1_2000.marginal(n) != so[n]]
    bad5 = [n for n in range(1, 1001) if table_c5_2000.marginal(n) != so[n] - half[n]]
    # the second spt build against enumeration
    bad_half = [n for n in range(0, 60, 2) if half[n] != spt_oracle(n // 2)]
    bad_half += [n for n in range(1, 60, 2) if half[n] != 0]
    ok = not (bad1 or bad5 or bad_half)
    record(acceptance_log, 4, ok,
           f"C1 and C5 marginals for n <= 1000; spt(n/2) vs oracle below 60 "
           f"(bad C1={bad1[:3]}, C5={bad5[:3]}, spt={bad_half[:3]})")


def test_c05_triple_construction(acceptance_log):
    uni = rows_from_univariate(200)
    biv = gen_SC1_bivariate(200)
    p51 = prop51_SC1(200)  # NotDivisible would signal a nonzero remainder
    ok = uni == biv and uni == p51
    record(acceptance_log, 5, ok,
           "univariate, bivariate Lambert and rank/crank quotient of S_C1 agree to order 200, zero remainders")


def test_c06_mock_identity(acceptance_log):
    r = verify_mock_identity(500)
    record(acceptance_log, 6, r.ok and r.order == 500,
           f"mock-modularity identity to order 500 (first mismatch {r.first_mismatch})")


def test_c07_asymptotic_convergence(acceptance_log):
    grid = [500, 1000, 2000, 4000]
    lines, ok = [], True
    for fam in ("C1", "C5"):
        table = crank_table(fam, 4001, mmax=2)
        for m in (0, 1, 2):
            rep = ratio_scan(fam, m, grid, table)
            dev = rep.deviations()
            good = dev[-1] < dev[0] and rep.verdict == "converging"
            ok &= good
            lines.append(f"{fam} m={m} |r-1| {dev[0]:.4f}->{dev[-1]:.4f}")
    record(acceptance_log, 7, ok, "ratio to main term converging at n=500..4000: " + "; ".join(lines))


def test_c08_sign_pattern(acceptance_log):
    found = {fam: [sign_scan(fam, m, 2000) for m in range(5)] for fam in ("C1", "C5")}
    again = {fam: [sign_scan(fam, m, 2000) for m in range(5)] for fam in ("C1", "C5")}
    n0 = {fam: [s.n0 for s in found[fam]] for fam in found}
    holds = all(s.holds for scans in found.values() for s in scans)
    ok = holds and found == again and n0 == RECORDED_N0
    record(acceptance_log, 8, ok, f"sign pattern holds on [n0, 2000] for m=0..4, n0={n0}, reproducible")


def test_c09_positivity(acceptance_log, table_c1_2000, table_c5_2000):
    neg1 = table_c1_2000.negative_entries()
    neg5 = table_c5_2000.negative_entries()
    record(acceptance_log, 9, not neg1 and not neg5,
           f"no negative N_C1/N_C5 entries for n <= 2000 ({len(neg1)}, {len(neg5)} found)")


def test_c10_pole_lemmas(acceptance_log):
    parts, ok = [], True
    for p in (HParams(0.5, 1.5), HParams(1.5, 0.5)):
        for check, label in ((check_pole_one, "+1"), (check_pole_minus_one, "-1")):
            t = check(p, YS)
            # main terms grow like 1/y; residual * y must decrease
            grows = all(b > a for a, b in zip(t.main_terms, t.main_terms[1:]))
            good = t.verdict == "bounded" and grows
            ok &= good
            parts.append(f"({p.A},{p.B}) at {label}: max residual {max(t.residuals):.3f} <= {t.bound}")
    reports = [check_away(HParams(0.5, 1.5), y, away_band(y)) for y in YS]
    verdict = away_verdict(reports)
    ok &= verdict == "bounded"
    parts.append(f"away band max |h| y^1.5 = {max(r.max_scaled for r in reports):.4f}")
    record(acceptance_log, 10, ok, "; ".join(parts))


def test_c11_wright(acceptance_log):
    us = [5, 10, 15, 20]
    # literal pairing P_{-1/2} with I_{-3/2}, and the lemma's own order -s-1
    literal = []
    for u in us:
        literal.append(abs(wright_P(-0.5, u) - bessel_I(-1.5, 2 * u)) * math.exp(-2 * u))
    literal_dec = all(b < a for a, b in zip(literal, literal[1:]))
    lemma_dec = wright_check(-0.5, us).decreasing and wright_check(0.5, us).decreasing
    a = wright_P(-0.5, 10, steps=4000)
    b = wright_P(-0.5, 10, steps=8000)
    rel = abs(a - b) / abs(b)
    ok = literal_dec and lemma_dec and rel < 1e-6
    record(acceptance_log, 11, ok,
           f"scaled Wright gaps decrease over u=5..20 (I_-3/2 and I_-s-1), step doubling rel change {rel:.1e}")


def test_c12_mittag_leffler(acceptance_log):
    gaps = {w: (mittag_leffler_check(w, 1000).gap, mittag_leffler_check(w, 10**4).gap)
            for w in (1j, 0.5 + 1j, 0.3 + 0.7j)}
    decreasing = all(g2 < g1 for g1, g2 in gaps.values())
    half = mittag_leffler_check(0.5, 10**4)
    close = abs(half.partial_rhs - 0.5j) < 1e-6
    detail = ", ".join(f"w={w}: {g1:.1e}->{g2:.1e}" for w, (g1, g2) in gaps.items())
    record(acceptance_log, 12, decreasing and close,
           f"partial fraction gaps shrink K=1e3->1e4 ({detail}); w=1/2 off i/2 by {abs(half.partial_rhs - 0.5j):.1e}")
