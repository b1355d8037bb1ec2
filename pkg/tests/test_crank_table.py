from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sptcrank.crank_table import crank_table
from sptcrank.generating import gen_S_m, gen_spt_half, gen_spt_omega


# module-level caches so hypothesis examples do not rebuild the tables
_table = lru_cache(None)(crank_table)
_spt_omega = lru_cache(None)(gen_spt_omega)
_spt_half = lru_cache(None)(gen_spt_half)


@pytest.fixture(scope="module")
def t1():
    return _table("C1", 300)


@pytest.fixture(scope="module")
def t5():
    return _table("C5", 300)


def test_rows_match_generating_functions(t1, t5):
    for m in (0, 1, 7, 40):
        assert t1.row(m) == gen_S_m("C1", m, 300)
        assert t5.row(-m) == gen_S_m("C5", m, 300)


def test_small_values(t1):
    # N_C1(m, n) vanishes once |m| >= n
    assert t1.value(0, 0) == 0
    assert t1.value(5, 5) == 0
    assert t1.value(-5, 5) == 0
    assert t1.marginal(3) == 5


@given(st.integers(1, 300))
def test_marginals(n):
    assert _table("C1", 300).marginal(n) == _spt_omega(300)[n]
    assert _table("C5", 300).marginal(n) == _spt_omega(300)[n] - _spt_half(300)[n]


@given(st.integers(0, 59).map(lambda k: 5 * k + 3))
def test_equidistribution_mod5(n):
    sums = _table("C1", 300).class_sums(5, n)
    assert len(set(sums)) == 1


def test_class_sum_consistent(t1):
    for n in (8, 13, 101):
        assert [t1.class_sum(i, 5, n) for i in range(5)] == t1.class_sums(5, n)
        assert sum(t1.class_sums(5, n)) == t1.marginal(n)


def test_no_negative_entries(t1, t5):
    assert t1.negative_entries() == []
    assert t5.negative_entries() == []


def test_restricted_window():
    t = crank_table("C1", 50, mmax=3)
    assert t.M == 3
    assert t.value(2, 40) == gen_S_m("C1", 2, 50)[40]
    with pytest.raises(KeyError):
        t.value(10, 40)
    with pytest.raises(KeyError):
        t.marginal(40)


def test_as_zq_round_trip(t1):
    z = crank_table("C1", 40).as_zq()
    assert z.is_symmetric()
    assert z.row(3) == crank_table("C1", 40).row(3)


def test_bad_inputs():
    with pytest.raises(ValueError):
        crank_table("C2", 10)
    with pytest.raises(ValueError):
        crank_table("C1", -1)
