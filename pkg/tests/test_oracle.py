import pytest
from hypothesis import given
from hypothesis import strategies as st

from sptcrank.oracle import (
    CapExceeded,
    enumerate_partitions,
    p_omega_oracle,
    partition_statistics,
    rank_count_oracle,
    rank_counts,
    rank_moment2_oracle,
    spt_omega_oracle,
    spt_oracle,
)

# p(n) for n = 0..15 (standard table)
P_TABLE = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]


def test_partitions_of_four():
    parts = list(enumerate_partitions(4))
    assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_empty_partition():
    assert list(enumerate_partitions(0)) == [()]


def test_partition_counts():
    assert [sum(1 for _ in enumerate_partitions(n)) for n in range(16)] == P_TABLE


@given(st.integers(0, 18))
def test_partitions_are_valid_and_distinct(n):
    parts = list(enumerate_partitions(n))
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert sum(p) == n
        assert list(p) == sorted(p, reverse=True)
        assert all(x > 0 for x in p)


def test_small_values():
    assert [p_omega_oracle(n) for n in (1, 2, 3)] == [1, 2, 3]
    assert spt_omega_oracle(3) == 5
    assert spt_oracle(2) == 3
    assert spt_oracle(4) == 10
    assert spt_oracle(0) == 0
    assert rank_moment2_oracle(2) == 2


def test_rank_counts_of_three():
    # ranks: (3) -> 2, (2,1) -> 0, (1,1,1) -> -2
    assert rank_counts(3) == {2: 1, 0: 1, -2: 1}
    assert rank_count_oracle(0, 3) == 1
    assert rank_count_oracle(1, 3) == 0


@pytest.mark.parametrize("n", range(0, 21))
def test_rank_symmetry(n):
    c = rank_counts(n)
    assert all(c[m] == c[-m] for m in c)
    assert sum(c.values()) == P_TABLE[n] if n < len(P_TABLE) else True


def test_statistics_agree_with_single_functions():
    for n in range(1, 13):
        s = partition_statistics(n)
        assert s["p"] == sum(1 for _ in enumerate_partitions(n))
        assert s["p_omega"] == p_omega_oracle(n)
        assert s["spt"] == spt_oracle(n)
        assert s["spt_omega"] == spt_omega_oracle(n)
        assert s["rank_moment2"] == rank_moment2_oracle(n)


def test_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_partitions(71))
    with pytest.raises(CapExceeded):
        spt_oracle(12, cap=10)
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))
