from collections import Counter

import pytest

from sptcrank.bivariate import (
    gen_crank_bivariate,
    gen_rank_bivariate,
    gen_SC1_bivariate,
    gen_SC5_bivariate,
    prop51_SC1,
    rows_from_univariate,
)
from sptcrank.oracle import enumerate_partitions, rank_count_oracle
from sptcrank.series import euler_product, qs_invert


def crank(parts):
    """Andrews-Garvan crank of a partition (n >= 2)."""
    ones = parts.count(1)
    if ones == 0:
        return parts[0]
    return sum(1 for p in parts if p > ones) - ones


def test_rank_rows_match_enumeration():
    order = 20
    R = gen_rank_bivariate(order)
    for n in range(1, order + 1):
        for m in range(-n, n + 1):
            assert R.row(m)[n] == rank_count_oracle(m, n)


def test_crank_rows_match_enumeration():
    order = 20
    C = gen_crank_bivariate(order)
    for n in range(2, order + 1):
        counts = Counter(crank(p) for p in enumerate_partitions(n))
        for m in range(-n, n + 1):
            assert C.row(m)[n] == counts[m]
    # the generating function's n = 1 anomaly
    assert (C.row(-1)[1], C.row(0)[1], C.row(1)[1]) == (1, -1, 1)


def test_rank_and_crank_at_z_one_give_partitions():
    order = 40
    p = qs_invert(euler_product(1, order))
    assert gen_rank_bivariate(order).at_z_one() == p
    assert gen_crank_bivariate(order).at_z_one() == p


def test_symmetry():
    assert gen_rank_bivariate(30).is_symmetric()
    assert gen_crank_bivariate(30).is_symmetric()
    assert gen_SC1_bivariate(30).is_symmetric()


@pytest.mark.parametrize("order", [0, 1, 2, 17, 60])
def test_three_constructions_agree(order):
    uni = rows_from_univariate(order)
    assert gen_SC1_bivariate(order) == uni
    assert prop51_SC1(order) == uni


def test_C5_bivariate_matches_rows():
    assert gen_SC5_bivariate(50) == rows_from_univariate(50, "C5")


def test_zwindow_validation():
    with pytest.raises(ValueError):
        gen_SC1_bivariate(10, zwindow=5)
    assert gen_SC1_bivariate(10, zwindow=14).row(3) == gen_SC1_bivariate(10).row(3)


def test_prop51_cap():
    with pytest.raises(ValueError):
        prop51_SC1(201)
