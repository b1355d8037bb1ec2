import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sptcrank.oracle import enumerate_partitions
from sptcrank.series import (
    NonUnitLeadingCoefficient,
    NotDivisible,
    QSeries,
    ZQSeries,
    euler_product,
    lambert_add,
    pochhammer,
    qs_divide,
    qs_invert,
    qs_mul,
    zq_divide_crank_kernel,
)


def naive_mul(a, b):
    n = min(len(a), len(b))
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def naive_product(exps, order):
    """prod (1 - q^e) by repeated schoolbook multiplication."""
    out = [1] + [0] * order
    for e in exps:
        factor = [0] * (order + 1)
        factor[0] = 1
        if e <= order:
            factor[e] = -1
        out = naive_mul(out, factor)
    return out


coeff = st.integers(min_value=-(10**40), max_value=10**40)
series = st.lists(coeff, min_size=1, max_size=50).map(QSeries)
unit_series = st.tuples(st.sampled_from([1, -1]), st.lists(coeff, max_size=49)).map(
    lambda t: QSeries([t[0]] + t[1])
)


class TestQSeries:
    def test_difference_of_squares(self):
        a = QSeries([1, 1], order=2)
        b = QSeries([1, -1], order=2)
        assert qs_mul(a, b).coeffs == (1, 0, -1)

    def test_identity(self):
        a = QSeries([3, -1, 4, 1, -5])
        assert qs_mul(a, QSeries.one(4)) == a

    def test_mixed_order_truncates_to_minimum(self):
        a = QSeries(range(1, 11))
        b = QSeries([1, 1, 1])
        assert (a * b).order == 2
        assert (a + b).order == 2
        assert (a - b).coeffs == (0, 1, 2)

    def test_euler_product_times_inverse(self):
        e = QSeries(naive_product(range(1, 11), 10))
        assert qs_mul(e, qs_invert(e)).coeffs == (1,) + (0,) * 10

    def test_invert_geometric(self):
        assert qs_invert(QSeries([1, -1], order=20)).coeffs == (1,) * 21

    def test_invert_rejects_non_unit(self):
        with pytest.raises(NonUnitLeadingCoefficient):
            qs_invert(QSeries([2, 1]))
        with pytest.raises(NonUnitLeadingCoefficient):
            qs_invert(QSeries([0, 1]))

    def test_invert_even_parts(self):
        inv = qs_invert(pochhammer(2, 2, "infinite", 12))
        even = sum(1 for p in enumerate_partitions(8) if all(x % 2 == 0 for x in p))
        assert even == 5
        assert inv[8] == even

    def test_shift_and_dilate(self):
        a = QSeries([1, 2, 3])
        assert a.shift(1).coeffs == (0, 1, 2)
        assert a.dilate(2).coeffs == (1, 0, 2, 0, 3, 0)
        assert a.dilate(2, 4).coeffs == (1, 0, 2, 0, 3)
        with pytest.raises(ValueError):
            a.dilate(2, 7)

    def test_truncate_cannot_extend(self):
        with pytest.raises(ValueError):
            QSeries([1, 2]).truncate(5)

    def test_large_dense_product(self):
        rng = np.random.default_rng(7)
        a = [int(x) for x in rng.integers(-(10**6), 10**6, 400)]
        b = [int(x) for x in rng.integers(-(10**6), 10**6, 400)]
        a[5] *= 10**50
        assert list(qs_mul(QSeries(a), QSeries(b)).coeffs) == naive_mul(a, b)

    def test_divide_sparse_and_dense(self):
        num = QSeries(range(1, 31))
        for den in (euler_product(2, 29), qs_invert(euler_product(1, 29))):
            assert qs_mul(qs_divide(num, den), den) == num

    @given(series, series, series)
    def test_ring_axioms(self, a, b, c):
        assert qs_mul(qs_mul(a, b), c) == qs_mul(a, qs_mul(b, c))
        assert qs_mul(a, b) == qs_mul(b, a)
        assert qs_mul(a, b + c) == qs_mul(a, b) + qs_mul(a, c)

    @given(st.lists(coeff, min_size=1, max_size=50), st.lists(coeff, min_size=1, max_size=50))
    def test_product_matches_schoolbook(self, a, b):
        assert list(qs_mul(QSeries(a), QSeries(b)).coeffs) == naive_mul(a, b)

    @given(unit_series)
    def test_inverse(self, a):
        inv = qs_invert(a)
        assert qs_mul(a, inv).coeffs == (1,) + (0,) * a.order
        assert qs_invert(inv) == a


class TestPochhammer:
    def test_odd_product(self):
        assert pochhammer(1, 2, "infinite", 4).coeffs == (1, -1, 0, -1, 1)

    def test_empty_product(self):
        assert pochhammer(1, 1, 0, 5) == QSeries.one(5)

    def test_pentagonal(self):
        e = pochhammer(1, 1, "infinite", 12)
        assert list(e.coeffs) == naive_product(range(1, 13), 12)
        support = [i for i, c in enumerate(e.coeffs) if c]
        assert support == [0, 1, 2, 5, 7, 12]
        assert e == euler_product(1, 12)

    @given(st.integers(1, 6), st.integers(1, 4), st.integers(0, 60))
    def test_infinite_equals_finite(self, start, step, order):
        count = max(0, -(-(order - start) // step) + 1)
        assert pochhammer(start, step, "infinite", order) == pochhammer(start, step, count, order)

    @given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 8), st.integers(0, 40))
    def test_against_schoolbook(self, start, step, count, order):
        exps = [start + k * step for k in range(count)]
        assert list(pochhammer(start, step, count, order).coeffs) == naive_product(exps, order)


class TestLambert:
    def test_geometric(self):
        assert lambert_add(QSeries.zero(4), 1, 1, 1).coeffs == (0, 1, 1, 1, 1)

    def test_squared(self):
        out = lambert_add(QSeries.zero(8), 1, 2, 2, 2)
        # q^2 times (1 + q^2 + q^4 + ...)^2 by hand
        assert out.coeffs == (0, 0, 1, 0, 2, 0, 3, 0, 4)

    def test_past_order_unchanged(self):
        acc = QSeries([1, 2, 3])
        assert lambert_add(acc, 1, 5, 1) is acc

    @given(st.integers(-3, 3), st.integers(0, 20), st.integers(1, 6), st.sampled_from([1, 2]))
    def test_matches_division(self, sign, e, d, p):
        order = 25
        expect = qs_mul(QSeries.monomial(e, order, sign), qs_invert(QSeries.from_sparse({0: 1, d: -1}, order)))
        if p == 2:
            expect = qs_mul(expect, qs_invert(QSeries.from_sparse({0: 1, d: -1}, order)))
        assert lambert_add(QSeries.zero(order), sign, e, d, p) == expect


class TestCrankKernel:
    def test_zero_row(self):
        z = ZQSeries(-1, np.zeros((3, 4), dtype=object))
        assert zq_divide_crank_kernel(z).row(0) == QSeries.zero(3)

    def test_kernel_itself(self):
        # (2 - z - 1/z) q
        num = ZQSeries.from_rows({-1: QSeries([0, -1]), 0: QSeries([0, 2]), 1: QSeries([0, -1])})
        out = zq_divide_crank_kernel(num)
        assert (out.zmin, out.zmax) == (0, 0)
        assert out.row(0).coeffs == (0, 1)

    def test_not_divisible_reports_q_power(self):
        num = ZQSeries.from_rows({-1: QSeries([0, 0, 1]), 0: QSeries([0, 0, 0]), 1: QSeries([0, 0, 0])})
        with pytest.raises(NotDivisible) as info:
            zq_divide_crank_kernel(num)
        assert info.value.n == 2

    @given(st.lists(st.lists(st.integers(-50, 50), min_size=4, max_size=4), min_size=1, max_size=6))
    def test_divides_products(self, qrows):
        # build (1 - z)(1 - 1/z) * F for a random F and divide back
        F = {m: QSeries(r) for m, r in enumerate(qrows)}
        top = len(qrows)
        num = {}
        for m in range(-1, top + 1):
            acc = 2 * F.get(m, QSeries.zero(3)) - F.get(m - 1, QSeries.zero(3)) - F.get(m + 1, QSeries.zero(3))
            num[m] = acc
        out = zq_divide_crank_kernel(ZQSeries.from_rows(num))
        for m in range(top):
            assert out.row(m) == F[m]


class TestZQSeries:
    def test_rows_share_order(self):
        with pytest.raises(ValueError):
            ZQSeries.from_rows({0: QSeries([1]), 1: QSeries([1, 2])})

    def test_immutable(self):
        z = ZQSeries.from_rows({0: QSeries([1, 2])})
        with pytest.raises(ValueError):
            z.table[0, 0] = 5

    def test_missing_rows_are_zero(self):
        z = ZQSeries.from_rows({0: QSeries([1, 2])})
        assert z.row(7) == QSeries.zero(1)
