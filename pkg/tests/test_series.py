import numpy as np
import pytest
from hypothesis import given, strategies as st

from qparity.series import (
    OrderMismatch,
    ParitySeries,
    Series,
    add,
    coefficient,
    div_binomial,
    equal,
    first_difference,
    make,
    mul,
    mul_binomial,
    neg,
    one,
    parity_add,
    parity_div_binomial,
    parity_make,
    parity_mul,
    parity_mul_binomial,
    shift,
    sift,
    sub,
    to_parity,
    zero,
)


def naive_mul(a, b, N):
    out = [0] * (N + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b[: N + 1 - i]):
            out[i + j] += x * y
    return out


small = st.integers(-9, 9)


@st.composite
def series(draw, order=None, big=False):
    N = order if order is not None else draw(st.integers(0, 64))
    elem = st.integers(-(10**30), 10**30) if big else small
    return Series(N, draw(st.lists(elem, min_size=N + 1, max_size=N + 1)))


@st.composite
def series_pair(draw, k=2, big=False):
    N = draw(st.integers(0, 64))
    return tuple(draw(series(N, big)) for _ in range(k))


def test_make_examples():
    assert make(5, []).tolist() == [0] * 6
    assert make(5, [(0, 1)]) == one(5)
    assert make(3, [(1, 1), (3, -2)]).tolist() == [0, 1, 0, -2]
    with pytest.raises(ValueError):
        make(3, [(4, 1)])


def test_mul_examples():
    a, b = make(4, [(0, 1), (1, 1)]), make(4, [(0, 1), (1, -1)])
    assert mul(a, b).tolist() == [1, 0, -1, 0, 0]


def test_binomial_examples():
    assert mul_binomial(one(3), 1, 1).tolist() == [1, 1, 0, 0]
    assert mul_binomial(make(3, [(0, 1), (1, 1)]), -1, 1).tolist() == [1, 0, -1, 0]
    assert div_binomial(one(6), -1, 2).tolist() == [1, 0, 1, 0, 1, 0, 1]
    assert div_binomial(one(5), 1, 1).tolist() == [1, -1, 1, -1, 1, -1]


def test_binomial_rejects_bad_args():
    with pytest.raises(ValueError):
        mul_binomial(one(3), 1, 0)
    with pytest.raises(ValueError):
        div_binomial(one(3), 2, 1)


def test_inverse_partition_generating_function():
    # 1/(q;q)_inf, coefficient 5 is p(5) = 7
    s = one(10)
    for e in range(1, 11):
        s = div_binomial(s, -1, e)
    assert coefficient(s, 5) == 7
    assert s.tolist() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_coefficient_and_difference():
    assert coefficient(make(3, [(0, 1), (1, 1)]), 1) == 1
    s = make(5, [(2, 3)])
    assert first_difference(s, s) is None
    assert first_difference(one(5), make(5, [(0, 1), (3, 1)])) == 3


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        add(one(3), one(4))
    with pytest.raises(OrderMismatch):
        mul(one(3), one(4))


def test_series_is_immutable():
    s = make(3, [(1, 2)])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


def test_huge_coefficients_stay_exact():
    big = 10**40 + 7
    s = make(3, [(0, big), (1, -big)])
    assert mul(s, s).tolist() == [big * big, -2 * big * big, big * big, 0]


@given(series_pair(3))
def test_ring_axioms(abc):
    a, b, c = abc
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, neg(a)) == zero(a.order)
    assert mul(a, one(a.order)) == a
    assert sub(a, b) == add(a, neg(b))


@given(series_pair(2, big=True))
def test_mul_matches_naive_convolution(ab):
    a, b = ab
    assert mul(a, b).tolist() == naive_mul(a.tolist(), b.tolist(), a.order)


@given(series(), st.sampled_from([1, -1]), st.integers(1, 70))
def test_div_undoes_mul_binomial(s, sign, e):
    assert div_binomial(mul_binomial(s, sign, e), sign, e) == s
    assert mul_binomial(div_binomial(s, sign, e), sign, e) == s


def test_div_binomial_every_exponent():
    N = 40
    s = Series(N, [(7 * i * i - 3 * i) % 11 - 5 for i in range(N + 1)])
    for e in range(1, N + 1):
        for sign in (1, -1):
            d = div_binomial(s, sign, e)
            expect = naive_mul(d.tolist(), [1] + [0] * (e - 1) + [sign] + [0] * N, N)
            assert expect == s.tolist()


@given(series(), st.integers(0, 70))
def test_shift_matches_monomial_mul(s, k):
    assert shift(s, k) == mul(s, make(s.order, [(k, 1)] if k <= s.order else []))


@given(series_pair(2))
def test_parity_is_a_ring_homomorphism(ab):
    a, b = ab
    assert to_parity(add(a, b)) == parity_add(to_parity(a), to_parity(b))
    assert to_parity(mul(a, b)) == parity_mul(to_parity(a), to_parity(b))


@given(series(), st.sampled_from([1, -1]), st.integers(1, 70))
def test_parity_binomials_mirror_exact(s, sign, e):
    p = to_parity(s)
    assert parity_mul_binomial(p, sign, e) == to_parity(mul_binomial(s, sign, e))
    assert parity_div_binomial(p, sign, e) == to_parity(div_binomial(s, sign, e))


def test_to_parity_example():
    p = to_parity(make(2, [(0, 1), (1, 2), (2, 3)]))
    assert p.tolist() == [1, 0, 1]
    assert p.support() == [0, 2]


def test_parity_make_toggles():
    assert parity_make(5, [1, 3, 1]).support() == [3]
    with pytest.raises(ValueError):
        parity_make(5, [6])


@given(st.integers(0, 2**80), st.integers(2, 13), st.integers(0, 12))
def test_sift_picks_progression(bits, m, r):
    p = ParitySeries(80, bits)
    r %= m
    sub_ = sift(p, m, r)
    assert sub_.tolist() == p.tolist()[r::m]


def test_equal_requires_same_order():
    assert equal(one(3), one(3))
    with pytest.raises(OrderMismatch):
        equal(one(3), one(4))


def test_coeffs_are_python_ints():
    s = mul(make(4, [(1, 3)]), make(4, [(1, 5)]))
    assert s.coeffs.dtype == np.dtype(object)
    assert all(type(c) is int for c in s.tolist())
