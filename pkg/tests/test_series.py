import pytest
from hypothesis import assume, given, strategies as st

from scaffoldkit.errors import InsufficientPrecision
from scaffoldkit.fq import GF
from scaffoldkit.series import INF, TruncatedSeries as S, Valuation

F2, F3, F9 = GF(2), GF(3), GF(3, 2)


def series(F, lo=-4, hi=6, caps=(INF,)):
    coeffs = st.dictionaries(st.integers(lo, hi), st.integers(0, F.q - 1), max_size=6)
    return st.builds(lambda d, c: S.from_dict(F, d, c), coeffs, st.sampled_from(caps))


def test_additive_inverse_is_zero_up_to_cap():
    t = S.monomial(F3, 1, cap=9)
    z = t + (-t)
    assert not z.is_nonzero()
    assert z.val() == Valuation.AtLeast(9)


def test_characteristic_kills_doubled_terms():
    one_t = S.from_dict(F3, {0: 1, 1: 1})
    assert (one_t + S.monomial(F3, 1)).terms() == {0: 1, 1: 2}
    assert (S.from_dict(F2, {0: 1, 1: 1}) + S.monomial(F2, 1)).terms() == {0: 1}


def test_sum_takes_smaller_cap():
    a = S.from_dict(F3, {0: 1}, cap=10)
    b = S.from_dict(F3, {1: 2}, cap=5)
    assert (a + b).cap == 5


def test_product_examples():
    assert S.from_dict(F3, {1: 1, 2: 1}) * S.monomial(F3, -1) == S.from_dict(F3, {0: 1, 1: 1})
    a = S.from_dict(F3, {2: 1, 4: 2})
    b = S.from_dict(F3, {3: 2, 5: 1})
    assert (a * b).val() == Valuation.Exact(5)


def test_product_cap_degrades_with_truncated_operand():
    a = S.from_dict(F3, {0: 1}, cap=4)
    b = S.monomial(F3, 3)
    assert (a * b).cap == 7
    z = S.zero(F3, cap=4)
    assert (z * S.monomial(F3, -2)).val() == Valuation.AtLeast(2)


def test_geometric_series_inverse():
    inv = S.from_dict(F3, {0: 1, 1: 1}).inverse(prec=8)
    assert inv.cap == 8
    assert inv.terms() == {k: (-1) ** k % 3 for k in range(8)}


def test_monomial_inverse_is_exact():
    assert S.monomial(F3, 2).inverse().identical(S.monomial(F3, -2))


def test_inverse_errors():
    with pytest.raises(InsufficientPrecision):
        S.zero(F3, cap=5).inverse()
    with pytest.raises(InsufficientPrecision):
        S.from_dict(F3, {0: 1, 1: 1}).inverse()


def test_valuation_examples():
    assert S.from_dict(F3, {3: 1, 5: 1}).val() == Valuation.Exact(3)
    assert S.zero(F3, cap=7).val() == Valuation.AtLeast(7)
    assert S.zero(F3).val().is_zero
    unit = S.from_dict(F3, {0: 2, 1: 1, 4: 1})
    assert (S.monomial(F3, 5) * unit).val() == Valuation.Exact(5)


def test_coefficient_beyond_cap_refused():
    a = S.from_dict(F3, {0: 1}, cap=3)
    assert a.coefficient(2) == 0
    with pytest.raises(InsufficientPrecision):
        a.coefficient(3)


@given(series(F9, caps=(INF, 6, 9)))
def test_storage_invariants(a):
    if a.is_nonzero():
        assert a.coeffs[0] != 0
        assert a.coeffs[-1] != 0
        assert a.end <= a.cap
        assert a.val() == Valuation.Exact(a.start)
    else:
        assert a.val() == Valuation.AtLeast(a.cap)


@given(series(F9), series(F9), series(F9))
def test_exact_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@given(series(F9, caps=(INF, 5, 8)), series(F9, caps=(INF, 5, 8)))
def test_valuation_additive(a, b):
    assume(a.is_nonzero() and b.is_nonzero())
    prod = a * b
    assert prod.val() == Valuation.Exact(a.start + b.start)
    assert prod.cap == min(a.cap + b.start, b.cap + a.start)


@given(series(F9, caps=(INF, 7)))
def test_inverse_roundtrip(a):
    assume(a.is_nonzero())
    inv = a.inverse(prec=10)
    prod = a * inv
    assert prod.val() == Valuation.Exact(0)
    assert prod == S.one(F9)
    assert prod.cap > 0


@given(series(F9), series(F9))
def test_frobenius_is_ring_map(a, b):
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()
    assert (a * b).frobenius() == a.frobenius() * b.frobenius()
    assert a.frobenius() == a ** 3


@given(series(F3, caps=(INF, 4)), st.integers(-5, 5))
def test_shift_moves_valuation_and_cap(a, k):
    b = a.shift(k)
    assert b.cap == a.cap + k
    assert b.val() == a.val() + k
