from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosetkit.errors import IncompatibleOffset, NotAUnit, NumericalInconsistency
from cosetkit.exactq import (
    LaurentPoly,
    QSeries,
    TwoVarSeries,
    euler_inverse,
    euler_product,
    invert_unit,
    parse_rational,
    rational_str,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def laurent(draw):
    low = draw(st.integers(-4, 4))
    return LaurentPoly(low, draw(st.lists(small, max_size=5)))


@st.composite
def qseries(draw, order=6):
    return QSeries(draw(st.lists(small, min_size=order + 1, max_size=order + 1)))


def partitions_brute(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        return 1
    return sum(partitions_brute(n - p, p) for p in range(1, min(n, largest) + 1))


def test_rational_strings():
    assert rational_str(Fraction(6, 4)) == "3/2"
    assert rational_str(Fraction(4, 2)) == "2"
    assert rational_str(Fraction(-1, 16)) == "-1/16"
    assert parse_rational("7/10") == Fraction(7, 10)


def test_laurent_normal_form():
    p = LaurentPoly(-3, [0, 0, 1, 2, 0])
    assert p.low == -1 and p.coeffs == (1, 2)
    assert LaurentPoly(5, [0, 0]).is_zero()
    assert LaurentPoly.from_dict({2: 1, -2: 1}) == LaurentPoly(-2, [1, 0, 0, 0, 1])


@given(laurent(), laurent(), laurent())
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()


@given(laurent())
def test_reflect_and_evaluate(p):
    assert p.reflect().reflect() == p
    assert p.reflect().at_one() == p.at_one()


@given(laurent())
def test_divide_by_z_minus_zinv_roundtrip(p):
    d = LaurentPoly.from_dict({1: 1, -1: -1})
    assert (p * d).divide_by_z_minus_zinv() == p


def test_divide_by_z_minus_zinv_remainder():
    with pytest.raises(NumericalInconsistency):
        LaurentPoly.constant(1).divide_by_z_minus_zinv()


def test_laurent_units():
    assert LaurentPoly.monomial(3, 2).inverse() == LaurentPoly.monomial(-3, Fraction(1, 2))
    with pytest.raises(NotAUnit):
        LaurentPoly(0, [1, 1]).inverse()


@settings(max_examples=50)
@given(qseries(), qseries(), qseries())
def test_series_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=50)
@given(qseries())
def test_inverse_of_unit(a):
    if a.coeffs[0] == 0:
        with pytest.raises(NotAUnit):
            invert_unit(a)
    else:
        prod = a * invert_unit(a)
        assert prod == QSeries.constant(1, a.order)


def test_offsets_add_under_multiplication():
    a = QSeries([1, 1], Fraction(1, 16))
    b = QSeries([1, 2], Fraction(1, 2))
    assert (a * b).offset == Fraction(9, 16)
    assert invert_unit(a).offset == Fraction(-1, 16)


def test_addition_aligns_integer_offsets():
    a = QSeries([1, 0, 0, 0], Fraction(1, 2))
    b = QSeries([5, 0, 0, 0], Fraction(5, 2))
    s = a + b
    assert s.offset == Fraction(1, 2)
    assert s.at_exponent(Fraction(5, 2)) == 5
    assert s.order == 3


def test_incompatible_offsets():
    with pytest.raises(IncompatibleOffset):
        QSeries([1, 0], 0) + QSeries([1, 0], Fraction(1, 16))


def test_zero_series_adopts_offset():
    z = QSeries.zero(3)
    a = QSeries([1, 2, 3, 4], Fraction(1, 16))
    assert (z + a) == a


def test_truncate_never_extends():
    a = QSeries([1, 2, 3])
    assert a.truncate(1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        a.truncate(5)


def test_euler_inverse_counts_partitions():
    p = euler_inverse(25)
    assert [int(c) for c in p.coeffs] == [partitions_brute(n) for n in range(26)]


def test_euler_product_pentagonal():
    # Euler: exponents k(3k-1)/2 with sign (-1)^k
    order = 40
    expected = [0] * (order + 1)
    for k in range(-10, 11):
        e = k * (3 * k - 1) // 2
        if 0 <= e <= order:
            expected[e] += (-1) ** k
    assert [int(c) for c in euler_product(order).coeffs] == expected
    assert euler_product(order) * euler_inverse(order) == QSeries.constant(1, order)


def test_two_var_promotion_and_components():
    t = TwoVarSeries([LaurentPoly.from_dict({1: 1, -1: 1}), LaurentPoly.constant(2)])
    q = QSeries([3, 1])
    prod = t * q
    assert prod.z_component(1).coeffs == (3, 1)
    assert prod.at_z_one().coeffs == (6, 8)
    assert t.reflect_z() == t
    assert prod.z_support() == [-1, 0, 1]


def test_json_is_exact():
    s = QSeries([Fraction(1, 3), 2], Fraction(1, 16))
    assert s.to_json() == {"offset": "1/16", "order": 1, "coefficients": ["1/3", "2"]}
