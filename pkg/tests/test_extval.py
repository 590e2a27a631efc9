from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dimstruct.extval import (
    INF, ONE, ZERO, ExtVal, ext, ext_add, ext_min, ext_mul, ext_sign, ext_sup, format_ext, parse_ext,
)

finite = st.fractions(min_value=0, max_value=100, max_denominator=50).map(ExtVal)
values = st.one_of(finite, st.just(INF))


def test_zero_is_canonical():
    assert ExtVal(Fraction(0, 7)) == ZERO
    assert ExtVal(0).is_zero and not ExtVal(0).is_positive_finite


def test_negative_rejected():
    with pytest.raises(ValueError):
        ExtVal(-1)


def test_float_rejected_except_infinity():
    assert ext(float("inf")) == INF
    with pytest.raises(TypeError):
        ext(0.5)
    with pytest.raises(TypeError):
        ext(True)


def test_zero_times_infinity_is_zero():
    assert ext_mul(ZERO, INF) == ZERO
    assert ext_mul(INF, ONE) == INF


def test_sign():
    assert [ext_sign(v) for v in (ZERO, ExtVal(Fraction(3, 4)), INF)] == [ZERO, ONE, INF]


def test_sup_of_nothing_is_zero():
    assert ext_sup([]) == ZERO
    with pytest.raises(ValueError):
        ext_min([])


@pytest.mark.parametrize("text,out", [("3/6", "1/2"), ("0", "0"), ("0/5", "0"), ("inf", "inf"), ("4", "4/1")])
def test_parse_format(text, out):
    assert format_ext(parse_ext(text)) == out


@pytest.mark.parametrize("bad", ["", "-1", "1/0", "x", "1/2/3"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_ext(bad)


@given(values, values)
def test_order_is_total_and_inf_is_top(a, b):
    assert (a <= b) or (b <= a)
    assert a <= INF and ZERO <= a


@given(values, values, values)
def test_add_monotone_and_associative(a, b, c):
    assert ext_add(ext_add(a, b), c) == ext_add(a, ext_add(b, c))
    if a <= b:
        assert ext_add(a, c) <= ext_add(b, c)


@given(values)
def test_roundtrip(a):
    assert parse_ext(format_ext(a)) == a
