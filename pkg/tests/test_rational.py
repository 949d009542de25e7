import math

import pytest
from hypothesis import given, strategies as st

from flownuc.errors import InputError
from flownuc.rational import (
    ZERO,
    compare,
    decimal_string,
    format_rational,
    parse_rational,
    rational,
)

nonzero = st.integers(min_value=-10**6, max_value=10**6).filter(lambda v: v != 0)
ints = st.integers(min_value=-10**6, max_value=10**6)
rationals = st.builds(rational, ints, nonzero)


def test_gcd_reduction():
    q = rational(22, 30)
    assert (q.numerator, q.denominator) == (11, 15)


def test_zero_canonical():
    q = rational(0, 7)
    assert (q.numerator, q.denominator) == (0, 1)


def test_sign_normalization():
    q = rational(3, -5)
    assert (q.numerator, q.denominator) == (-3, 5)


def test_zero_denominator_rejected():
    with pytest.raises(InputError):
        rational(1, 0)


def test_compare_examples():
    assert compare(rational(2), rational(9, 5)) == 1  # 2 - 1.8 = 0.2 > 0
    assert compare(rational(7, 3), rational(7, 3)) == 0
    assert compare(rational(-1, 3), ZERO) == -1  # 2 - 7/3 = -1/3 < 0


def test_parse_forms():
    assert parse_rational("11/15") == rational(11, 15)
    assert parse_rational("0.2") == rational(1, 5)
    assert parse_rational("-0.25") == rational(-1, 4)
    assert parse_rational(" 7 ") == rational(7)
    assert parse_rational("-3/6") == rational(-1, 2)


def test_parse_rejects_junk():
    for bad in ("", "x", "1/0", "1//2", "1.2.3"):
        with pytest.raises(InputError):
            parse_rational(bad)


def test_format_canonical():
    assert format_rational(rational(4, 1)) == "4"
    assert format_rational(rational(-3, 5)) == "-3/5"


def test_decimal_string():
    assert decimal_string(rational(1, 5), 3) == "0.200"
    assert decimal_string(rational(11, 15), 4) == "0.7333"
    assert decimal_string(rational(-1, 3), 2) == "-0.33"
    assert decimal_string(rational(5, 2), 0) == "3"  # half away from zero


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == ZERO


@given(ints, nonzero)
def test_canonical_after_arithmetic(p, q):
    value = rational(p, q) + rational(1, 3) * rational(q, 5)
    assert value.denominator > 0
    assert math.gcd(int(value.numerator), int(value.denominator)) == 1


@given(rationals)
def test_print_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q
