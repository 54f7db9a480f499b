from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sweedler.errors import ParseError, UnsupportedField
from sweedler.fields import GF, QQ, Field, is_prime, parse_field, same_field


def test_prime_check():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    with pytest.raises(ValueError):
        Field(6)


def test_prime_field_arithmetic():
    f5 = GF(5)
    assert f5.add(3, 4) == 2
    assert f5.mul(3, 4) == 2
    assert f5.inv(3) == 2
    assert f5.neg(0) == 0
    assert list(f5.elements()) == [0, 1, 2, 3, 4]
    with pytest.raises(ZeroDivisionError):
        f5.inv(0)


def test_rational_arithmetic():
    x = QQ.coerce(Fraction(1, 3))
    assert QQ.add(x, x) == Fraction(2, 3)
    assert QQ.inv(x) == 3
    with pytest.raises(UnsupportedField):
        QQ.elements()


@pytest.mark.parametrize("token,value", [
    ("0", Fraction(0)),
    ("-7", Fraction(-7)),
    ("3/4", Fraction(3, 4)),
    ("-1/2", Fraction(-1, 2)),
])
def test_rational_parse_canonical(token, value):
    assert QQ.parse(token) == value
    assert QQ.show(value) == token


@pytest.mark.parametrize("token", ["2/4", "3/1", "4/-2", "+3", "01", "1/0", "", "a", "-0",
                                   "-0/3"])
def test_rational_parse_rejects_noncanonical(token):
    with pytest.raises(ParseError):
        QQ.parse(token)


@pytest.mark.parametrize("token", ["-1", "5", "7", "02"])
def test_prime_field_parse_rejects(token):
    with pytest.raises(ParseError):
        GF(5).parse(token)


def test_parse_field_names():
    assert parse_field("Q") == QQ
    assert parse_field("F7") == GF(7)
    with pytest.raises(ParseError):
        parse_field("F6")
    with pytest.raises(ParseError):
        parse_field("GF(2)")


def test_same_field_mismatch():
    from sweedler.errors import FieldMismatch

    with pytest.raises(FieldMismatch):
        same_field(QQ, GF(2))


@given(st.fractions())
def test_rational_token_roundtrip(x):
    assert QQ.parse(QQ.show(x)) == x


@given(st.integers(), st.integers())
def test_f7_matches_integer_arithmetic(a, b):
    f7 = GF(7)
    assert f7.add(f7.from_int(a), f7.from_int(b)) == (a + b) % 7
    assert f7.mul(f7.from_int(a), f7.from_int(b)) == (a * b) % 7
