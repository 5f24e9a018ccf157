from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mkhunt.rational import format_rational, parse_rational


@pytest.mark.parametrize(
    "text, want",
    [("3/8", Fraction(3, 8)), ("-7", Fraction(-7)), (" 6 / 4 ", Fraction(3, 2)), ("0", Fraction(0))],
)
def test_parse(text, want):
    assert parse_rational(text) == want


@pytest.mark.parametrize("text", ["0.375", "1e3", "3/0", "3/-8", "p/q", "", "1/2/3"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_rejects_floats_and_bools():
    with pytest.raises(ValueError):
        parse_rational(0.5)
    with pytest.raises(ValueError):
        parse_rational(True)


def test_format():
    assert format_rational(Fraction(2175, 16)) == "2175/16"
    assert format_rational(Fraction(136)) == "136"
    assert format_rational(Fraction(-1, 48)) == "-1/48"


@given(st.fractions())
def test_round_trip(x):
    assert parse_rational(format_rational(x)) == x
