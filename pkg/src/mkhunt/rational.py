"""Exact rational <-> string conversion used at every serialization boundary."""
from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["format_rational", "parse_rational"]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_rational(x) -> str:
    """``"p/q"`` in lowest terms, or ``"p"`` for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal and exponent forms are rejected."""
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError(f"expected a 'p/q' string, got {type(text).__name__}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not an exact rational 'p/q': {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)
