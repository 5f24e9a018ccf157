"""Local invariants of simple (ADE) plane-curve singularities.

Every number here is an exact :class:`fractions.Fraction` (or ``int``).
The Miyaoka-Kobayashi number splits as ``m(p)/3 = tau(p) + eps(p)`` with
``1/2 <= eps(p) < 1``; the orbifold Euler numbers are only tabulated for
A1, A2, A3 and D4 (as quadratics in the weight ``alpha``) and for E6, E7, E8
at their log canonical threshold, where they vanish.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional

__all__ = [
    "SingularityClass",
    "SingularityData",
    "EorbWindow",
    "InapplicableError",
    "UnavailableError",
    "parse_class",
    "mk_number",
    "epsilon",
    "milnor",
    "tjurina",
    "multiplicity",
    "lct",
    "lct_is_derived",
    "eorb_window",
    "orbifold_euler",
    "data",
]

_FAMILY_ORDER = {"A": 0, "D": 1, "E": 2}
_NAME_RE = re.compile(r"^([ADE])([1-9][0-9]*)$")


class InapplicableError(ValueError):
    """No orbifold Euler data is known for this (class, alpha) pair."""


class UnavailableError(LookupError):
    """The catalog carries no value for this class."""


@total_ordering
@dataclass(frozen=True)
class SingularityClass:
    """ADE type tag such as ``A1``, ``D4`` or ``E7``.

    Ordering is by family (A < D < E) and then by index, which is the order
    used for alphabets and serialized count maps.
    """

    family: str
    index: int

    def __post_init__(self):
        if self.family not in _FAMILY_ORDER:
            raise ValueError(f"unknown ADE family {self.family!r}")
        if isinstance(self.index, bool) or not isinstance(self.index, int):
            raise TypeError("index must be an int")
        if self.family == "A" and self.index < 1:
            raise ValueError(f"A_k needs k >= 1, got {self.index}")
        if self.family == "D" and self.index < 4:
            raise ValueError(f"D_k needs k >= 4, got {self.index}")
        if self.family == "E" and self.index not in (6, 7, 8):
            raise ValueError(f"E_k needs k in (6, 7, 8), got {self.index}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.index}"

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"SingularityClass({self.name!r})"

    def __lt__(self, other):
        if not isinstance(other, SingularityClass):
            return NotImplemented
        return (_FAMILY_ORDER[self.family], self.index) < (
            _FAMILY_ORDER[other.family],
            other.index,
        )

    @classmethod
    def parse(cls, name: str) -> "SingularityClass":
        return parse_class(name)


def parse_class(name) -> SingularityClass:
    """Parse ``"A17"``-style names (family letter, decimal index, no separator)."""
    if isinstance(name, SingularityClass):
        return name
    if not isinstance(name, str):
        raise TypeError(f"class name must be a string, got {type(name).__name__}")
    match = _NAME_RE.match(name.strip())
    if match is None:
        raise ValueError(f"not an ADE class name: {name!r}")
    return SingularityClass(match.group(1), int(match.group(2)))


_E_MK = {6: Fraction(167, 8), 7: Fraction(383, 16), 8: Fraction(1079, 40)}
_E_EPS = {6: Fraction(23, 24), 7: Fraction(47, 48), 8: Fraction(119, 120)}


def mk_number(c: SingularityClass) -> Fraction:
    k = c.index
    if c.family == "A":
        return 3 * (k + 1) - Fraction(3, k + 1)
    if c.family == "D":
        return 3 * (k + 1) - Fraction(3, 4 * (k - 2))
    return _E_MK[k]


def epsilon(c: SingularityClass) -> Fraction:
    """Fractional part ``m(p)/3 - tau(p)``."""
    k = c.index
    if c.family == "A":
        return Fraction(k, k + 1)
    if c.family == "D":
        return Fraction(4 * k - 9, 4 * (k - 2))
    return _E_EPS[k]


def milnor(c: SingularityClass) -> int:
    return c.index


def tjurina(c: SingularityClass) -> int:
    # ADE germs are weighted homogeneous, so tau == mu.
    return c.index


def multiplicity(c: SingularityClass) -> int:
    return 2 if c.family == "A" else 3


# Orbifold Euler data: (lo, lo_inclusive, hi, quadratic coefficients c0, c1, c2).
# hi is always the log canonical threshold and is included.
_EORB = {
    SingularityClass("A", 1): (Fraction(0), False, Fraction(1), (1, -2, 1)),
    SingularityClass("A", 2): (
        Fraction(1, 6),
        True,
        Fraction(5, 6),
        (Fraction(25, 24), Fraction(-60, 24), Fraction(36, 24)),
    ),
    SingularityClass("A", 3): (
        Fraction(1, 4),
        True,
        Fraction(3, 4),
        (Fraction(9, 8), Fraction(-24, 8), Fraction(16, 8)),
    ),
    SingularityClass("D", 4): (
        Fraction(0),
        False,
        Fraction(2, 3),
        (Fraction(4, 4), Fraction(-12, 4), Fraction(9, 4)),
    ),
}

_E_LCT = {6: Fraction(7, 12), 7: Fraction(5, 9), 8: Fraction(8, 15)}


@dataclass(frozen=True)
class EorbWindow:
    """Range of ``alpha`` where the local orbifold Euler number is known."""

    lo: Fraction
    lo_inclusive: bool
    hi: Fraction

    def __contains__(self, alpha) -> bool:
        alpha = Fraction(alpha)
        above = alpha >= self.lo if self.lo_inclusive else alpha > self.lo
        return above and alpha <= self.hi

    @property
    def is_point(self) -> bool:
        return self.lo_inclusive and self.lo == self.hi


def lct(c: SingularityClass) -> Fraction:
    """Log canonical threshold, where the orbifold Euler number reaches 0."""
    if c in _EORB:
        return _EORB[c][2]
    if c.family == "E":
        return _E_LCT[c.index]
    raise UnavailableError(f"no log canonical threshold in the catalog for {c}")


def lct_is_derived(c: SingularityClass) -> bool:
    """True for E7, whose threshold comes from its quasi-homogeneous weights."""
    return c == SingularityClass("E", 7)


def eorb_window(c: SingularityClass) -> EorbWindow:
    if c in _EORB:
        lo, inclusive, hi, _ = _EORB[c]
        return EorbWindow(lo, inclusive, hi)
    if c.family == "E":
        t = _E_LCT[c.index]
        return EorbWindow(t, True, t)
    raise InapplicableError(f"no orbifold Euler data for {c}")


def orbifold_euler(c: SingularityClass, alpha) -> Fraction:
    """Local orbifold Euler number of ``(P^2, alpha*C)`` at a point of type ``c``.

    Raises :class:`InapplicableError` outside the tabulated window; callers
    must then skip the BMY constraint rather than treat it as satisfied.
    """
    alpha = Fraction(alpha)
    window = eorb_window(c)
    if alpha not in window:
        raise InapplicableError(f"alpha={alpha} outside the e_orb window of {c}")
    if c.family == "E":
        return Fraction(0)
    c0, c1, c2 = _EORB[c][3]
    return c0 + c1 * alpha + c2 * alpha * alpha


@dataclass(frozen=True)
class SingularityData:
    milnor: int
    tjurina: int
    multiplicity: int
    mk_number: Fraction
    epsilon: Fraction
    lct: Optional[Fraction]
    eorb_window: Optional[EorbWindow]


def data(c: SingularityClass) -> SingularityData:
    """Bundle every catalog invariant of ``c``; missing entries are ``None``."""
    try:
        threshold = lct(c)
    except UnavailableError:
        threshold = None
    try:
        window = eorb_window(c)
    except InapplicableError:
        window = None
    return SingularityData(
        milnor=milnor(c),
        tjurina=tjurina(c),
        multiplicity=multiplicity(c),
        mk_number=mk_number(c),
        epsilon=epsilon(c),
        lct=threshold,
        eorb_window=window,
    )
