"""Singularity profiles of plane curves and their aggregate invariants."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from . import catalog
from .catalog import SingularityClass, parse_class
from .rational import format_rational

__all__ = [
    "NotDefinedError",
    "SingularityProfile",
    "ProfileEvaluation",
    "total_mk",
    "total_tjurina",
    "total_milnor",
    "total_epsilon",
    "count",
    "mk_target",
    "evaluate",
    "freeness_defect",
    "freeness_defect_mk_form",
    "dual_degree",
    "min_singularity_bound",
]


class NotDefinedError(ValueError):
    """The invariant is not defined for this degree or hypothesis."""


@dataclass(frozen=True)
class SingularityProfile:
    """A degree together with a multiset of ADE singularities.

    ``counts`` may be given with class names or :class:`SingularityClass`
    keys; zero entries are dropped and keys are stored sorted.
    """

    degree: int
    counts: Mapping[SingularityClass, int] = field(default_factory=dict)
    irreducible: bool = False

    def __post_init__(self):
        if isinstance(self.degree, bool) or not isinstance(self.degree, int):
            raise TypeError("degree must be an int")
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        clean = {}
        for key, value in dict(self.counts).items():
            c = parse_class(key)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"count of {c} must be an int")
            if value < 0:
                raise ValueError(f"negative count for {c}")
            if c in clean:
                raise ValueError(f"duplicate class {c}")
            if value:
                clean[c] = value
        object.__setattr__(self, "counts", dict(sorted(clean.items())))
        object.__setattr__(self, "irreducible", bool(self.irreducible))
        mu = total_milnor(self)
        bound = (self.degree - 1) ** 2
        if mu > bound:
            raise ValueError(
                f"total Milnor number {mu} exceeds (n-1)^2 = {bound} for degree "
                f"{self.degree}; no reduced curve has this profile"
            )

    def __hash__(self):
        return hash((self.degree, tuple(self.counts.items()), self.irreducible))

    @property
    def classes(self) -> tuple:
        return tuple(self.counts)

    def count_of(self, c) -> int:
        return self.counts.get(parse_class(c), 0)

    def union(self, other: "SingularityProfile") -> "SingularityProfile":
        """Profile with the counts of both (same degree required)."""
        if other.degree != self.degree:
            raise ValueError("cannot merge profiles of different degree")
        merged = dict(self.counts)
        for c, k in other.counts.items():
            merged[c] = merged.get(c, 0) + k
        return SingularityProfile(
            self.degree, merged, self.irreducible and other.irreducible
        )

    def to_dict(self) -> dict:
        out = {
            "degree": self.degree,
            "singularities": {c.name: k for c, k in self.counts.items()},
        }
        if self.irreducible:
            out["irreducible"] = True
        return out

    @classmethod
    def from_dict(cls, record) -> "SingularityProfile":
        if not isinstance(record, Mapping):
            raise ValueError("profile must be a JSON object")
        unknown = set(record) - {"degree", "singularities", "irreducible"}
        if unknown:
            raise ValueError(f"unknown profile fields: {sorted(unknown)}")
        if "degree" not in record:
            raise ValueError("profile is missing 'degree'")
        degree = record["degree"]
        if isinstance(degree, bool) or not isinstance(degree, int):
            raise ValueError("'degree' must be an integer")
        sings = record.get("singularities", {})
        if not isinstance(sings, Mapping):
            raise ValueError("'singularities' must be an object of class -> count")
        for name, k in sings.items():
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise ValueError(f"count for {name!r} must be a positive integer")
        irreducible = record.get("irreducible", False)
        if not isinstance(irreducible, bool):
            raise ValueError("'irreducible' must be a boolean")
        return cls(degree, dict(sings), irreducible)

    def __str__(self):
        body = ", ".join(f"{c}:{k}" for c, k in self.counts.items())
        flag = ", irreducible" if self.irreducible else ""
        return f"deg {self.degree} {{{body}}}{flag}"


def total_mk(p: SingularityProfile) -> Fraction:
    return sum((k * catalog.mk_number(c) for c, k in p.counts.items()), Fraction(0))


def total_tjurina(p: SingularityProfile) -> int:
    return sum(k * catalog.tjurina(c) for c, k in p.counts.items())


def total_milnor(p: SingularityProfile) -> int:
    return sum(k * catalog.milnor(c) for c, k in p.counts.items())


def total_epsilon(p: SingularityProfile) -> Fraction:
    return sum((k * catalog.epsilon(c) for c, k in p.counts.items()), Fraction(0))


def count(p: SingularityProfile) -> int:
    """Number of singular points s(C)."""
    return sum(p.counts.values())


def mk_target(n: int) -> Fraction:
    """``(n/2)(5n - 6)``, the value m(C) takes on an MK-curve."""
    return Fraction(n * (5 * n - 6), 2)


def _in_mk_domain(n: int) -> bool:
    return n >= 6 and n % 2 == 0


@dataclass(frozen=True)
class ProfileEvaluation:
    degree: int
    total_mk: Fraction
    total_tjurina: int
    total_milnor: int
    total_epsilon: Fraction
    count: int
    mk_target: Optional[Fraction]
    mk_defect: Optional[Fraction]
    is_mk: Optional[bool]
    freeness_defect: Optional[int]
    dual_degree: Optional[int]
    warnings: tuple = ()

    def to_dict(self) -> dict:
        def q(x):
            return None if x is None else format_rational(x)

        return {
            "degree": self.degree,
            "total_mk": q(self.total_mk),
            "total_tjurina": self.total_tjurina,
            "total_milnor": self.total_milnor,
            "total_epsilon": q(self.total_epsilon),
            "count": self.count,
            "mk_target": q(self.mk_target),
            "mk_defect": q(self.mk_defect),
            "is_mk": "not defined" if self.is_mk is None else self.is_mk,
            "freeness_defect": self.freeness_defect,
            "dual_degree": self.dual_degree,
            "warnings": list(self.warnings),
        }


def evaluate(p: SingularityProfile) -> ProfileEvaluation:
    """Compute m(C), tau(C), eps(C), s(C) and the MK verdict.

    The MK predicate only exists for even degree >= 6; elsewhere ``is_mk``,
    ``mk_target`` and ``mk_defect`` are ``None`` and a warning is attached.
    """
    n = p.degree
    warnings = []
    m_total = total_mk(p)
    if _in_mk_domain(n):
        target = mk_target(n)
        defect = target - m_total
        is_mk = defect == 0
    else:
        target = defect = is_mk = None
        warnings.append(
            f"MK predicate is not defined for degree {n} (needs even degree >= 6)"
        )
    nu = freeness_defect(p) if n % 2 == 0 else None
    dual = None
    if p.irreducible:
        dual = dual_degree(p)
        if dual <= 0:
            warnings.append(
                f"dual degree {dual} <= 0: impossible for an irreducible curve"
            )
    return ProfileEvaluation(
        degree=n,
        total_mk=m_total,
        total_tjurina=total_tjurina(p),
        total_milnor=total_milnor(p),
        total_epsilon=total_epsilon(p),
        count=count(p),
        mk_target=target,
        mk_defect=defect,
        is_mk=is_mk,
        freeness_defect=nu,
        dual_degree=dual,
        warnings=tuple(warnings),
    )


def freeness_defect(p: SingularityProfile) -> int:
    """``nu(C) = 3m^2 - 3m + 1 - tau(C)`` for even degree ``n = 2m``.

    Valid for reduced ADE curves of even degree, where mdr(f) >= m - 1.
    """
    if p.degree % 2:
        raise NotDefinedError(f"freeness defect formula needs even degree, got {p.degree}")
    m = p.degree // 2
    return 3 * m * m - 3 * m + 1 - total_tjurina(p)


def freeness_defect_mk_form(p: SingularityProfile) -> Fraction:
    """``eps(C) + 1 - m(m+3)/3``; equals :func:`freeness_defect` on MK profiles."""
    if not _in_mk_domain(p.degree):
        raise NotDefinedError(f"needs even degree >= 6, got {p.degree}")
    m = p.degree // 2
    return total_epsilon(p) + 1 - Fraction(m * (m + 3), 3)


def dual_degree(p: SingularityProfile) -> int:
    """Degree of the dual curve, ``n(n-1) - sum(mu + mult - 1)``.

    Only meaningful for irreducible curves; the result may be <= 0 for
    profiles no irreducible curve can have.
    """
    if not p.irreducible:
        raise NotDefinedError("dual degree formula requires the irreducible flag")
    n = p.degree
    drop = sum(
        k * (catalog.milnor(c) + catalog.multiplicity(c) - 1)
        for c, k in p.counts.items()
    )
    return n * (n - 1) - drop


def min_singularity_bound(n: int, a1a2_only: bool = False) -> int:
    """Smallest admissible s(C) for an MK-curve of degree ``n``.

    The general bound is ``s > (m^2 + 3m - 3)/3``; with only A1/A2 points it
    sharpens to ``s > (7m^2 - 3m)/9``.
    """
    if n < 6 or n % 2:
        raise NotDefinedError(f"needs even degree >= 6, got {n}")
    m = n // 2
    if a1a2_only:
        bound = Fraction(7 * m * m - 3 * m, 9)
    else:
        bound = Fraction(m * m + 3 * m - 3, 3)
    return math.floor(bound) + 1
