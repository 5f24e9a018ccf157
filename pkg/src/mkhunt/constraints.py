"""Certified constraints on singularity profiles.

Each check maps a :class:`~mkhunt.profile.SingularityProfile` to a
:class:`ConstraintVerdict` holding the exact two sides of the inequality it
tested. ``Inapplicable`` is returned whenever a hypothesis of the underlying
result fails; it never counts as an exclusion.

The orbifold BMY coefficients are always derived from the catalog at run
time. Nothing in this module hard-codes a cleared-denominator constant.
"""
from __future__ import annotations

import bisect
import enum
import functools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from . import catalog
from .catalog import InapplicableError, SingularityClass, parse_class
from .profile import (
    SingularityProfile,
    evaluate,
    total_tjurina,
)
from .rational import format_rational, parse_rational

__all__ = [
    "Status",
    "ConstraintVerdict",
    "LiteratureFact",
    "load_facts",
    "default_facts",
    "check_tjurina_max",
    "check_dpw_a1a2",
    "check_langer_bmy",
    "check_literature_facts",
    "check_irreducible_dual",
    "check_mk_a1a2_gap",
    "bmy_class_term",
    "bmy_rhs_coefficients",
    "bmy_coefficients",
    "bmy_window",
    "alpha_grid",
    "find_excluding_alpha",
    "BmySweep",
    "CONSTRAINT_ORDER",
    "DEFAULT_ALPHA_DENOM_LIMIT",
]

DEFAULT_ALPHA_DENOM_LIMIT = 100

A1 = SingularityClass("A", 1)
A2 = SingularityClass("A", 2)

CITE_TJURINA = "du Plessis-Wall: tau(C) <= 3m(m-1)+1 for ADE curves of degree 2m"
CITE_DPW_A1A2 = "du Plessis-Wall: tau(C) <= (23m^2-15m)/9 for curves with only A1, A2 points"
CITE_BMY = "Langer orbifold BMY inequality for the pair (P^2, alpha*C)"
CITE_DUAL = "dual curve degree n(n-1) - sum(mu+mult-1) is at least 4 for irreducible C, n >= 8"
CITE_GAP = "dual degree >= 4 combined with the MK equation: n2 - n1 >= 20 - n"


class Status(str, enum.Enum):
    SATISFIED = "Satisfied"
    VIOLATED = "Violated"
    INAPPLICABLE = "Inapplicable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConstraintVerdict:
    """Outcome of one constraint on one profile.

    ``relation`` is the inequality the constraint requires between ``lhs``
    and ``rhs`` (``"<="`` or ``">="``); ``Violated`` means it fails.
    """

    constraint: str
    status: Status
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    relation: Optional[str] = None
    parameters: Mapping[str, Fraction] = field(default_factory=dict)
    citation: str = ""
    reason: str = ""

    @property
    def violated(self) -> bool:
        return self.status is Status.VIOLATED

    def to_dict(self) -> dict:
        def q(x):
            return None if x is None else format_rational(x)

        return {
            "constraint": self.constraint,
            "status": self.status.value,
            "lhs": q(self.lhs),
            "rhs": q(self.rhs),
            "relation": self.relation,
            "parameters": {k: q(v) for k, v in self.parameters.items()},
            "citation": self.citation,
            "reason": self.reason,
        }


def _compare(name, lhs, rhs, relation, citation, parameters=None, reason=""):
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    ok = lhs <= rhs if relation == "<=" else lhs >= rhs
    return ConstraintVerdict(
        constraint=name,
        status=Status.SATISFIED if ok else Status.VIOLATED,
        lhs=lhs,
        rhs=rhs,
        relation=relation,
        parameters=dict(parameters or {}),
        citation=citation,
        reason=reason,
    )


def _inapplicable(name, reason, citation="", parameters=None):
    return ConstraintVerdict(
        constraint=name,
        status=Status.INAPPLICABLE,
        parameters=dict(parameters or {}),
        citation=citation,
        reason=reason,
    )


# --------------------------------------------------------------------------
# Tjurina bounds

def check_tjurina_max(p: SingularityProfile) -> ConstraintVerdict:
    name = "tjurina_max"
    if p.degree % 2:
        return _inapplicable(name, "odd degree", CITE_TJURINA)
    m = p.degree // 2
    return _compare(name, total_tjurina(p), 3 * m * (m - 1) + 1, "<=", CITE_TJURINA)


def _a1a2_only(p: SingularityProfile) -> bool:
    return all(c in (A1, A2) for c in p.counts)


def check_dpw_a1a2(p: SingularityProfile) -> ConstraintVerdict:
    name = "dpw_a1a2"
    if p.degree % 2:
        return _inapplicable(name, "odd degree", CITE_DPW_A1A2)
    if not _a1a2_only(p):
        return _inapplicable(name, "profile has classes other than A1, A2", CITE_DPW_A1A2)
    m = p.degree // 2
    bound = Fraction(23 * m * m - 15 * m, 9)
    return _compare(name, total_tjurina(p), bound, "<=", CITE_DPW_A1A2)


# --------------------------------------------------------------------------
# Dual curve constraints

def check_irreducible_dual(p: SingularityProfile) -> ConstraintVerdict:
    """Require ``sum(mu + mult - 1) <= n(n-1) - 4``, i.e. dual degree >= 4.

    Only applied to irreducible profiles of degree >= 8: the nine-cusp
    sextic is a genuine curve with dual degree 3.
    """
    name = "irreducible_dual"
    if not p.irreducible:
        return _inapplicable(name, "irreducible hypothesis not asserted", CITE_DUAL)
    n = p.degree
    if n < 8:
        return _inapplicable(name, "degree < 8", CITE_DUAL)
    drop = sum(
        k * (catalog.milnor(c) + catalog.multiplicity(c) - 1)
        for c, k in p.counts.items()
    )
    return _compare(name, drop, n * (n - 1) - 4, "<=", CITE_DUAL)


def check_mk_a1a2_gap(p: SingularityProfile) -> ConstraintVerdict:
    name = "a1a2_gap"
    n = p.degree
    if not p.irreducible:
        return _inapplicable(name, "irreducible hypothesis not asserted", CITE_GAP)
    if n < 8 or n % 2:
        return _inapplicable(name, "needs even degree >= 8", CITE_GAP)
    if not _a1a2_only(p):
        return _inapplicable(name, "profile has classes other than A1, A2", CITE_GAP)
    if not evaluate(p).is_mk:
        return _inapplicable(name, "profile is not an MK profile", CITE_GAP)
    gap = p.count_of(A2) - p.count_of(A1)
    return _compare(name, gap, 20 - n, ">=", CITE_GAP)


# --------------------------------------------------------------------------
# Literature facts

@dataclass(frozen=True)
class LiteratureFact:
    """A known impossibility at one exact degree.

    ``bounds`` maps a class to ``(min, max)`` (either may be ``None``);
    classes not listed are unconstrained unless ``exclusive`` is set, in
    which case they must be absent.

    A classification fact instead lists every MK profile that exists in
    its degree (``mk_classification``); it matches any other MK profile.
    """

    degree: int
    bounds: Mapping[SingularityClass, tuple]
    citation: str
    exclusive: bool = False
    note: str = ""
    mk_classification: Optional[tuple] = None

    def matches(self, p: SingularityProfile) -> bool:
        if p.degree != self.degree:
            return False
        if self.mk_classification is not None:
            if not evaluate(p).is_mk:
                return False
            return dict(p.counts) not in [dict(c) for c in self.mk_classification]
        if self.exclusive and any(c not in self.bounds for c in p.counts):
            return False
        for c, (lo, hi) in self.bounds.items():
            k = p.count_of(c)
            if lo is not None and k < lo:
                return False
            if hi is not None and k > hi:
                return False
        return True

    def describe(self) -> str:
        if self.mk_classification is not None:
            known = "; ".join(
                "{" + ", ".join(f"{c}:{k}" for c, k in counts) + "}"
                for counts in self.mk_classification
            )
            return f"degree {self.degree}: MK profile outside the classification ({known})"
        parts = []
        for c, (lo, hi) in self.bounds.items():
            if lo is not None and lo == hi:
                parts.append(f"#{c} = {lo}")
            else:
                if lo is not None:
                    parts.append(f"#{c} >= {lo}")
                if hi is not None:
                    parts.append(f"#{c} <= {hi}")
        if self.exclusive:
            parts.append("no other singularities")
        return f"degree {self.degree}: " + ", ".join(parts)

    @classmethod
    def from_dict(cls, record) -> "LiteratureFact":
        if not isinstance(record, Mapping):
            raise ValueError("fact must be an object")
        for key in ("degree", "citation"):
            if key not in record:
                raise ValueError(f"fact is missing {key!r}")
        if ("counts" in record) == ("mk_classification" in record):
            raise ValueError("fact needs exactly one of 'counts', 'mk_classification'")
        classification = None
        if "mk_classification" in record:
            classification = tuple(
                tuple(sorted((parse_class(n), int(k)) for n, k in entry.items()))
                for entry in record["mk_classification"]
            )
        bounds = {}
        for name, spec in record.get("counts", {}).items():
            c = parse_class(name)
            if isinstance(spec, int) and not isinstance(spec, bool):
                bounds[c] = (spec, spec)
                continue
            if not isinstance(spec, Mapping) or not set(spec) <= {"min", "max", "eq"}:
                raise ValueError(f"bad count pattern for {name}: {spec!r}")
            if "eq" in spec:
                bounds[c] = (int(spec["eq"]), int(spec["eq"]))
            else:
                lo, hi = spec.get("min"), spec.get("max")
                bounds[c] = (
                    None if lo is None else int(lo),
                    None if hi is None else int(hi),
                )
        return cls(
            degree=int(record["degree"]),
            bounds=dict(sorted(bounds.items())),
            citation=str(record["citation"]),
            exclusive=bool(record.get("exclusive", False)),
            note=str(record.get("note", "")),
            mk_classification=classification,
        )

    def to_dict(self) -> dict:
        counts = {}
        for c, (lo, hi) in self.bounds.items():
            if lo is not None and lo == hi:
                counts[c.name] = {"eq": lo}
            else:
                counts[c.name] = {
                    k: v for k, v in (("min", lo), ("max", hi)) if v is not None
                }
        out = {"degree": self.degree, "citation": self.citation}
        if self.mk_classification is not None:
            out["mk_classification"] = [
                {c.name: k for c, k in entry} for entry in self.mk_classification
            ]
        else:
            out["counts"] = counts
        if self.exclusive:
            out["exclusive"] = True
        if self.note:
            out["note"] = self.note
        return out


def load_facts(path) -> tuple:
    """Read a facts file: a JSON list of fact records."""
    text = Path(path).read_text(encoding="utf-8")
    return _facts_from_json(text)


def _facts_from_json(text) -> tuple:
    records = json.loads(text)
    if not isinstance(records, list):
        raise ValueError("facts file must hold a JSON list")
    return tuple(LiteratureFact.from_dict(r) for r in records)


def default_facts() -> tuple:
    text = resources.files("mkhunt").joinpath("data/facts.json").read_text("utf-8")
    return _facts_from_json(text)


def check_literature_facts(
    p: SingularityProfile, facts: Optional[Sequence[LiteratureFact]] = None
) -> ConstraintVerdict:
    name = "literature_facts"
    if facts is None:
        facts = default_facts()
    for fact in facts:
        if fact.matches(p):
            reason = fact.describe()
            if fact.note:
                reason += f" ({fact.note})"
            return ConstraintVerdict(
                constraint=name,
                status=Status.VIOLATED,
                citation=fact.citation,
                reason=reason,
            )
    return ConstraintVerdict(
        constraint=name, status=Status.SATISFIED, reason="no registered fact matches"
    )


# --------------------------------------------------------------------------
# Orbifold BMY

def bmy_class_term(c: SingularityClass, alpha) -> Fraction:
    """Per-point left-hand term ``3(alpha(mu-1) + 1 - e_orb(alpha))``."""
    alpha = Fraction(alpha)
    e = catalog.orbifold_euler(c, alpha)
    return 3 * (alpha * (catalog.milnor(c) - 1) + 1 - e)


def bmy_rhs_coefficients(alpha) -> tuple:
    """``(a, b)`` with right-hand side ``a*n^2 - b*n``."""
    alpha = Fraction(alpha)
    return 3 * alpha - alpha * alpha, 3 * alpha


def bmy_coefficients(alpha, classes: Iterable) -> tuple:
    """Clear denominators of the BMY inequality at ``alpha``.

    Returns ``(scale, coeffs, (a, b))``: integer per-class coefficients and
    the integer right-hand side ``a*n^2 - b*n``, all multiplied by the least
    common multiple ``scale`` of the denominators involved.
    """
    alpha = Fraction(alpha)
    classes = [parse_class(c) for c in classes]
    terms = [bmy_class_term(c, alpha) for c in classes]
    a, b = bmy_rhs_coefficients(alpha)
    scale = math.lcm(*(x.denominator for x in terms + [a, b]))
    coeffs = tuple(int(t * scale) for t in terms)
    return scale, coeffs, (int(a * scale), int(b * scale))


def bmy_window(degree: int, classes: Iterable):
    """Admissible ``alpha`` range ``(lo, lo_inclusive, hi)`` or ``None``.

    The pair must be effective (``alpha >= 3/n``) and every present class
    needs orbifold Euler data; E classes pin ``alpha`` to their threshold.
    """
    lo, lo_inc, hi = Fraction(3, degree), True, Fraction(1)
    for c in classes:
        try:
            w = catalog.eorb_window(parse_class(c))
        except InapplicableError:
            return None
        if w.lo > lo or (w.lo == lo and not w.lo_inclusive):
            lo, lo_inc = w.lo, w.lo_inclusive
        hi = min(hi, w.hi)
    if lo > hi or (lo == hi and not lo_inc):
        return None
    return lo, lo_inc, hi


def _in_window(alpha, window) -> bool:
    lo, lo_inc, hi = window
    return (alpha >= lo if lo_inc else alpha > lo) and alpha <= hi


def check_langer_bmy(p: SingularityProfile, alpha) -> ConstraintVerdict:
    name = "langer_bmy"
    alpha = Fraction(alpha)
    params = {"alpha": alpha}
    window = bmy_window(p.degree, p.counts)
    if window is None:
        missing = [
            c.name for c in p.counts if not _has_eorb(c)
        ]
        why = (
            f"no orbifold Euler data for {', '.join(missing)}"
            if missing
            else "empty admissible alpha window"
        )
        return _inapplicable(name, why, CITE_BMY, params)
    if not _in_window(alpha, window):
        lo, lo_inc, hi = window
        bracket = "[" if lo_inc else "("
        return _inapplicable(
            name,
            f"alpha={format_rational(alpha)} outside admissible window "
            f"{bracket}{format_rational(lo)}, {format_rational(hi)}]",
            CITE_BMY,
            params,
        )
    return bmy_verdict(p.degree, p.counts, alpha)


def _has_eorb(c) -> bool:
    try:
        catalog.eorb_window(c)
    except InapplicableError:
        return False
    return True


def bmy_verdict(degree: int, counts: Mapping, alpha) -> ConstraintVerdict:
    """BMY comparison for a count map whose values may be rational.

    No window check; :func:`check_langer_bmy` is the guarded entry point.
    Rational counts are used for degree-level relaxation certificates.
    """
    alpha = Fraction(alpha)
    counts = {parse_class(c): Fraction(k) for c, k in counts.items()}
    lhs = sum(
        (k * bmy_class_term(c, alpha) for c, k in counts.items()), Fraction(0)
    )
    a, b = bmy_rhs_coefficients(alpha)
    rhs = a * degree * degree - b * degree
    scale, _, _ = bmy_coefficients(alpha, [c for c, k in counts.items() if k])
    params = {"alpha": alpha, "scale": Fraction(scale)}
    return _compare("langer_bmy", lhs, rhs, "<=", CITE_BMY, params)


@functools.lru_cache(maxsize=16)
def _farey(limit: int) -> tuple:
    """Farey sequence of order ``limit`` on [0, 1], ascending."""
    a, b, c, d = 0, 1, 1, limit
    out = [Fraction(0)]
    while c <= limit:
        k = (limit + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        out.append(Fraction(a, b))
    return tuple(out)


def alpha_grid(window, denom_limit: int) -> list:
    """All rationals with denominator <= ``denom_limit`` in ``window``, ascending."""
    if denom_limit < 1:
        raise ValueError("denom_limit must be positive")
    if window is None:
        return []
    lo, lo_inc, hi = window
    seq = _farey(denom_limit)
    start = bisect.bisect_left(seq, lo) if lo_inc else bisect.bisect_right(seq, lo)
    stop = bisect.bisect_right(seq, hi)
    return list(seq[start:stop])


def find_excluding_alpha(
    p: SingularityProfile, denom_limit: int = DEFAULT_ALPHA_DENOM_LIMIT
):
    """Smallest grid ``alpha`` at which the BMY inequality fails, or ``None``.

    Returns ``(alpha, verdict)``.
    """
    window = bmy_window(p.degree, p.counts)
    for alpha in alpha_grid(window, denom_limit):
        verdict = check_langer_bmy(p, alpha)
        if verdict.violated:
            return alpha, verdict
    return None


class BmySweep:
    """Integer BMY tables for one degree and alphabet, built lazily.

    Used by the hunter to scan many count vectors over the same alpha grid.
    At every grid point the per-class coefficients are cleared to integers,
    so each comparison is an integer dot product. :meth:`first_violation`
    agrees with :func:`find_excluding_alpha` on every profile over the
    alphabet.
    """

    def __init__(self, degree: int, alphabet: Sequence, denom_limit: int):
        self.degree = degree
        self.alphabet = tuple(parse_class(c) for c in alphabet)
        self.denom_limit = denom_limit
        self._usable = tuple(_has_eorb(c) for c in self.alphabet)
        usable = [c for c, ok in zip(self.alphabet, self._usable) if ok]
        if usable:
            # Union of the per-class windows; each profile's own window is
            # enforced through the per-row membership flags.
            hi = min(max(catalog.eorb_window(c).hi for c in usable), Fraction(1))
            self.grid = alpha_grid((Fraction(3, degree), True, hi), denom_limit)
        else:
            self.grid = []
        self._rows = {}

    def _row(self, i):
        row = self._rows.get(i)
        if row is not None:
            return row
        alpha = self.grid[i]
        allowed = []
        terms = []
        for c, ok in zip(self.alphabet, self._usable):
            if ok and alpha in catalog.eorb_window(c):
                allowed.append(True)
                terms.append(bmy_class_term(c, alpha))
            else:
                allowed.append(False)
                terms.append(Fraction(0))
        a, b = bmy_rhs_coefficients(alpha)
        rhs = a * self.degree * self.degree - b * self.degree
        scale = math.lcm(*(t.denominator for t in terms + [rhs]))
        row = (
            tuple(allowed),
            tuple(int(t * scale) for t in terms),
            int(rhs * scale),
            scale,
        )
        self._rows[i] = row
        return row

    def first_violation(self, vector: Sequence[int]):
        """Smallest violating ``alpha`` for the count vector, or ``None``."""
        present = [i for i, k in enumerate(vector) if k]
        if any(not self._usable[i] for i in present):
            return None
        for j in range(len(self.grid)):
            allowed, coeffs, rhs, _ = self._row(j)
            if not all(allowed[i] for i in present):
                continue
            lhs = 0
            for i in present:
                lhs += coeffs[i] * vector[i]
            if lhs > rhs:
                return self.grid[j]
        return None

    def tightest(self, vector: Sequence[int]):
        """Grid ``alpha`` with the smallest slack ``rhs - lhs`` (first on ties)."""
        present = [i for i, k in enumerate(vector) if k]
        if any(not self._usable[i] for i in present):
            return None
        best = best_alpha = None
        for j in range(len(self.grid)):
            allowed, coeffs, rhs, scale = self._row(j)
            if not all(allowed[i] for i in present):
                continue
            slack = Fraction(rhs - sum(coeffs[i] * vector[i] for i in present), scale)
            if best is None or slack < best:
                best, best_alpha = slack, self.grid[j]
        return best_alpha


CONSTRAINT_ORDER = (
    "literature_facts",
    "tjurina_max",
    "dpw_a1a2",
    "irreducible_dual",
    "a1a2_gap",
    "langer_bmy",
)
