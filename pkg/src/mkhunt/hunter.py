"""Enumerate candidate MK profiles in a fixed degree and filter them.

A hunt solves ``sum_t m(t) * c_t = (n/2)(5n - 6)`` in non-negative integers
over an alphabet of singularity classes. Denominators are cleared first,
and the search is limited by the total Tjurina bound ``tau <= 3m(m-1) + 1``.
Every solution then goes through the constraint pipeline in
:data:`~mkhunt.constraints.CONSTRAINT_ORDER`.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import catalog
from .catalog import SingularityClass, parse_class
from .constraints import (
    CONSTRAINT_ORDER,
    DEFAULT_ALPHA_DENOM_LIMIT,
    BmySweep,
    ConstraintVerdict,
    Status,
    alpha_grid,
    bmy_coefficients,
    bmy_verdict,
    bmy_window,
    check_dpw_a1a2,
    check_irreducible_dual,
    check_langer_bmy,
    check_literature_facts,
    check_mk_a1a2_gap,
    check_tjurina_max,
    default_facts,
)
from .profile import SingularityProfile, evaluate, mk_target
from .rational import format_rational

__all__ = [
    "HuntRequest",
    "ScaledEquation",
    "SolutionOutcome",
    "HuntReport",
    "scaled_equation",
    "enumerate_solutions",
    "hunt",
    "hunt_summary",
    "render_summary",
    "solve_line_arrangement",
    "bmy_degree_threshold",
]


@dataclass(frozen=True)
class HuntRequest:
    degree: int
    alphabet: tuple
    irreducible: bool = False
    alpha_denom_limit: int = DEFAULT_ALPHA_DENOM_LIMIT
    enabled_constraints: frozenset = frozenset(CONSTRAINT_ORDER)

    def __post_init__(self):
        if isinstance(self.degree, bool) or not isinstance(self.degree, int):
            raise TypeError("degree must be an int")
        if self.degree < 6 or self.degree % 2:
            raise ValueError(f"hunts need even degree >= 6, got {self.degree}")
        alphabet = tuple(parse_class(c) for c in self.alphabet)
        if not alphabet:
            raise ValueError("alphabet must not be empty")
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet has duplicate classes")
        object.__setattr__(self, "alphabet", alphabet)
        if self.alpha_denom_limit < 1:
            raise ValueError("alpha_denom_limit must be positive")
        enabled = frozenset(self.enabled_constraints)
        unknown = enabled - set(CONSTRAINT_ORDER)
        if unknown:
            raise ValueError(f"unknown constraints: {sorted(unknown)}")
        object.__setattr__(self, "enabled_constraints", enabled)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "alphabet": [c.name for c in self.alphabet],
            "irreducible": self.irreducible,
            "alpha_denom_limit": self.alpha_denom_limit,
            "enabled_constraints": [
                name for name in CONSTRAINT_ORDER if name in self.enabled_constraints
            ],
        }

    @classmethod
    def from_dict(cls, record) -> "HuntRequest":
        return cls(
            degree=record["degree"],
            alphabet=tuple(record["alphabet"]),
            irreducible=record.get("irreducible", False),
            alpha_denom_limit=record.get("alpha_denom_limit", DEFAULT_ALPHA_DENOM_LIMIT),
            enabled_constraints=frozenset(
                record.get("enabled_constraints", CONSTRAINT_ORDER)
            ),
        )


@dataclass(frozen=True)
class ScaledEquation:
    """``sum coeffs[i] * c_i = rhs`` with ``sum taus[i] * c_i <= tau_budget``."""

    scale: int
    coeffs: tuple
    rhs: int
    taus: tuple
    tau_budget: int

    def describe(self, alphabet) -> str:
        terms = " + ".join(f"{a}*#{c}" for a, c in zip(self.coeffs, alphabet))
        return f"{terms} = {self.rhs}"


def scaled_equation(degree: int, alphabet: Sequence) -> ScaledEquation:
    alphabet = [parse_class(c) for c in alphabet]
    mks = [catalog.mk_number(c) for c in alphabet]
    target = mk_target(degree)
    scale = math.lcm(*(x.denominator for x in mks + [target]))
    m = degree // 2
    return ScaledEquation(
        scale=scale,
        coeffs=tuple(int(x * scale) for x in mks),
        rhs=int(target * scale),
        taus=tuple(catalog.tjurina(c) for c in alphabet),
        tau_budget=3 * m * (m - 1) + 1,
    )


def _leading_bound(eq: ScaledEquation) -> int:
    return min(eq.rhs // eq.coeffs[0], eq.tau_budget // eq.taus[0])


def _solutions_with_leading(eq: ScaledEquation, first: int) -> list:
    """All solutions whose first count equals ``first``, lexicographically."""
    coeffs, taus = eq.coeffs, eq.taus
    last = len(coeffs) - 1
    out = []
    prefix = [first]

    def rec(i, rem, budget):
        if i == last:
            if rem % coeffs[i] == 0:
                k = rem // coeffs[i]
                if k * taus[i] <= budget:
                    out.append(tuple(prefix) + (k,))
            return
        top = min(rem // coeffs[i], budget // taus[i])
        for k in range(top + 1):
            prefix.append(k)
            rec(i + 1, rem - k * coeffs[i], budget - k * taus[i])
            prefix.pop()

    rem = eq.rhs - first * coeffs[0]
    budget = eq.tau_budget - first * taus[0]
    if rem < 0 or budget < 0:
        return out
    if last == 0:
        if rem == 0:
            out.append((first,))
        return out
    rec(1, rem, budget)
    return out


def enumerate_solutions(degree: int, alphabet: Sequence, workers: int = 1) -> list:
    """Non-negative integer solutions of the MK equation under the tau bound.

    Per-class upper bounds are ``min(rhs / coeff, budget / tau)`` on what is
    left at each level, which can never cut a genuine solution. With
    ``workers > 1`` the leading-count range is split across processes; the
    merged list is identical to the sequential one.
    """
    eq = scaled_equation(degree, alphabet)
    leading = range(_leading_bound(eq) + 1)
    if workers > 1 and len(leading) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_solutions_with_leading, [eq] * len(leading), leading))
    else:
        chunks = [_solutions_with_leading(eq, k) for k in leading]
    return [s for chunk in chunks for s in chunk]


@dataclass(frozen=True)
class SolutionOutcome:
    counts: tuple
    profile: SingularityProfile
    verdicts: tuple
    eliminator: Optional[int]

    @property
    def survived(self) -> bool:
        return self.eliminator is None

    @property
    def eliminating_verdict(self) -> Optional[ConstraintVerdict]:
        return None if self.eliminator is None else self.verdicts[self.eliminator]

    def to_dict(self) -> dict:
        return {
            "counts": list(self.counts),
            "profile": self.profile.to_dict(),
            "verdicts": [v.to_dict() for v in self.verdicts],
            "eliminator": self.eliminator,
        }


@dataclass(frozen=True)
class HuntReport:
    request: HuntRequest
    equation: ScaledEquation
    raw_solutions: tuple
    outcomes: tuple
    obstruction: Optional[dict] = None
    relaxation: Optional[dict] = None
    facts_used: int = 0

    @property
    def survivors(self) -> tuple:
        return tuple(o.counts for o in self.outcomes if o.survived)

    @property
    def eliminated(self) -> tuple:
        return tuple(o.counts for o in self.outcomes if not o.survived)

    @property
    def degree_eliminator(self) -> Optional[str]:
        """What rules out the whole degree, or ``None`` if candidates survive.

        For a single-class alphabet a BMY violation of the rational MK count
        excludes the degree regardless of integrality and takes precedence.
        """
        if self.survivors:
            return None
        rel = self.relaxation
        if rel is not None and rel["bmy"] is not None and rel["bmy"].violated:
            return "langer_bmy"
        if not self.raw_solutions:
            return self.obstruction["kind"]
        return "per_solution"

    def to_dict(self) -> dict:
        out = {
            "request": self.request.to_dict(),
            "equation": {
                "scale": self.equation.scale,
                "coefficients": list(self.equation.coeffs),
                "rhs": self.equation.rhs,
                "tjurina_coefficients": list(self.equation.taus),
                "tjurina_budget": self.equation.tau_budget,
            },
            "raw_solutions": [list(s) for s in self.raw_solutions],
            "outcomes": [o.to_dict() for o in self.outcomes],
            "survivors": [list(s) for s in self.survivors],
            "obstruction": self.obstruction,
            "relaxation": None,
            "degree_eliminator": self.degree_eliminator,
        }
        if self.relaxation is not None:
            rel = dict(self.relaxation)
            rel["count"] = format_rational(rel["count"])
            for key in ("bmy", "tjurina"):
                if rel[key] is not None:
                    rel[key] = rel[key].to_dict()
            if rel.get("threshold") is not None:
                rel["threshold"] = _threshold_to_dict(rel["threshold"])
            out["relaxation"] = rel
        return out


_WORKER_STATE = None


def _init_worker(order, facts, sweep):
    global _WORKER_STATE
    _WORKER_STATE = (order, facts, sweep)


def _run_pipeline_in_worker(profile):
    return _run_pipeline((profile,) + _WORKER_STATE)


def _run_pipeline(args):
    profile, order, facts, sweep = args
    verdicts = []
    for name in order:
        if name == "literature_facts":
            v = check_literature_facts(profile, facts)
        elif name == "tjurina_max":
            v = check_tjurina_max(profile)
        elif name == "dpw_a1a2":
            v = check_dpw_a1a2(profile)
        elif name == "irreducible_dual":
            v = check_irreducible_dual(profile)
        elif name == "a1a2_gap":
            v = check_mk_a1a2_gap(profile)
        else:
            v = _bmy_sweep_verdict(profile, sweep)
        verdicts.append(v)
    eliminator = next((i for i, v in enumerate(verdicts) if v.violated), None)
    return tuple(verdicts), eliminator


def _bmy_sweep_verdict(profile: SingularityProfile, sweep: BmySweep) -> ConstraintVerdict:
    vector = tuple(profile.count_of(c) for c in sweep.alphabet)
    alpha = sweep.first_violation(vector)
    if alpha is not None:
        return _with_alphabet_scale(check_langer_bmy(profile, alpha), sweep.alphabet)
    best_alpha = sweep.tightest(vector)
    if best_alpha is None:
        # Reuse the guarded check for its reason text.
        probe = check_langer_bmy(profile, Fraction(3, profile.degree))
        if probe.status is Status.INAPPLICABLE:
            return probe
        return ConstraintVerdict(
            constraint="langer_bmy",
            status=Status.INAPPLICABLE,
            citation=probe.citation,
            reason=f"no alpha with denominator <= {sweep.denom_limit} in the window",
        )
    # Nothing violated: report the tightest grid point.
    best = _with_alphabet_scale(check_langer_bmy(profile, best_alpha), sweep.alphabet)
    return ConstraintVerdict(
        constraint=best.constraint,
        status=best.status,
        lhs=best.lhs,
        rhs=best.rhs,
        relation=best.relation,
        parameters=dict(best.parameters),
        citation=best.citation,
        reason="no violation on the alpha grid; tightest point shown",
    )


def _with_alphabet_scale(v: ConstraintVerdict, alphabet) -> ConstraintVerdict:
    """Report the denominator-clearing scale of the whole alphabet at alpha.

    Keeps scaled totals of different solutions in one hunt comparable.
    """
    alpha = v.parameters["alpha"]
    usable = [
        c for c in alphabet
        if _has_eorb_at(c, alpha)
    ]
    scale, _, _ = bmy_coefficients(alpha, usable)
    params = dict(v.parameters)
    params["scale"] = Fraction(scale)
    return ConstraintVerdict(
        constraint=v.constraint,
        status=v.status,
        lhs=v.lhs,
        rhs=v.rhs,
        relation=v.relation,
        parameters=params,
        citation=v.citation,
        reason=v.reason,
    )


def _has_eorb_at(c, alpha) -> bool:
    try:
        catalog.orbifold_euler(c, alpha)
    except catalog.InapplicableError:
        return False
    return True


def _obstruction(eq: ScaledEquation, alphabet) -> dict:
    g = math.gcd(*eq.coeffs)
    equation = eq.describe(alphabet)
    if eq.rhs % g:
        return {
            "kind": "integrality",
            "modulus": g,
            "residue": eq.rhs % g,
            "equation": equation,
            "detail": f"left side is 0 mod {g}, right side is {eq.rhs % g} mod {g}",
        }
    # Any solution at all once the Tjurina budget is lifted?
    unbounded = ScaledEquation(
        eq.scale, eq.coeffs, eq.rhs, tuple(1 for _ in eq.coeffs), eq.rhs
    )
    if any(_solutions_with_leading(unbounded, k) for k in range(_leading_bound(unbounded) + 1)):
        return {
            "kind": "tjurina_max",
            "modulus": None,
            "residue": None,
            "equation": equation,
            "detail": f"every solution has total Tjurina number > {eq.tau_budget}",
        }
    return {
        "kind": "integrality",
        "modulus": None,
        "residue": None,
        "equation": equation,
        "detail": "no non-negative integer solution",
    }


def bmy_degree_threshold(c, alpha=None) -> dict:
    """Compare the MK count with the BMY bound as quadratics in ``m = n/2``.

    For a single class ``c`` the MK equation forces ``#c = q2*m^2 + q1*m`` and
    the BMY inequality at ``alpha`` (default: the log canonical threshold)
    caps it at ``b2*m^2 + b1*m``. The BMY inequality fails exactly when
    ``(q2 - b2)*m + (q1 - b1) > 0``; the returned record gives the
    coefficients and the resulting range of excluded ``m``.
    """
    c = parse_class(c)
    alpha = catalog.lct(c) if alpha is None else Fraction(alpha)
    mk = catalog.mk_number(c)
    q2, q1 = Fraction(10) / mk, Fraction(-6) / mk
    term = 3 * (alpha * (catalog.milnor(c) - 1) + 1 - catalog.orbifold_euler(c, alpha))
    a, b = 3 * alpha - alpha * alpha, 3 * alpha
    b2, b1 = 4 * a / term, -2 * b / term
    lead, lin = q2 - b2, q1 - b1
    if lead > 0:
        if lin >= 0:
            excluded = "all m > 0"
        else:
            excluded = f"m > {format_rational(-lin / lead)}"
        boundary = None if lin >= 0 else -lin / lead
    elif lead < 0:
        boundary = lin / -lead if lin > 0 else None
        excluded = f"m < {format_rational(boundary)}" if boundary else "none"
    else:
        boundary = None
        excluded = "all m > 0" if lin > 0 else "none"
    return {
        "class": c,
        "alpha": alpha,
        "mk_quadratic": (q2, q1),
        "bmy_quadratic": (b2, b1),
        "leading_difference": lead,
        "linear_difference": lin,
        "boundary": boundary,
        "excluded": excluded,
    }


def _threshold_to_dict(t: dict) -> dict:
    return {
        "class": t["class"].name,
        "alpha": format_rational(t["alpha"]),
        "mk_quadratic": [format_rational(x) for x in t["mk_quadratic"]],
        "bmy_quadratic": [format_rational(x) for x in t["bmy_quadratic"]],
        "leading_difference": format_rational(t["leading_difference"]),
        "linear_difference": format_rational(t["linear_difference"]),
        "boundary": None if t["boundary"] is None else format_rational(t["boundary"]),
        "excluded": t["excluded"],
    }


def _relaxation(req: HuntRequest) -> Optional[dict]:
    """Degree-level certificate for one-class alphabets.

    The MK equation pins the count to ``target / m(c)``, possibly fractional.
    The BMY inequality is linear in the count, so a violation at this
    rational value excludes the degree whether or not it is an integer.
    """
    if len(req.alphabet) != 1 or "langer_bmy" not in req.enabled_constraints:
        return None
    (c,) = req.alphabet
    n = req.degree
    value = mk_target(n) / catalog.mk_number(c)
    m = n // 2
    tau = value * catalog.tjurina(c)
    budget = 3 * m * (m - 1) + 1
    tjurina = ConstraintVerdict(
        constraint="tjurina_max",
        status=Status.SATISFIED if tau <= budget else Status.VIOLATED,
        lhs=tau,
        rhs=Fraction(budget),
        relation="<=",
    )
    bmy = None
    grid = alpha_grid(bmy_window(n, [c]), req.alpha_denom_limit)
    tightest = None
    for alpha in grid:
        v = bmy_verdict(n, {c: value}, alpha)
        if v.violated:
            bmy = v
            break
        if tightest is None or v.rhs - v.lhs < tightest.rhs - tightest.lhs:
            tightest = v
    if bmy is None:
        bmy = tightest
    threshold = None
    try:
        threshold = bmy_degree_threshold(c)
    except (catalog.UnavailableError, catalog.InapplicableError):
        pass
    return {
        "class": c.name,
        "count": value,
        "integral": value.denominator == 1,
        "tjurina": tjurina,
        "bmy": bmy,
        "threshold": threshold,
    }


def hunt(
    req: HuntRequest,
    facts=None,
    workers: int = 1,
) -> HuntReport:
    """Enumerate MK solutions for ``req`` and run the constraint pipeline.

    Constraints run in the fixed order literature facts, Tjurina maximum,
    du Plessis-Wall A1/A2 bound, dual degree, A1/A2 gap, BMY alpha sweep. All
    verdicts are kept; the first violation is the eliminator. The survivor set
    does not depend on the order.
    """
    if facts is None:
        facts = default_facts()
    facts = tuple(facts)
    eq = scaled_equation(req.degree, req.alphabet)
    raw = enumerate_solutions(req.degree, req.alphabet, workers=workers)
    order = tuple(name for name in CONSTRAINT_ORDER if name in req.enabled_constraints)
    sweep = BmySweep(req.degree, req.alphabet, req.alpha_denom_limit)
    profiles = [
        SingularityProfile(req.degree, dict(zip(req.alphabet, s)), req.irreducible)
        for s in raw
    ]
    if workers > 1 and len(profiles) > 1:
        # Shared state goes to each worker once, not once per profile.
        chunk = -(-len(profiles) // (4 * workers))
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_init_worker,
            initargs=(order, facts, BmySweep(req.degree, req.alphabet, req.alpha_denom_limit)),
        ) as pool:
            results = list(pool.map(_run_pipeline_in_worker, profiles, chunksize=chunk))
    else:
        results = [_run_pipeline((p, order, facts, sweep)) for p in profiles]
    outcomes = tuple(
        SolutionOutcome(tuple(s), p, verdicts, elim)
        for s, p, (verdicts, elim) in zip(raw, profiles, results)
    )
    return HuntReport(
        request=req,
        equation=eq,
        raw_solutions=tuple(tuple(s) for s in raw),
        outcomes=outcomes,
        obstruction=None if raw else _obstruction(eq, req.alphabet),
        relaxation=_relaxation(req),
        facts_used=len(facts),
    )


def hunt_summary(report: HuntReport) -> dict:
    """Condensed, stably ordered view of a report: one row per solution."""
    rows = []
    for o in report.outcomes:
        row = {
            "counts": {c.name: k for c, k in zip(report.request.alphabet, o.counts)},
            "status": "eliminated" if not o.survived else "candidate",
        }
        v = o.eliminating_verdict
        if v is None:
            row["note"] = "candidate - not excluded by implemented constraints"
            row["is_mk"] = evaluate(o.profile).is_mk
        else:
            row["eliminator"] = v.constraint
            row["lhs"] = None if v.lhs is None else format_rational(v.lhs)
            row["rhs"] = None if v.rhs is None else format_rational(v.rhs)
            row["relation"] = v.relation
            row["parameters"] = {k: format_rational(x) for k, x in v.parameters.items()}
            if "scale" in v.parameters:
                s = v.parameters["scale"]
                row["scaled_lhs"] = format_rational(v.lhs * s)
                row["scaled_rhs"] = format_rational(v.rhs * s)
            row["citation"] = v.citation
            row["reason"] = v.reason
        rows.append(row)
    summary = {
        "degree": report.request.degree,
        "alphabet": [c.name for c in report.request.alphabet],
        "irreducible": report.request.irreducible,
        "equation": report.equation.describe(report.request.alphabet),
        "raw_count": len(report.raw_solutions),
        "survivor_count": len(report.survivors),
        "rows": rows,
        "degree_eliminator": report.degree_eliminator,
    }
    if not report.raw_solutions:
        summary["obstruction"] = report.obstruction
    if report.relaxation is not None:
        rel = report.relaxation
        summary["relaxation"] = {
            "class": rel["class"],
            "count": format_rational(rel["count"]),
            "integral": rel["integral"],
            "bmy": None if rel["bmy"] is None else rel["bmy"].to_dict(),
        }
        if rel["threshold"] is not None:
            summary["relaxation"]["threshold"] = _threshold_to_dict(rel["threshold"])
    return summary


def render_summary(report: HuntReport) -> str:
    """Human-readable table of :func:`hunt_summary`."""
    s = hunt_summary(report)
    lines = [
        f"degree {s['degree']} over {','.join(s['alphabet'])}"
        + (" (irreducible)" if s["irreducible"] else ""),
        f"  equation: {s['equation']}",
        f"  raw solutions: {s['raw_count']}, survivors: {s['survivor_count']}",
    ]
    for row in s["rows"]:
        counts = ", ".join(f"{k}:{v}" for k, v in row["counts"].items())
        if row["status"] == "candidate":
            lines.append(f"  ({counts})  {row['note']}")
            continue
        detail = row["eliminator"]
        if row.get("lhs") is not None:
            cmp_ = ">" if row["relation"] == "<=" else "<"
            detail += f": {row['lhs']} {cmp_} {row['rhs']}"
        if "alpha" in row.get("parameters", {}):
            detail += f" at alpha={row['parameters']['alpha']}"
        if row.get("scaled_lhs") is not None:
            detail += f" (scaled: {row['scaled_lhs']} vs {row['scaled_rhs']})"
        if row["reason"] and row["lhs"] is None:
            detail += f" [{row['reason']}]"
        lines.append(f"  ({counts})  eliminated by {detail}; {row['citation']}")
    if "obstruction" in s:
        ob = s["obstruction"]
        lines.append(f"  no raw solutions ({ob['kind']}): {ob['detail']}")
    if "relaxation" in s:
        rel = s["relaxation"]
        line = f"  relaxed count #{rel['class']} = {rel['count']}"
        if rel["bmy"] is not None:
            b = rel["bmy"]
            line += (
                f"; BMY at alpha={b['parameters']['alpha']}: {b['status']}"
                f" ({b['lhs']} vs {b['rhs']})"
            )
        lines.append(line)
        if "threshold" in rel:
            t = rel["threshold"]
            lines.append(
                f"  MK count {t['mk_quadratic'][0]} m^2 + ({t['mk_quadratic'][1]}) m vs "
                f"BMY bound {t['bmy_quadratic'][0]} m^2 + ({t['bmy_quadratic'][1]}) m;"
                f" BMY excludes {t['excluded']}"
            )
    if s["degree_eliminator"]:
        lines.append(f"  degree excluded by: {s['degree_eliminator']}")
    return "\n".join(lines)


def solve_line_arrangement(m: int):
    """Double/triple point counts of an MK arrangement of ``2m`` lines.

    Solves ``n2 + 3 n3 = m(2m-1)`` together with the MK equation
    ``(3/2) n2 + (39/8) n3 = m(10m-6)/3``; returns ``(n2, n3)`` only when both
    are non-negative integers.
    """
    if m < 3:
        raise ValueError("need at least 6 lines (m >= 3)")
    a11, a12, b1 = Fraction(1), Fraction(3), Fraction(m * (2 * m - 1))
    a21, a22, b2 = Fraction(3, 2), Fraction(39, 8), Fraction(m * (10 * m - 6), 3)
    det = a11 * a22 - a12 * a21
    n2 = (b1 * a22 - a12 * b2) / det
    n3 = (a11 * b2 - a21 * b1) / det
    if n2.denominator != 1 or n3.denominator != 1 or n2 < 0 or n3 < 0:
        return None
    return int(n2), int(n3)
