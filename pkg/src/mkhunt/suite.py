"""Reproduction suite: every published number this package can recompute.

Each check returns a :class:`CheckResult`; :func:`run_suite` runs them in a
fixed order. The output is deterministic (no timings, no hashes of memory
addresses), so two runs serialize to identical JSON.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import catalog, gallery
from .catalog import SingularityClass, parse_class
from .constraints import (
    CONSTRAINT_ORDER,
    DEFAULT_ALPHA_DENOM_LIMIT,
    Status,
    bmy_coefficients,
    check_langer_bmy,
    default_facts,
)
from .hunter import (
    HuntRequest,
    bmy_degree_threshold,
    enumerate_solutions,
    hunt,
    solve_line_arrangement,
)
from .oracle import brute_force_solutions
from .profile import (
    SingularityProfile,
    evaluate,
    freeness_defect,
    freeness_defect_mk_form,
    min_singularity_bound,
)
from .rational import format_rational

__all__ = ["CheckResult", "CHECKS", "CHECK_IDS", "run_check", "run_suite", "suite_json"]


@dataclass
class CheckResult:
    id: str
    title: str
    passed: bool
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "passed": self.passed,
            "failures": list(self.failures),
            "details": self.details,
        }


class _Recorder:
    def __init__(self):
        self.failures = []

    def expect(self, cond, message):
        if not cond:
            self.failures.append(message)
        return cond

    def equal(self, got, want, what):
        return self.expect(got == want, f"{what}: got {_show(got)}, want {_show(want)}")


def _show(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    return repr(x)


def _q(x):
    return format_rational(x)


# --------------------------------------------------------------------------

def check_catalog(ctx) -> dict:
    r = _Recorder()
    classes = (
        [SingularityClass("A", k) for k in range(1, 51)]
        + [SingularityClass("D", k) for k in range(4, 51)]
        + [SingularityClass("E", k) for k in (6, 7, 8)]
    )
    for c in classes:
        m, eps = catalog.mk_number(c), catalog.epsilon(c)
        r.equal(m / 3, catalog.tjurina(c) + eps, f"m/3 = tau + eps for {c}")
        r.expect(Fraction(1, 2) <= eps < 1, f"1/2 <= eps < 1 for {c}: eps={_q(eps)}")
    spot = {
        "E6": Fraction(167, 8),
        "E7": Fraction(383, 16),
        "E8": Fraction(1079, 40),
    }
    for name, want in spot.items():
        r.equal(catalog.mk_number(parse_class(name)), want, f"m({name})")
    r.equal(catalog.epsilon(parse_class("E8")), Fraction(119, 120), "eps(E8)")
    return {"classes_checked": len(classes)}, r


def check_mk_sextics(ctx) -> dict:
    r = _Recorder()
    details = {}
    for counts in ({"A2": 9}, {"A1": 6, "A3": 4}, {"A1": 3, "D4": 4}):
        ev = evaluate(SingularityProfile(6, counts))
        key = ",".join(f"{k}:{v}" for k, v in counts.items())
        details[key] = _q(ev.total_mk)
        r.equal(ev.total_mk, Fraction(72), f"m(C) for {key}")
        r.equal(ev.is_mk, True, f"is_mk for {key}")
    return details, r


def check_steiner(ctx) -> dict:
    r = _Recorder()
    ev = evaluate(gallery.get_entry("steiner_octic").profile)
    r.equal(ev.total_mk, Fraction(2175, 16), "m(SQ)")
    r.equal(ev.mk_defect, Fraction(1, 16), "mk_defect(SQ)")
    r.equal(ev.is_mk, False, "is_mk(SQ)")
    return {"total_mk": _q(ev.total_mk), "mk_defect": _q(ev.mk_defect)}, r


def check_octic_hunt(ctx) -> dict:
    r = _Recorder()
    report = hunt(
        HuntRequest(8, ("A1", "A2", "A3", "D4"), alpha_denom_limit=ctx["denom"]),
        facts=ctx["facts"],
        workers=ctx["workers"],
    )
    want = [
        (0, 17, 0, 0), (1, 8, 6, 0), (2, 8, 3, 2), (3, 8, 0, 4),
        (6, 8, 4, 0), (7, 8, 1, 2), (11, 8, 2, 0), (16, 8, 0, 0),
    ]
    r.equal(list(report.raw_solutions), want, "octic raw solutions")
    r.equal(report.survivors, (), "octic survivors")
    by_counts = {o.counts: o for o in report.outcomes}
    rows = {}
    a = by_counts.get((0, 17, 0, 0))
    if a is not None:
        r.equal(a.eliminating_verdict.constraint, "literature_facts", "case a eliminator")
        rows["a"] = "literature_facts"
    scaled = {
        "d": ((3, 8, 0, 4), 13856),
        "e": ((6, 8, 4, 0), 13832),
        "f": ((7, 8, 1, 2), 13886),
        "g": ((11, 8, 2, 0), 13916),
        "h": ((16, 8, 0, 0), 14000),
    }
    for label, (counts, total) in scaled.items():
        o = by_counts.get(counts)
        if o is None:
            continue
        v = o.eliminating_verdict
        r.equal(v.constraint, "langer_bmy", f"case {label} eliminator")
        r.equal(v.parameters.get("alpha"), Fraction(3, 8), f"case {label} alpha")
        r.equal(v.lhs * 256, total, f"case {label} scaled lhs")
        r.equal(v.rhs * 256, 13824, f"case {label} scaled rhs")
        rows[label] = f"alpha=3/8: {v.lhs * 256} > {v.rhs * 256}"
    for label, counts in (("b", (1, 8, 6, 0)), ("c", (2, 8, 3, 2))):
        o = by_counts.get(counts)
        if o is None:
            continue
        v = o.eliminating_verdict
        ok = r.expect(
            v is not None and v.constraint == "langer_bmy",
            f"case {label} must be eliminated by the alpha sweep",
        )
        if ok:
            rows[label] = f"alpha={_q(v.parameters['alpha'])}: {_q(v.lhs)} > {_q(v.rhs)}"
    return {"raw": len(report.raw_solutions), "eliminators": rows}, r


def check_bmy_coefficients(ctx) -> dict:
    r = _Recorder()
    alpha4 = ("A1", "A2", "A3", "D4")
    cases = [
        (Fraction(3, 8), alpha4, (468, 814, 1128, 1485), (252, 288)),
        (Fraction(12, 25), alpha4, (10944, 19391, 27213, 35424), (6048, 7200)),
        (Fraction(1, 4), ("A1", "A2"), (42, 71), (22, 24)),
        (Fraction(11, 20), alpha4, (3828, 6862, 9696, 12573), (2156, 2640)),
    ]
    details = {}
    for alpha, classes, coeffs, rhs in cases:
        _, got_coeffs, got_rhs = bmy_coefficients(alpha, classes)
        r.equal(got_coeffs, coeffs, f"coefficients at alpha={_q(alpha)}")
        r.equal(got_rhs, rhs, f"rhs at alpha={_q(alpha)}")
        details[_q(alpha)] = {"coefficients": list(got_coeffs), "rhs": list(got_rhs)}
    # Case (b) at alpha = 11/20: derived A1 coefficient 3828 excludes it,
    # the printed 3228 would not.
    n = 8
    b = (1, 8, 6, 0)
    rhs_b = 2156 * n * n - 2640 * n
    for a1, should_exclude in ((3828, True), (3228, False)):
        lhs_b = a1 * b[0] + 6862 * b[1] + 9696 * b[2] + 12573 * b[3]
        r.equal(lhs_b > rhs_b, should_exclude, f"case b with A1 coefficient {a1}")
        details[f"case_b_with_{a1}"] = f"{lhs_b} vs {rhs_b}"
    v = check_langer_bmy(SingularityProfile(8, dict(zip(alpha4, b))), Fraction(11, 20))
    r.equal(v.status, Status.VIOLATED, "engine verdict for case b at alpha=11/20")
    return details, r


def check_degree10_mod9(ctx) -> dict:
    r = _Recorder()
    report = hunt(
        HuntRequest(10, ("A1", "A3", "D4"), alpha_denom_limit=ctx["denom"]),
        facts=ctx["facts"],
    )
    r.equal(report.raw_solutions, (), "raw solutions")
    r.equal(report.equation.coeffs, (36, 90, 117), "scaled coefficients")
    r.equal(report.equation.rhs, 1760, "scaled right side")
    ob = report.obstruction or {}
    r.equal(ob.get("kind"), "integrality", "obstruction kind")
    r.equal(ob.get("modulus"), 9, "witness modulus")
    r.equal(ob.get("residue"), 1760 % 9, "witness residue")
    return {"obstruction": ob}, r


def check_irreducible_a1a2(ctx) -> dict:
    r = _Recorder()
    details = {}
    for n in (8, 10, 12):
        report = hunt(
            HuntRequest(n, ("A1", "A2"), irreducible=True, alpha_denom_limit=ctx["denom"]),
            facts=ctx["facts"],
            workers=ctx["workers"],
        )
        r.equal(report.survivors, (), f"survivors at n={n}")
        details[str(n)] = {
            ",".join(map(str, o.counts)): o.eliminating_verdict.constraint
            for o in report.outcomes
            if o.eliminating_verdict is not None
        }
        if n != 12:
            continue
        by_counts = {o.counts: o for o in report.outcomes}
        r.equal(
            sorted(by_counts),
            [(8, 36), (24, 27), (40, 18), (56, 9), (72, 0)],
            "degree-12 branches",
        )
        v = by_counts[(8, 36)].eliminating_verdict if (8, 36) in by_counts else None
        if r.expect(v is not None, "branch (8,36) eliminated"):
            r.equal(v.constraint, "langer_bmy", "branch (8,36) eliminator")
            r.equal(v.parameters.get("alpha"), Fraction(1, 4), "branch (8,36) alpha")
            r.equal((v.lhs * 32, v.rhs * 32), (2892, 2880), "branch (8,36) scaled sides")
        for counts in ((24, 27), (40, 18), (56, 9), (72, 0)):
            o = by_counts.get(counts)
            if o is None:
                continue
            v = o.eliminating_verdict
            r.equal(v.constraint, "irreducible_dual", f"branch {counts} eliminator")
            r.equal(v.rhs, 128, f"branch {counts} dual rhs")
    return details, r


def _sweep(ctx, cls, degrees, r, expect_eliminator=None):
    out = {}
    for n in degrees:
        report = hunt(
            HuntRequest(n, (cls,), alpha_denom_limit=ctx["denom"]), facts=ctx["facts"]
        )
        r.equal(report.survivors, (), f"{cls} survivors at n={n}")
        out[str(n)] = report.degree_eliminator
        if expect_eliminator is not None:
            want = expect_eliminator(n)
            if want is not None:
                r.equal(report.degree_eliminator, want, f"{cls} eliminator at n={n}")
    return out


def check_nodal_cuspidal(ctx) -> dict:
    r = _Recorder()
    degrees = range(8, 41, 2)
    details = {
        "A1": _sweep(ctx, "A1", degrees, r),
        "A2": _sweep(ctx, "A2", degrees, r),
    }
    return details, r


def check_e6(ctx) -> dict:
    r = _Recorder()
    details = {"sweep": _sweep(ctx, "E6", range(6, 25, 2), r)}
    t = bmy_degree_threshold("E6")
    r.equal(t["alpha"], Fraction(7, 12), "E6 alpha")
    r.equal(t["boundary"], Fraction(738, 61), "E6 degree threshold m >= 738/61")
    r.expect(t["leading_difference"] < 0, "E6 leading difference negative")
    n = 18
    bound = Fraction(203, 1692) * n * n - Fraction(7, 47) * n
    b2, b1 = t["bmy_quadratic"]
    m = n // 2
    r.equal(b2 * m * m + b1 * m, bound, "E6 BMY bound at n=18")
    r.equal(int(bound), 36, "E6 bound floor at n=18")
    c18 = gallery.get_entry("bonnafe_C18").profile
    v = check_langer_bmy(c18, Fraction(7, 12))
    r.equal(v.status, Status.SATISFIED, "C18 satisfies BMY at 7/12")
    r.equal(evaluate(c18).mk_defect, Fraction(9, 2), "C18 mk_defect")
    details.update(
        threshold=_q(t["boundary"]),
        bound_n18=_q(bound),
        c18_bmy=f"{_q(v.lhs)} <= {_q(v.rhs)}",
    )
    return details, r


def check_e8(ctx) -> dict:
    r = _Recorder()
    details = {"sweep": _sweep(ctx, "E8", range(6, 61, 2), r, lambda n: "langer_bmy")}
    t = bmy_degree_threshold("E8")
    b2, b1 = t["bmy_quadratic"]
    q2, q1 = t["mk_quadratic"]
    r.equal((b2, b1), (Fraction(1184, 3195), Fraction(-16, 71)), "E8 BMY quadratic")
    r.equal((q2, q1), (Fraction(400, 1079), Fraction(-240, 1079)), "E8 MK quadratic")
    r.expect(Fraction(1184, 3195) < Fraction(400, 1079), "1184/3195 < 400/1079")
    r.expect(Fraction(16, 71) > Fraction(240, 1079), "16/71 > 240/1079")
    r.equal(t["excluded"], "all m > 0", "E8 excluded range")
    details["excluded"] = t["excluded"]
    return details, r


def check_e7(ctx) -> dict:
    r = _Recorder()
    degrees = range(6, 119, 2)
    details = {
        "sweep": _sweep(
            ctx,
            "E7",
            degrees,
            r,
            lambda n: "integrality" if n == 118 else "langer_bmy",
        )
    }
    r.equal(catalog.lct(parse_class("E7")), Fraction(5, 9), "lct(E7), derived")
    m = 59
    r.expect((16 * m * (10 * m - 6)) % 383 != 0, "383 does not divide 16 m(10m-6) at n=118")
    t = bmy_degree_threshold("E7")
    details["threshold"] = _q(t["boundary"])
    details["lct_derived"] = catalog.lct_is_derived(parse_class("E7"))
    return details, r


def check_line_arrangements(ctx) -> dict:
    r = _Recorder()
    r.equal(solve_line_arrangement(3), (3, 4), "m=3")
    hits = {m: solve_line_arrangement(m) for m in range(4, 51)}
    bad = [m for m, v in hits.items() if v is not None]
    r.equal(bad, [], "non-empty solutions for 4 <= m <= 50")
    return {"m=3": [3, 4]}, r


def check_freeness(ctx) -> dict:
    r = _Recorder()
    want = {
        "mk_sextic_A": 1,
        "mk_sextic_B": 1,
        "mk_sextic_C": 0,
        "bonnafe_C18": 1,
        "bonnafe_C18p": 25,
    }
    details = {}
    for name, nu in want.items():
        got = freeness_defect(gallery.get_entry(name).profile)
        r.equal(got, nu, f"nu({name})")
        details[name] = got
    # Both formulas must agree on every MK profile we know of.
    mk_profiles = [e.profile for e in gallery.list_entries() if evaluate(e.profile).is_mk]
    for alphabet in (("A1", "A3"), ("A2",), ("A1", "D4"), ("A1", "A2", "A3", "D4")):
        rep = hunt(HuntRequest(6, alphabet, alpha_denom_limit=ctx["denom"]), facts=ctx["facts"])
        mk_profiles += [o.profile for o in rep.outcomes if o.survived]
    for p in mk_profiles:
        r.equal(
            freeness_defect_mk_form(p), Fraction(freeness_defect(p)), f"nu formulas on {p}"
        )
    details["mk_profiles_cross_checked"] = len(mk_profiles)
    return details, r


def check_min_singularities(ctx) -> dict:
    r = _Recorder()
    r.equal(min_singularity_bound(6, False), 6, "s(C) bound, sextic")
    r.equal(min_singularity_bound(6, True), 7, "s(C) bound, A1/A2 sextic")
    return {"6": 6, "6_a1a2": 7}, r


def _random_requests(count, seed=20240601):
    rng = random.Random(seed)
    pool = ["A1", "A2", "A3", "A4", "D4", "E6"]
    out = []
    for _ in range(count):
        n = rng.choice([6, 8, 10, 12])
        k = rng.randint(1, 4)
        out.append((n, tuple(rng.sample(pool, k))))
    return out


def check_oracle_equivalence(ctx) -> dict:
    r = _Recorder()
    requests = _random_requests(ctx.get("oracle_samples", 200))
    total = 0
    for n, alphabet in requests:
        fast = enumerate_solutions(n, alphabet)
        slow = brute_force_solutions(n, alphabet)
        total += len(fast)
        r.equal(fast, slow, f"raw solutions n={n} alphabet={','.join(alphabet)}")
    return {"requests": len(requests), "solutions": total}, r


def check_determinism(ctx) -> dict:
    r = _Recorder()
    requests = [
        HuntRequest(8, ("A1", "A2", "A3", "D4"), alpha_denom_limit=ctx["denom"]),
        HuntRequest(12, ("A1", "A2"), irreducible=True, alpha_denom_limit=ctx["denom"]),
        HuntRequest(10, ("A1", "A2", "A3", "D4"), alpha_denom_limit=ctx["denom"]),
    ]
    sizes = {}
    for req in requests:
        serial = json.dumps(hunt(req, facts=ctx["facts"]).to_dict(), sort_keys=True)
        again = json.dumps(hunt(req, facts=ctx["facts"]).to_dict(), sort_keys=True)
        parallel = json.dumps(
            hunt(req, facts=ctx["facts"], workers=2).to_dict(), sort_keys=True
        )
        key = f"{req.degree}:{','.join(c.name for c in req.alphabet)}"
        r.expect(serial == again, f"repeat run differs for {key}")
        r.expect(serial == parallel, f"parallel run differs for {key}")
        sizes[key] = len(serial)
    return {"report_bytes": sizes}, r


CHECKS = (
    ("catalog", "catalog identities and spot values", check_catalog),
    ("mk-sextics", "the three MK sextic profiles have m(C) = 72", check_mk_sextics),
    ("steiner-octic", "Steiner quartic plus four lines: m(C) = 2175/16", check_steiner),
    ("octic-hunt", "no MK octic with A1, A2, A3, D4 points", check_octic_hunt),
    ("bmy-coefficients", "cleared BMY coefficients at 3/8, 12/25, 1/4, 11/20", check_bmy_coefficients),
    ("degree10-mod9", "degree 10 with A1, A3, D4: mod 9 obstruction", check_degree10_mod9),
    ("irreducible-a1a2", "irreducible A1/A2 curves in degrees 8, 10, 12", check_irreducible_a1a2),
    ("nodal-cuspidal", "nodal and cuspidal curves, degrees 8..40", check_nodal_cuspidal),
    ("e6-sweep", "only E6 points, degrees 6..24", check_e6),
    ("e8-sweep", "only E8 points, degrees 6..60", check_e8),
    ("e7-sweep", "only E7 points, degrees 6..118", check_e7),
    ("line-arrangements", "MK line arrangements", check_line_arrangements),
    ("freeness", "freeness defects and formula agreement", check_freeness),
    ("min-singularities", "minimum number of singular points", check_min_singularities),
    ("oracle-equivalence", "hunter vs brute force on random requests", check_oracle_equivalence),
    ("determinism", "serial, repeated and parallel hunts agree byte for byte", check_determinism),
)

CHECK_IDS = tuple(c[0] for c in CHECKS)


def run_check(check_id: str, ctx: Optional[dict] = None) -> CheckResult:
    ctx = _context(ctx)
    for cid, title, fn in CHECKS:
        if cid == check_id:
            try:
                details, rec = fn(ctx)
            except Exception as exc:  # a crash is a failed check, not a suite abort
                return CheckResult(cid, title, False, {}, [f"{type(exc).__name__}: {exc}"])
            return CheckResult(cid, title, not rec.failures, details, rec.failures)
    raise KeyError(f"unknown check {check_id!r}; known: {', '.join(CHECK_IDS)}")


def _context(ctx):
    ctx = dict(ctx or {})
    ctx.setdefault("denom", DEFAULT_ALPHA_DENOM_LIMIT)
    ctx.setdefault("workers", 1)
    if ctx.get("facts") is None:
        ctx["facts"] = default_facts()
    return ctx


def run_suite(only: Optional[Sequence[str]] = None, ctx: Optional[dict] = None) -> list:
    ctx = _context(ctx)
    ids = CHECK_IDS if not only else list(only)
    for cid in ids:
        if cid not in CHECK_IDS:
            raise KeyError(f"unknown check {cid!r}; known: {', '.join(CHECK_IDS)}")
    return [run_check(cid, ctx) for cid in ids]


def suite_json(results: Sequence[CheckResult]) -> str:
    payload = {
        "passed": all(r.passed for r in results),
        "checks": [r.to_dict() for r in results],
    }
    return json.dumps(payload, indent=2, sort_keys=True)
