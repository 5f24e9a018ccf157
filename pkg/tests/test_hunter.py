import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mkhunt.hunter import (
    HuntRequest,
    bmy_degree_threshold,
    enumerate_solutions,
    hunt,
    hunt_summary,
    render_summary,
    scaled_equation,
    solve_line_arrangement,
)
from mkhunt.oracle import brute_force_solutions

OCTIC = ("A1", "A2", "A3", "D4")
POOL = ["A1", "A2", "A3", "A4", "D4", "E6"]


# Cases a)-h) of the octic system, as (#A1, #A2, #A3, #D4).
OCTIC_RAW = [
    (0, 17, 0, 0),
    (1, 8, 6, 0),
    (2, 8, 3, 2),
    (3, 8, 0, 4),
    (6, 8, 4, 0),
    (7, 8, 1, 2),
    (11, 8, 2, 0),
    (16, 8, 0, 0),
]


def test_scaled_octic_equation():
    eq = scaled_equation(8, OCTIC)
    assert eq.scale == 8
    assert eq.coeffs == (36, 64, 90, 117) and eq.rhs == 1088
    assert eq.tau_budget == 37


def test_octic_raw_solutions():
    assert enumerate_solutions(8, OCTIC) == OCTIC_RAW


def test_octic_hunt_eliminators():
    report = hunt(HuntRequest(8, OCTIC))
    assert report.survivors == ()
    elim = {o.counts: o.eliminating_verdict for o in report.outcomes}
    assert elim[(0, 17, 0, 0)].constraint == "literature_facts"
    assert elim[(1, 8, 6, 0)].parameters["alpha"] == Fraction(50, 99)
    assert elim[(2, 8, 3, 2)].parameters["alpha"] == Fraction(30, 67)
    rows = {tuple(r["counts"].values()): r for r in hunt_summary(report)["rows"]}
    for counts, total in [
        ((3, 8, 0, 4), 13856),
        ((6, 8, 4, 0), 13832),
        ((7, 8, 1, 2), 13886),
        ((11, 8, 2, 0), 13916),
        ((16, 8, 0, 0), 14000),
    ]:
        v = elim[counts]
        assert v.constraint == "langer_bmy" and v.parameters["alpha"] == Fraction(3, 8)
        assert rows[counts]["scaled_lhs"] == str(total)
        assert rows[counts]["scaled_rhs"] == "13824"
    assert report.degree_eliminator == "per_solution"


def test_all_verdicts_kept_in_order():
    report = hunt(HuntRequest(8, OCTIC))
    names = [v.constraint for v in report.outcomes[0].verdicts]
    assert names == [
        "literature_facts", "tjurina_max", "dpw_a1a2",
        "irreducible_dual", "a1a2_gap", "langer_bmy",
    ]


def test_degree_ten_mod_nine():
    report = hunt(HuntRequest(10, ("A1", "A3", "D4")))
    assert report.raw_solutions == ()
    ob = report.obstruction
    assert ob["kind"] == "integrality" and ob["modulus"] == 9
    assert report.degree_eliminator == "integrality"


def test_sextic_survivors():
    report = hunt(HuntRequest(6, OCTIC))
    assert set(report.survivors) == {(6, 0, 4, 0), (0, 9, 0, 0), (3, 0, 0, 4)}


def test_survivor_set_independent_of_order():
    full = hunt(HuntRequest(8, OCTIC)).survivors
    for drop in ("literature_facts", "tjurina_max"):
        enabled = {"literature_facts", "tjurina_max", "dpw_a1a2", "langer_bmy"} - {drop}
        partial = hunt(HuntRequest(8, OCTIC, enabled_constraints=enabled))
        assert set(full) <= set(partial.survivors)


def test_facts_disabled_leaves_octic_a_for_bmy():
    report = hunt(HuntRequest(8, OCTIC, enabled_constraints={"langer_bmy"}))
    o = report.outcomes[0]
    assert o.counts == (0, 17, 0, 0)
    assert o.eliminating_verdict.parameters["alpha"] == Fraction(3, 8)


@pytest.mark.parametrize("degree", [8, 10, 12])
def test_irreducible_a1a2(degree):
    assert hunt(HuntRequest(degree, ("A1", "A2"), irreducible=True)).survivors == ()


def test_irreducible_twelve_branches():
    report = hunt(HuntRequest(12, ("A1", "A2"), irreducible=True))
    elim = {o.counts: o.eliminating_verdict for o in report.outcomes}
    v = elim[(8, 36)]
    assert v.constraint == "langer_bmy" and v.parameters["alpha"] == Fraction(1, 4)
    scale = v.parameters["scale"]
    assert (v.lhs * scale, v.rhs * scale) == (2892, 2880)
    for counts in [(24, 27), (40, 18), (56, 9), (72, 0)]:
        assert elim[counts].constraint == "irreducible_dual"
        assert elim[counts].rhs == 128


@pytest.mark.parametrize("cls", ["A1", "A2"])
def test_nodal_and_cuspidal_small(cls):
    for n in range(8, 21, 2):
        assert hunt(HuntRequest(n, (cls,))).survivors == ()


def test_e6_threshold():
    t = bmy_degree_threshold("E6")
    assert t["boundary"] == Fraction(738, 61)


def test_e8_comparison():
    t = bmy_degree_threshold("E8")
    assert t["mk_quadratic"] == (Fraction(400, 1079), Fraction(-240, 1079))
    assert t["bmy_quadratic"] == (Fraction(1184, 3195), Fraction(-16, 71))
    assert t["excluded"] == "all m > 0"


def test_e7_at_118_is_integrality():
    report = hunt(HuntRequest(118, ("E7",)))
    assert report.raw_solutions == ()
    assert report.degree_eliminator == "integrality"
    assert hunt(HuntRequest(116, ("E7",))).degree_eliminator == "langer_bmy"


def test_line_arrangement():
    assert solve_line_arrangement(3) == (3, 4)
    assert all(solve_line_arrangement(m) is None for m in range(4, 51))
    with pytest.raises(ValueError):
        solve_line_arrangement(2)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(degree=7, alphabet=("A1",)),
        dict(degree=4, alphabet=("A1",)),
        dict(degree=8, alphabet=()),
        dict(degree=8, alphabet=("A1", "A1")),
        dict(degree=8, alphabet=("A1",), alpha_denom_limit=0),
        dict(degree=8, alphabet=("A1",), enabled_constraints={"nope"}),
    ],
)
def test_request_validation(kwargs):
    with pytest.raises(ValueError):
        HuntRequest(**kwargs)


def test_request_round_trip():
    req = HuntRequest(10, ("D4", "A1"), irreducible=True, alpha_denom_limit=40)
    again = HuntRequest.from_dict(json.loads(json.dumps(req.to_dict())))
    assert again == req


def test_report_json_and_text():
    report = hunt(HuntRequest(8, OCTIC))
    d = json.loads(json.dumps(report.to_dict()))
    assert d["survivors"] == [] and len(d["raw_solutions"]) == 8
    text = render_summary(report)
    assert "36*#A1 + 64*#A2 + 90*#A3 + 117*#D4 = 1088" in text


def test_parallel_matches_serial():
    req = HuntRequest(12, ("A1", "A2", "A3", "D4"))
    a = json.dumps(hunt(req).to_dict(), sort_keys=True)
    b = json.dumps(hunt(req, workers=2).to_dict(), sort_keys=True)
    assert a == b


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([6, 8, 10, 12]),
    st.lists(st.sampled_from(POOL), min_size=1, max_size=4, unique=True),
)
def test_enumeration_matches_brute_force(degree, alphabet):
    assert enumerate_solutions(degree, alphabet) == brute_force_solutions(degree, alphabet)
