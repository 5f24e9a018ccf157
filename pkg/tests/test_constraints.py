import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mkhunt.constraints import (
    BmySweep,
    LiteratureFact,
    Status,
    alpha_grid,
    bmy_coefficients,
    bmy_window,
    check_dpw_a1a2,
    check_irreducible_dual,
    check_langer_bmy,
    check_literature_facts,
    check_mk_a1a2_gap,
    check_tjurina_max,
    default_facts,
    find_excluding_alpha,
    load_facts,
)
from mkhunt.profile import SingularityProfile

Q = Fraction
OCTIC = ["A1", "A2", "A3", "D4"]


@pytest.mark.parametrize(
    "alpha, classes, coeffs, rhs",
    [
        (Q(3, 8), OCTIC, (468, 814, 1128, 1485), (252, 288)),
        (Q(12, 25), OCTIC, (10944, 19391, 27213, 35424), (6048, 7200)),
        (Q(1, 4), ["A1", "A2"], (42, 71), (22, 24)),
        (Q(11, 20), OCTIC, (3828, 6862, 9696, 12573), (2156, 2640)),
    ],
)
def test_cleared_coefficients(alpha, classes, coeffs, rhs):
    _, got_coeffs, got_rhs = bmy_coefficients(alpha, classes)
    assert got_coeffs == coeffs
    assert got_rhs == rhs


def test_tjurina_max():
    v = check_tjurina_max(SingularityProfile(8, {"A2": 19}))
    assert v.status is Status.VIOLATED and v.lhs == 38 and v.rhs == 37
    assert check_tjurina_max(SingularityProfile(8, {"A2": 18})).status is Status.SATISFIED
    assert check_tjurina_max(SingularityProfile(7, {})).status is Status.INAPPLICABLE


def test_dpw_a1a2():
    v = check_dpw_a1a2(SingularityProfile(8, {"A2": 17}))
    assert v.lhs == 34 and v.rhs == Q(308, 9) and not v.violated
    assert check_dpw_a1a2(SingularityProfile(8, {"A2": 18})).violated
    assert check_dpw_a1a2(SingularityProfile(8, {"A3": 1})).status is Status.INAPPLICABLE


def test_irreducible_dual():
    p = SingularityProfile(12, {"A1": 24, "A2": 27}, irreducible=True)
    v = check_irreducible_dual(p)
    assert v.lhs == 24 * 2 + 27 * 3 and v.rhs == 128 and v.violated
    sextic = SingularityProfile(6, {"A2": 9}, irreducible=True)
    assert check_irreducible_dual(sextic).status is Status.INAPPLICABLE
    assert check_irreducible_dual(SingularityProfile(12, {"A1": 1})).status is Status.INAPPLICABLE


def test_a1a2_gap():
    v = check_mk_a1a2_gap(SingularityProfile(12, {"A1": 24, "A2": 27}, irreducible=True))
    assert v.lhs == 3 and v.rhs == 8 and v.violated
    # not MK -> inapplicable
    assert check_mk_a1a2_gap(
        SingularityProfile(12, {"A1": 1}, irreducible=True)
    ).status is Status.INAPPLICABLE


def test_literature_facts_defaults():
    zariski = check_literature_facts(SingularityProfile(8, {"A2": 17}))
    assert zariski.violated and "Zariski" in zariski.citation
    ten = check_literature_facts(SingularityProfile(10, {"A1": 8, "A2": 23}))
    assert ten.violated
    assert not check_literature_facts(SingularityProfile(10, {"A1": 8, "A2": 23, "A3": 1})).violated
    for ok in ({"A2": 9}, {"A1": 6, "A3": 4}, {"A1": 3, "D4": 4}):
        assert not check_literature_facts(SingularityProfile(6, ok)).violated
    assert check_literature_facts(SingularityProfile(6, {"A1": 16})).violated


def test_fact_file_round_trip(tmp_path):
    facts = default_facts()
    path = tmp_path / "facts.json"
    path.write_text(json.dumps([f.to_dict() for f in facts]))
    assert load_facts(path) == facts


@pytest.mark.parametrize(
    "record",
    [
        {"degree": 8, "citation": "x"},
        {"degree": 8, "citation": "x", "counts": {"A2": {"min": 1}}, "mk_classification": []},
        {"degree": 8, "citation": "x", "counts": {"A2": {"least": 1}}},
    ],
)
def test_bad_facts_rejected(record):
    with pytest.raises((ValueError, KeyError, TypeError)):
        LiteratureFact.from_dict(record)


def test_bmy_window():
    assert bmy_window(8, ["A1", "A2", "A3", "D4"]) == (Q(3, 8), True, Q(2, 3))
    assert bmy_window(12, ["E6"]) == (Q(7, 12), True, Q(7, 12))
    assert bmy_window(6, ["E8"]) == (Q(8, 15), True, Q(8, 15))
    assert bmy_window(4, ["E8"]) is None  # 3/4 > 8/15
    assert bmy_window(8, ["A5"]) is None


def test_bmy_guarded_outside_window():
    p = SingularityProfile(8, {"A2": 8})
    assert check_langer_bmy(p, Q(1, 10)).status is Status.INAPPLICABLE
    assert check_langer_bmy(SingularityProfile(8, {"A5": 1}), Q(1, 2)).status is Status.INAPPLICABLE


def test_bmy_e6_count_bound_at_18():
    alpha = Q(7, 12)
    v = check_langer_bmy(SingularityProfile(18, {"E6": 36}), alpha)
    assert v.status is Status.SATISFIED
    assert (v.lhs, v.rhs) == (423, Q(1701, 4))
    assert check_langer_bmy(SingularityProfile(18, {"E6": 37}), alpha).violated


def test_alpha_grid():
    grid = alpha_grid((Q(1, 3), False, Q(1, 2)), 6)
    assert grid == [Q(2, 5), Q(1, 2)]
    assert alpha_grid(None, 10) == []
    with pytest.raises(ValueError):
        alpha_grid((Q(0), True, Q(1)), 0)


@pytest.mark.parametrize(
    "degree, counts, want",
    [
        # 17 * 814 = 13838 > 13824 with the scale-256 coefficients
        (8, {"A2": 17}, Q(3, 8)),
        (8, {"A2": 16}, None),
        (8, {"A1": 1, "A2": 8, "A3": 6}, Q(50, 99)),
        (10, {"A1": 8, "A2": 23}, Q(3, 10)),
    ],
)
def test_find_excluding_alpha(degree, counts, want):
    hit = find_excluding_alpha(SingularityProfile(degree, counts))
    if want is None:
        assert hit is None
    else:
        assert hit is not None and hit[1].violated
        assert hit[0] == want


counts_strategy = st.tuples(*(st.integers(0, 12) for _ in OCTIC))


def _profile(degree, vec, irreducible=False):
    mu = sum(k * int(c[1:]) for c, k in zip(OCTIC, vec))
    if mu > (degree - 1) ** 2:
        return None
    return SingularityProfile(degree, dict(zip(OCTIC, vec)), irreducible)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([8, 10, 12]), counts_strategy)
def test_sweep_matches_reference(degree, vec):
    sweep = BmySweep(degree, OCTIC, 30)
    p = _profile(degree, vec)
    if p is None:
        return
    ref = find_excluding_alpha(p, 30)
    assert sweep.first_violation(vec) == (None if ref is None else ref[0])


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([8, 10, 12]), counts_strategy, st.integers(1, 60))
def test_scaled_comparison_matches_rational(degree, vec, k):
    # Clearing denominators must not change the verdict.
    p = _profile(degree, vec)
    if p is None:
        return
    alpha = Q(k, 60)
    v = check_langer_bmy(p, alpha)
    if v.status is Status.INAPPLICABLE:
        return
    present = [(c, k) for c, k in zip(OCTIC, vec) if k]
    scale, coeffs, (a, b) = bmy_coefficients(alpha, [c for c, _ in present])
    lhs = sum(c * k for c, (_, k) in zip(coeffs, present))
    rhs = a * degree * degree - b * degree
    assert v.violated == (lhs > rhs)
    assert v.lhs * scale == lhs and v.rhs * scale == rhs


@given(st.sampled_from([6, 8, 10, 12, 14]), counts_strategy)
def test_verdicts_are_a_trichotomy(degree, vec):
    p = _profile(degree, vec, irreducible=True)
    if p is None:
        return
    for check in (check_tjurina_max, check_dpw_a1a2, check_irreducible_dual, check_mk_a1a2_gap):
        v = check(p)
        assert v.status in (Status.SATISFIED, Status.VIOLATED, Status.INAPPLICABLE)
        if v.status is Status.INAPPLICABLE:
            assert v.reason
        else:
            assert v.violated == (v.status is Status.VIOLATED)
            assert json.loads(json.dumps(v.to_dict()))["status"] == v.status.value
