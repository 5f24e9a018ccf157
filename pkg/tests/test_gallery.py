import json

import pytest

from mkhunt import gallery
from mkhunt.profile import dual_degree, evaluate

FIELDS = ("total_mk", "is_mk", "mk_defect", "freeness_defect", "dual_degree")


@pytest.mark.parametrize("name", gallery.names())
def test_expected_invariants(name):
    entry = gallery.get_entry(name)
    ev = evaluate(entry.profile)
    for key, want in entry.expected.items():
        assert key in FIELDS
        assert getattr(ev, key) == want, key


def test_sextic_b_dual_is_cubic():
    assert dual_degree(gallery.get_entry("mk_sextic_B").profile) == 3


def test_unknown_entry():
    with pytest.raises(KeyError):
        gallery.get_entry("klein_quartic")


def test_entries_serialise():
    for entry in gallery.list_entries():
        d = json.loads(json.dumps(entry.to_dict()))
        assert d["name"] == entry.name and d["citation"]
