"""Named curves with known singularity profiles and their expected invariants."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .profile import SingularityProfile
from .rational import format_rational

__all__ = ["GalleryEntry", "list_entries", "get_entry", "names"]


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    profile: SingularityProfile
    expected: Mapping[str, object]
    citation: str
    note: str = ""

    def to_dict(self) -> dict:
        expected = {
            k: format_rational(v) if isinstance(v, Fraction) else v
            for k, v in self.expected.items()
        }
        out = {
            "name": self.name,
            "profile": self.profile.to_dict(),
            "expected": expected,
            "citation": self.citation,
        }
        if self.note:
            out["note"] = self.note
        return out


def _entry(name, degree, counts, expected, citation, irreducible=False, note=""):
    return GalleryEntry(
        name=name,
        profile=SingularityProfile(degree, counts, irreducible),
        expected=expected,
        citation=citation,
        note=note,
    )


_ENTRIES = (
    _entry(
        "mk_sextic_A",
        6,
        {"A1": 6, "A3": 4},
        {"total_mk": Fraction(72), "is_mk": True, "mk_defect": Fraction(0), "freeness_defect": 1},
        "smooth conic with four tangent lines (Ivinskis type A)",
    ),
    _entry(
        "mk_sextic_B",
        6,
        {"A2": 9},
        {
            "total_mk": Fraction(72),
            "is_mk": True,
            "mk_defect": Fraction(0),
            "freeness_defect": 1,
            "dual_degree": 3,
        },
        "dual of a smooth cubic: irreducible sextic with nine cusps (Ivinskis type B)",
        irreducible=True,
        note="a one-parameter family up to projective equivalence",
    ),
    _entry(
        "mk_sextic_C",
        6,
        {"A1": 3, "D4": 4},
        {"total_mk": Fraction(72), "is_mk": True, "mk_defect": Fraction(0), "freeness_defect": 0},
        "six lines with four triple and three double points (Ivinskis type C)",
    ),
    _entry(
        "steiner_octic",
        8,
        {"E7": 3, "D4": 1, "A3": 2, "A1": 6},
        {"total_mk": Fraction(2175, 16), "is_mk": False, "mk_defect": Fraction(1, 16)},
        "Steiner quartic with a bitangent and the three cuspidal tangents",
    ),
    _entry(
        "bonnafe_C18",
        18,
        {"E6": 36},
        {"is_mk": False, "mk_defect": Fraction(9, 2), "freeness_defect": 1},
        "Bonnafe, Example 3.4: degree 18 with 36 E6 points",
    ),
    _entry(
        "bonnafe_C18p",
        18,
        {"A2": 72, "D4": 12},
        {"is_mk": False, "mk_defect": Fraction(9, 2), "freeness_defect": 25},
        "Bonnafe: degree 18 with 72 A2 and 12 D4 points",
    ),
    _entry(
        "fermat_type_lines",
        6,
        {"A1": 3, "D4": 4},
        {"total_mk": Fraction(72), "is_mk": True, "freeness_defect": 0},
        "the only MK line arrangement",
        note="equation (x^2-y^2)(y^2-z^2)(z^2-x^2) = 0",
    ),
)

_BY_NAME = {e.name: e for e in _ENTRIES}


def list_entries() -> list:
    return list(_ENTRIES)


def names() -> list:
    return [e.name for e in _ENTRIES]


def get_entry(name: str) -> GalleryEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"no gallery entry named {name!r}; known: {', '.join(_BY_NAME)}") from None
