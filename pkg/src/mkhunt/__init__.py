"""Exact invariants and non-existence hunts for Miyaoka-Kobayashi plane curves."""
from .catalog import SingularityClass, parse_class
from .profile import SingularityProfile, evaluate
from .constraints import ConstraintVerdict, Status
from .hunter import HuntRequest, HuntReport, hunt

__all__ = [
    "SingularityClass",
    "parse_class",
    "SingularityProfile",
    "evaluate",
    "ConstraintVerdict",
    "Status",
    "HuntRequest",
    "HuntReport",
    "hunt",
]

__version__ = "0.1.0"
