"""Command-line front end.

Usage::

    mkhunt evaluate --profile '{"degree": 6, "singularities": {"A2": 9}}'
    mkhunt hunt --degree 8 --alphabet A1,A2,A3,D4
    mkhunt bmy --gallery bonnafe_C18 --alpha 7/12
    mkhunt gallery list
    mkhunt paper-suite --only e6-sweep --json

Exit status: 0 on success, 2 for invalid input, 1 for internal errors (and
for a reproduction suite with failing checks). Finding candidate curves in a
hunt is a success.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import gallery
from .catalog import parse_class
from .constraints import (
    CONSTRAINT_ORDER,
    DEFAULT_ALPHA_DENOM_LIMIT,
    check_langer_bmy,
    default_facts,
    load_facts,
)
from .hunter import HuntRequest, hunt, render_summary
from .profile import SingularityProfile, evaluate, freeness_defect_mk_form
from .rational import format_rational, parse_rational

EXIT_OK, EXIT_ERROR, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad user input; reported with exit status 2."""


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    text: str = ""

    def to_dict(self) -> dict:
        return {"status": self.status, "payload": self.payload, "warnings": self.warnings}


# --------------------------------------------------------------------------
# input helpers

def _load_json(text, where):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON in {where} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def _profile_from_args(args) -> SingularityProfile:
    sources = [s for s in (args.profile, args.profile_file, args.gallery) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of --profile, --profile-file, --gallery")
    if args.gallery is not None:
        try:
            return gallery.get_entry(args.gallery).profile
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    if args.profile_file is not None:
        path = Path(args.profile_file)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
        record = _load_json(text, str(path))
    else:
        record = _load_json(args.profile, "--profile")
    try:
        return SingularityProfile.from_dict(record)
    except (ValueError, TypeError) as exc:
        raise InputError(f"invalid profile: {exc}") from None


def _facts(args):
    if args.facts_file is None:
        return default_facts()
    try:
        return default_facts() + load_facts(args.facts_file)
    except OSError as exc:
        raise InputError(f"cannot read facts file: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON in facts file at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"invalid facts file: {exc}") from None


# --------------------------------------------------------------------------
# commands

def cmd_evaluate(args) -> CommandResult:
    p = _profile_from_args(args)
    ev = evaluate(p)
    payload = {"profile": p.to_dict(), "evaluation": ev.to_dict()}
    if ev.is_mk:
        payload["evaluation"]["freeness_defect_mk_form"] = format_rational(
            freeness_defect_mk_form(p)
        )
    lines = [str(p)]
    for key, value in payload["evaluation"].items():
        if key != "warnings":
            lines.append(f"  {key}: {value}")
    return CommandResult("ok", payload, list(ev.warnings), "\n".join(lines))


def cmd_hunt(args) -> CommandResult:
    try:
        alphabet = tuple(parse_class(x) for x in args.alphabet.split(",") if x.strip())
    except ValueError as exc:
        raise InputError(str(exc)) from None
    enabled = CONSTRAINT_ORDER
    if args.constraints:
        enabled = tuple(x.strip() for x in args.constraints.split(",") if x.strip())
    try:
        req = HuntRequest(
            degree=args.degree,
            alphabet=alphabet,
            irreducible=args.irreducible,
            alpha_denom_limit=args.alpha_denom_limit,
            enabled_constraints=frozenset(enabled),
        )
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from None
    report = hunt(req, facts=_facts(args), workers=args.workers)
    payload = report.to_dict()
    return CommandResult("ok", payload, [], render_summary(report))


def cmd_bmy(args) -> CommandResult:
    try:
        alpha = parse_rational(args.alpha)
    except ValueError as exc:
        raise InputError(f"--alpha: {exc}") from None
    p = _profile_from_args(args)
    v = check_langer_bmy(p, alpha)
    payload = {"profile": p.to_dict(), "verdict": v.to_dict()}
    text = f"{p}\n  alpha={format_rational(alpha)}: {v.status.value}"
    if v.lhs is not None:
        text += f" ({format_rational(v.lhs)} {v.relation} {format_rational(v.rhs)} required)"
    if v.reason:
        text += f"\n  {v.reason}"
    return CommandResult("ok", payload, [], text)


def cmd_gallery(args) -> CommandResult:
    if args.action == "list":
        entries = [e.to_dict() for e in gallery.list_entries()]
        text = "\n".join(f"{e['name']}: {gallery.get_entry(e['name']).profile}" for e in entries)
        return CommandResult("ok", {"entries": entries}, [], text)
    if not args.name:
        raise InputError("gallery show needs an entry name")
    try:
        entry = gallery.get_entry(args.name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    d = entry.to_dict()
    text = json.dumps(d, indent=2)
    return CommandResult("ok", d, [], text)


def cmd_paper_suite(args) -> CommandResult:
    from .suite import CHECK_IDS, run_suite

    only = args.only or None
    if only:
        unknown = [x for x in only if x not in CHECK_IDS]
        if unknown:
            raise InputError(f"unknown check(s) {unknown}; known: {', '.join(CHECK_IDS)}")
    ctx = {
        "denom": args.alpha_denom_limit,
        "workers": args.workers,
        "facts": _facts(args),
    }
    results = run_suite(only, ctx)
    passed = all(r.passed for r in results)
    payload = {"passed": passed, "checks": [r.to_dict() for r in results]}
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.id:20s} {r.title}")
        lines.extend(f"        {msg}" for msg in r.failures)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return CommandResult("ok" if passed else "error", payload, [], "\n".join(lines))


# --------------------------------------------------------------------------

def _add_profile_source(p):
    p.add_argument("--profile", help="profile as inline JSON")
    p.add_argument("--profile-file", help="path to a profile JSON file")
    p.add_argument("--gallery", help="name of a gallery entry")


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable JSON output")
    common.add_argument("--alpha-denom-limit", type=int, default=argparse.SUPPRESS,
                        help="largest alpha denominator in BMY sweeps (default 100)")
    common.add_argument("--facts-file", default=argparse.SUPPRESS,
                        help="extra literature facts (JSON list)")

    parser = argparse.ArgumentParser(
        prog="mkhunt",
        description="Exact MK-curve profile evaluation and non-existence hunts.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", parents=[common], help="evaluate a profile")
    _add_profile_source(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("hunt", parents=[common], help="enumerate and filter MK profiles")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--alphabet", required=True, help="comma-separated classes, e.g. A1,A2")
    p.add_argument("--irreducible", action="store_true")
    p.add_argument("--constraints", help="comma-separated subset of " + ",".join(CONSTRAINT_ORDER))
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("bmy", parents=[common], help="check the orbifold BMY inequality")
    _add_profile_source(p)
    p.add_argument("--alpha", required=True, help="exact rational p/q")
    p.set_defaults(func=cmd_bmy)

    p = sub.add_parser("gallery", parents=[common], help="list or show named curves")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("paper-suite", parents=[common], help="run the reproduction checks")
    p.add_argument("--only", action="append", help="run only this check id (repeatable)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_paper_suite)
    return parser


_GLOBAL_DEFAULTS = {
    "json": False,
    "alpha_denom_limit": DEFAULT_ALPHA_DENOM_LIMIT,
    "facts_file": None,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors and 0 for --help.
        return int(exc.code or 0)
    # Parent actions are shared with the subparsers, so defaults are filled
    # in here rather than via set_defaults (which would clobber them).
    for name, value in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, value)
    if args.alpha_denom_limit < 1:
        return _emit(args, CommandResult("violated-input", warnings=[
            "--alpha-denom-limit must be positive"]), EXIT_INPUT)
    try:
        result = args.func(args)
    except InputError as exc:
        return _emit(args, CommandResult("violated-input", {"error": str(exc)}), EXIT_INPUT)
    except Exception as exc:  # noqa: BLE001 - report, never traceback, at the boundary
        return _emit(
            args,
            CommandResult("error", {"error": f"{type(exc).__name__}: {exc}"}),
            EXIT_ERROR,
        )
    code = EXIT_OK if result.status == "ok" else EXIT_ERROR
    return _emit(args, result, code)


def _emit(args, result: CommandResult, code: int) -> int:
    if getattr(args, "json", False):
        print(json.dumps(result.to_dict(), indent=2, sort_keys=True))
    else:
        if result.text:
            print(result.text)
        for w in result.warnings:
            print(f"warning: {w}", file=sys.stderr)
        if result.status != "ok" and "error" in result.payload:
            print(f"error: {result.payload['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
