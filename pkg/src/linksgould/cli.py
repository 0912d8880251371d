"""Command-line front end.

    linksgould eval "n=2; 1 1 1"
    linksgould check "n=3; 1 -2 1 -2"      # or: check --link 9_42
    linksgould catalog [NAME] [--dump]
    linksgould pretzel 7 3 5
    linksgould selftest

Exit status: 0 on success, 1 when a mathematical check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .checks import IDENTITIES
from .ring import NotYFree, RingElem, is_inversion_symmetric, is_palindromic
from .tangle import (BraidParseError, BraidWord, NotScalarMultiple, TooManyStrands,
                     detect_chirality, lg_invariant, lg_of_network)


class _UsageError(Exception):
    pass


def _report(value: RingElem, name: str | None = None) -> dict:
    rec = {
        "polynomial": value.even.to_json(),
        "palindromic": is_palindromic(value),
        "inversion_symmetric": is_inversion_symmetric(value),
    }
    if name is not None:
        rec = {"name": name, **rec}
    return rec


def _emit(args, text: str, rec: dict) -> None:
    print(json.dumps(rec) if args.json else text)


def _cmd_eval(args) -> int:
    value = lg_invariant(BraidWord.parse(args.braid))
    _emit(args, value.to_string(), _report(value))
    return 0


def _cmd_check(args) -> int:
    if args.link:
        entry = catalog.get(args.link)
        value = lg_of_network(entry.network())
        name = entry.name
    elif args.braid:
        value = lg_invariant(BraidWord.parse(args.braid))
        name = None
    else:
        raise _UsageError("check needs a braid word or --link NAME")
    rec = _report(value, name)
    rec["chirality"] = detect_chirality(value).value
    text = "\n".join([
        value.to_string(),
        f"chirality: {rec['chirality']}",
        f"palindromic: {rec['palindromic']}",
        f"inversion symmetric: {rec['inversion_symmetric']}",
    ])
    _emit(args, text, rec)
    return 0 if rec["inversion_symmetric"] else 1


def _cmd_catalog(args) -> int:
    if args.dump:
        print(json.dumps(list(catalog.load_fixtures().values()), indent=1))
        return 0
    names = [catalog.canonical_name(args.name)] if args.name else list(catalog.NAMES)
    failed = False
    records = []
    for name in names:
        entry = catalog.get(name)
        value = lg_of_network(entry.network())
        ok = entry.expected is None or value == entry.expected
        failed |= not ok
        rec = _report(value, name)
        rec["status"] = "PASS" if ok else "FAIL"
        if entry.expected is not None:
            rec["expected"] = entry.expected.even.to_json()
        records.append(rec)
        if not args.json:
            print(f"{rec['status']} {name}")
            if entry.expected is not None:
                print(f"  expected: {entry.expected.to_string()}")
            print(f"  computed: {value.to_string()}")
    if args.json:
        print(json.dumps(records if len(records) > 1 else records[0]))
    return 1 if failed else 0


def _cmd_pretzel(args) -> int:
    value = lg_of_network(catalog.pretzel(*args.params))
    name = "TP(%d,%d,%d)" % tuple(args.params)
    rec = _report(value, name)
    rec["chirality"] = detect_chirality(value).value
    _emit(args, value.to_string(), rec)
    return 0 if rec["inversion_symmetric"] else 1


def _cmd_selftest(args) -> int:
    failed = False
    results = {}
    for label, fn in IDENTITIES.items():
        ok = fn()
        failed |= not ok
        results[label] = ok
        if not args.json:
            print(f"{'PASS' if ok else 'FAIL'} {label}")
    if args.json:
        print(json.dumps(results))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linksgould",
                                     description="Links-Gould invariant of braids and tangles")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", parents=[common], help="invariant of a braid closure")
    p.add_argument("braid", help='braid word, e.g. "n=3; 1 -2 1 -2"')
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("check", parents=[common], help="chirality and symmetry checks")
    p.add_argument("braid", nargs="?")
    p.add_argument("--link", help="catalog link name instead of a braid")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("catalog", parents=[common], help="compare catalog links with their fixtures")
    p.add_argument("name", nargs="?")
    p.add_argument("--dump", action="store_true", help="print the fixture file")
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("pretzel", parents=[common], help="Trotter pretzel knot (p, q, r)")
    p.add_argument("params", nargs=3, type=int, metavar="N")
    p.set_defaults(fn=_cmd_pretzel)

    p = sub.add_parser("selftest", parents=[common], help="exact identities of the R-matrix")
    p.set_defaults(fn=_cmd_selftest)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (BraidParseError, TooManyStrands, catalog.BadPretzelParams, _UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except catalog.UnknownLink as exc:
        print(f"error: unknown link {exc.args[0]!r}", file=sys.stderr)
        return 2
    except (NotScalarMultiple, NotYFree) as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
