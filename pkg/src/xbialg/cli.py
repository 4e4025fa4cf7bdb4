"""Command line front end: ``xbialg <command> ...``.

Exit status is 0 when every reported identity holds, 1 when any fails and
2 on input errors (unreadable file, bad format, unknown example).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .datum_io import DatumFormatError, dumps, load, save
from .exact_linear import SignatureError, format_matrix
from .gallery import EXAMPLES, example
from .hopf_datum import (
    AxiomReport, PreflightError, ReportLine, build_bialgebra, check_all, check_compatibilities,
    check_counital, check_naturality, check_strong,
)
from .proof_replay import lemma_suite, replay_dressing
from .universal import (
    ProjectionSystem, check_bialgebra, check_grid, classify, enumerate_boxes, extract_datum,
)

OK, FAIL, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _datum(source: str):
    """Load a datum file; a bare gallery name such as ``z4`` selects a built-in example."""
    p = Path(source)
    if p.exists():
        try:
            return load(p)
        except (DatumFormatError, SignatureError, UnicodeDecodeError) as exc:
            raise InputError(f"{source}: {exc}") from None
    if source in EXAMPLES:
        return example(source)
    raise InputError(f"{source}: no such file or built-in example")


def _emit(rep: AxiomReport, out) -> int:
    for line in rep:
        print(line, file=out)
    return OK if rep.passed else FAIL


def cmd_check(args, out) -> int:
    d = _datum(args.datum)
    rep = check_naturality(d) + check_counital(d) + check_compatibilities(d)
    if args.strong:
        rep = rep + check_strong(d)
    if args.lemmas:
        rep = rep + lemma_suite(d)
    if args.replay:
        rep = rep + replay_dressing(d)
    return _emit(rep, out)


def cmd_build(args, out) -> int:
    d = _datum(args.datum)
    try:
        B = build_bialgebra(d, override=args.override)
    except PreflightError:
        rep = check_all(d)
        for line in rep.failures():
            print(line, file=out)
        print("preflight failed; use --override to build anyway", file=out)
        return FAIL
    if not B.verified:
        print("unverified", file=out)
    rep = check_bialgebra(B)
    code = _emit(rep, out)
    if args.show:
        for label, f in (("m", B.m), ("eta", B.eta), ("d", B.d), ("eps", B.eps)):
            print(f"{label} =", file=out)
            print(format_matrix(f), file=out)
    return code


def cmd_classify(args, out) -> int:
    d = _datum(args.datum)
    box = classify(d, cross_validate=True)
    print(box, file=out)
    if box.cross_check is None:
        return OK
    if args.verbose:
        for line in box.cross_check:
            print(line, file=out)
    return OK if box.cross_check.passed else FAIL


def cmd_extract(args, out) -> int:
    d = _datum(args.datum)
    try:
        B = build_bialgebra(d)
    except PreflightError as exc:
        print(f"preflight failed: {exc}", file=out)
        return FAIL
    P = ProjectionSystem.canonical(d)
    e = extract_datum(B, P, name=d.name)
    diff = e.first_difference(d)
    rep = AxiomReport()
    if diff is None:
        rep.add(ReportLine("extract.round-trip", True))
    else:
        g, i, j, a, b = diff
        fs = d.field
        rep.add(ReportLine(f"extract.round-trip.{g}", False,
                           (i, j, fs.format_scalar(a), fs.format_scalar(b))))
    rep = rep + check_grid(d, B, P)
    code = _emit(rep, out)
    if args.save:
        save(e, args.save)
    return code


def cmd_enumerate(args, out) -> int:
    print(enumerate_boxes(), file=out)
    return OK


def cmd_example(args, out) -> int:
    try:
        d = example(args.name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    if args.save:
        save(d, args.save)
    else:
        out.write(dumps(d))
    return OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="xbialg", description="Cross product bialgebras from Hopf data, checked exactly.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the axiom checkers on a datum")
    p.add_argument("datum", help="datum file, or a built-in example name")
    p.add_argument("--strong", action="store_true", help="include the strong conditions")
    p.add_argument("--lemmas", action="store_true", help="include the helper identities")
    p.add_argument("--replay", action="store_true", help="replay the dressing chains")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("build", help="build the cross product bialgebra and verify it")
    p.add_argument("datum")
    p.add_argument("--override", action="store_true",
                   help="build even if the preflight fails (marked unverified)")
    p.add_argument("--show", action="store_true", help="print the structure matrices")
    p.set_defaults(run=cmd_build)

    p = sub.add_parser("classify", help="print the classification box")
    p.add_argument("datum")
    p.add_argument("-v", "--verbose", action="store_true", help="print the cross-check lines")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("extract", help="rebuild the datum from its bialgebra and compare")
    p.add_argument("datum")
    p.add_argument("--save", metavar="PATH", help="write the extracted datum")
    p.set_defaults(run=cmd_extract)

    p = sub.add_parser("enumerate-boxes", help="count classification boxes")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("example", help="print or save a built-in example")
    p.add_argument("name", help="one of " + ", ".join(EXAMPLES))
    p.add_argument("--save", metavar="PATH")
    p.set_defaults(run=cmd_example)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except InputError as exc:
        print(f"xbialg: error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except OSError as exc:
        print(f"xbialg: error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
