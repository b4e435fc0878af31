"""Command line interface.

Exit codes: 0 ok/accept, 1 reject/failed self-test, 2 parse error,
3 domain error (shape, ring, invertibility), 4 disagreement between oracles.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import diagrams, scheme_eqs, selftest, transvect
from .combinat import parse_index_set, subsets
from .errors import (
    ArityOutOfRange,
    InvalidIndexSet,
    NotAUnit,
    NotInvertible,
    ParseError,
    RankTooSmall,
    RingMismatch,
    ShapeMismatch,
    UnsupportedFormat,
    UnsupportedRing,
)
from .exalg import Matrix, random_invertible, wedge
from .scalars import ZZ, Ring, Zmod

EXIT_OK, EXIT_REJECT, EXIT_PARSE, EXIT_DOMAIN, EXIT_DISAGREE = 0, 1, 2, 3, 4

DOMAIN_ERRORS = (
    ArityOutOfRange,
    InvalidIndexSet,
    NotAUnit,
    NotInvertible,
    RankTooSmall,
    RingMismatch,
    ShapeMismatch,
    UnsupportedRing,
)


class CliExit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


def _read_matrix(path: str) -> Matrix:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CliExit(EXIT_PARSE, f"cannot read {path}: {exc}") from None
    return Matrix.from_json(text)


def _emit(text: str, path: str | None = None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_wedge(args) -> int:
    x = _read_matrix(args.input)
    if x.indexing != "plain":
        raise ShapeMismatch("wedge expects a plain-indexed matrix")
    _emit(_dump(wedge(args.power, x).to_dict()), args.output)
    return EXIT_OK


def cmd_membership(args) -> int:
    g = _read_matrix(args.input)
    opts = dict(equations_only=args.equations_only, full_report=args.full_report or args.trace, workers=args.workers)
    if args.mod is not None:
        if g.ring.kind == "zmod" and g.ring.modulus % args.mod != 0:
            raise RingMismatch(f"{g.ring} does not reduce modulo {args.mod}")
        if g.ring.kind == "q":
            raise RingMismatch("congruence check needs integer entries")
        report = scheme_eqs.congruence_membership(g.change_ring(ZZ), args.mod, **opts)
    else:
        report = scheme_eqs.membership(g, **opts)
    if args.trace:
        for v in report.violations:
            d = v.to_dict(g.n)
            sys.stderr.write(f"violated {d['kind']} A={d['A']} C={d['C']} H={d['H']} value={d['value']}\n")
        sys.stderr.write(f"checked {len(subsets(g.n, 4)) if g.n >= 4 else 0} four-sets\n")
        if not args.full_report and report.violations:
            report.violations = report.violations[:1]
            report.violation = report.violations[0]
    doc = report.to_dict()
    if args.second_form:
        target = g if args.mod is None else g.change_ring(ZZ).change_ring(Zmod(args.mod))
        second = scheme_eqs.second_form_membership(target)
        doc["second_form"] = second.to_dict()
        if second.accepted != report.accepted:
            _emit(_dump(doc), args.output)
            raise CliExit(EXIT_DISAGREE, "membership and second-form verdicts disagree")
    _emit(_dump(doc), args.output)
    return EXIT_OK if report.accepted else EXIT_REJECT


def cmd_exterior_number(args) -> int:
    g = _read_matrix(args.input)
    A = parse_index_set(args.A, g.n, 2)
    C = parse_index_set(args.C, g.n, 2)
    H = parse_index_set(args.H, g.n, 4)
    fn = diagrams.diagram_exterior_number if args.via == "diagram" else scheme_eqs.exterior_number
    value = fn(g, A, C, H)
    _emit(_dump({"A": args.A, "C": args.C, "H": args.H, "via": args.via, "value": str(value)}))
    return EXIT_OK


def cmd_decompose(args) -> int:
    ring = Ring.from_tag(args.ring)
    factors = transvect.decompose_wedge2(args.n, args.i, args.j, args.xi, ring)
    ok = transvect.verify_decomposition(args.n, args.i, args.j, args.xi, ring)
    _emit(_dump({"n": args.n, "i": args.i, "j": args.j, "xi": args.xi, "ring": ring.tag,
                 "factors": [t.to_dict() for t in factors], "verified": ok}))
    return EXIT_OK


def cmd_diagram(args) -> int:
    d = diagrams.build_diagram(args.n)
    squares = tuple(parse_index_set(s, args.n, 4) for s in args.square)
    for i in args.path:
        if not 1 <= i <= args.n:
            raise InvalidIndexSet(f"path anchor {i} outside [1, {args.n}]")
    hl = diagrams.Highlights(tuple(args.path), squares, args.signs)
    _emit(diagrams.render(d, args.format, hl))
    return EXIT_OK


def cmd_selftest(args) -> int:
    ok = selftest.run(args.level, args.seed, out=lambda line: print(line, flush=True))
    return EXIT_OK if ok else EXIT_REJECT


def cmd_random(args) -> int:
    import numpy as np

    ring = Ring.from_tag(args.ring)
    if args.kind == "elementary":
        x = transvect.random_elementary(args.n, args.length, ring, args.seed)
    else:
        x = random_invertible(ring, args.n, np.random.default_rng(args.seed))
    m = wedge(2, x) if args.wedge else x
    doc = m.to_dict()
    doc["meta"] = {"prng": transvect.PRNG_ALGORITHM, "seed": args.seed, "kind": args.kind}
    _emit(_dump(doc), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wedgescheme", description="Exterior square of GL_n: exact computations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("wedge", help="wedge power of a plain matrix file")
    s.add_argument("input")
    s.add_argument("--power", type=int, default=2)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_wedge)

    s = sub.add_parser("membership", help="decide membership of a wedge2 matrix")
    s.add_argument("input")
    s.add_argument("--mod", type=int, help="congruence check modulo this integer")
    s.add_argument("--second-form", action="store_true", help="cross-check with the B-matrix system")
    s.add_argument("--equations-only", action="store_true", help="skip the invertibility check")
    s.add_argument("--full-report", action="store_true", help="list every violated constraint")
    s.add_argument("--trace", action="store_true", help="print violated constraints to stderr")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_membership)

    s = sub.add_parser("exterior-number", help="one exterior number a^H_{A,C}(g)")
    s.add_argument("input")
    s.add_argument("--A", required=True)
    s.add_argument("--C", required=True)
    s.add_argument("--H", required=True)
    s.add_argument("--via", choices=("direct", "diagram"), default="direct")
    s.set_defaults(func=cmd_exterior_number)

    s = sub.add_parser("decompose", help="factor wedge(2, t_ij(xi)) into transvections of GL_N")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--xi", type=int, default=1)
    s.add_argument("--ring", default="z")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("diagram", help="render the weight diagram")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=diagrams.FORMATS, default="ascii")
    s.add_argument("--path", type=int, action="append", default=[])
    s.add_argument("--square", action="append", default=[])
    s.add_argument("--signs", action="store_true")
    s.set_defaults(func=cmd_diagram)

    s = sub.add_parser("selftest", help="run the invariant suites")
    s.add_argument("--level", choices=("quick", "full"), default="quick")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)

    s = sub.add_parser("random", help="emit a seeded random test matrix")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ring", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--kind", choices=("invertible", "elementary"), default="invertible")
    s.add_argument("--length", type=int, default=20)
    s.add_argument("--wedge", action="store_true", help="emit wedge(2, x) instead of x")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_random)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliExit as exc:
        if str(exc):
            sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except (ParseError, UnsupportedFormat) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except DOMAIN_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
