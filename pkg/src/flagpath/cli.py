"""Command line: ``flagpath check | segment | audit | generate``.

Exit codes: 0 all checks pass, 1 verified violation, 2 precondition
failure (not flag / not normal / facet not in complex), 3 parse or usage
error.
"""

from __future__ import annotations

import argparse
import sys

from .complex import is_flag
from .errors import BadSpec, FlagPathError, NotPure, ParseError, PreconditionError, FacetsNotInComplex
from .graphs import hirsch_bound, is_normal
from .io import (
    all_pairs,
    audit,
    default_jobs,
    load_complex,
    parse_facet_literal,
    sample_pairs,
    serialize_facet_list,
)
from .segment import revisit_witness, segment_between_facets

EXIT_OK, EXIT_VIOLATION, EXIT_PRECONDITION, EXIT_USAGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(f):
    return " ".join(map(str, f))


def cmd_check(args):
    C = load_complex(args.input)
    flag, normal = is_flag(C), is_normal(C)
    print(f"flag={str(flag).lower()} normal={str(normal).lower()} "
          f"n={C.n} d={C.d} facets={len(C.facets)} bound={hirsch_bound(C)}")
    return EXIT_OK if flag and normal else EXIT_PRECONDITION


def cmd_segment(args):
    C = load_complex(args.input)
    X, Y = parse_facet_literal(args.source), parse_facet_literal(args.target)
    path, trace = segment_between_facets(C, X, Y, check=not args.skip_precheck)
    for f in path:
        print(_fmt(f))
    bound = hirsch_bound(C)
    witness = revisit_witness(C, path)
    if args.trace:
        print(f"# pearls: {_fmt(trace.pearls)}")
        print(f"# breakpoints: {_fmt(trace.breakpoints)}")
    print(f"# steps={path.length} bound={bound} non_revisiting={str(witness is None).lower()}")
    if witness is not None:
        print(f"# revisit: vertex {witness[0]} at steps {witness[1:]}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK if path.length <= bound else EXIT_VIOLATION


def cmd_audit(args):
    C = load_complex(args.input)
    m = len(C.facets)
    if args.sample is not None:
        pairs = sample_pairs(m, args.sample, args.seed)
    else:
        pairs = all_pairs(m)
    report = audit(C, args.input, pairs=pairs, jobs=args.jobs)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(f"complex={report.complex} n={report.n} d={report.d} facets={report.facets}")
        print(f"flag={str(report.flag).lower()} normal={str(report.normal).lower()}")
        if report.flag and report.normal:
            print(f"diameter={report.diameter} bound={report.bound}")
            print(f"pairs_checked={report.pairs_checked} "
                  f"max_segment_length={report.max_segment_length}")
            print(f"violations={len(report.violations)}")
            for v in report.violations:
                print(f"  {v}")
    if not (report.flag and report.normal):
        return EXIT_PRECONDITION
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_generate(args):
    C = load_complex(args.spec)
    text = serialize_facet_list(C)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="flagpath", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="flagness and normality of a complex")
    c.add_argument("input", help="facet-list file or generator spec")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("segment", help="combinatorial segment between two facets")
    s.add_argument("input")
    s.add_argument("--from", dest="source", required=True, help='facet literal, e.g. "1 3 5"')
    s.add_argument("--to", dest="target", required=True)
    s.add_argument("--trace", action="store_true", help="also print pearls and breakpoints")
    s.add_argument("--skip-precheck", action="store_true", help="do not verify flag/normal")
    s.set_defaults(func=cmd_segment)

    a = sub.add_parser("audit", help="segments for many facet pairs plus the diameter bound")
    a.add_argument("input")
    mode = a.add_mutually_exclusive_group()
    mode.add_argument("--all-pairs", action="store_true", help="every unordered facet pair (default)")
    mode.add_argument("--sample", type=int, metavar="N", help="N random facet pairs")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--jobs", type=int, default=default_jobs(),
                   help="worker processes (default: $FLAGPATH_JOBS or 1)")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_audit)

    g = sub.add_parser("generate", help="write the facet list of a generator spec")
    g.add_argument("spec")
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_generate)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, FacetsNotInComplex) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParseError, BadSpec, NotPure, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FlagPathError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
