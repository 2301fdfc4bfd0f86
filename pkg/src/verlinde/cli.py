"""Command-line surface: split, jumping-class, verify.

All machine output is UTF-8 JSON on stdout; progress and timing go to
stderr.  Exit codes: 0 success, 1 verification failure, 2 usage or
input error.  Identical command plus seed reproduces identical stdout
bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .family import (
    DegenerateLineError,
    GenericTypeUndefinedError,
    LineInSystem,
    context,
    generic_type,
    is_generic_type,
    sample_line,
    verlinde_pencil,
)
from .jumping import reconcile
from .pencils import PencilError, dominance, splitting_type
from .polynomials import HomogeneousPolynomial, gcd_degree, parse_form
from .suites import SUITES, run_all, run_suite


class UsageError(Exception):
    pass


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _load_poly(spec, n, degree, flag):
    """Read a polynomial from inline grammar, a JSON string, or @file."""
    try:
        if spec.startswith("@"):
            with open(spec[1:], encoding="utf-8") as fh:
                poly = HomogeneousPolynomial.from_json(json.load(fh))
        elif spec.lstrip().startswith("{"):
            poly = HomogeneousPolynomial.from_json(json.loads(spec))
        else:
            poly = parse_form(spec, n, degree)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"{flag}: {exc}") from exc
    if poly.n != n or poly.degree != degree:
        raise UsageError(
            f"{flag}: polynomial has n={poly.n}, degree={poly.degree}; "
            f"expected n={n}, degree={degree}")
    return poly


def _cmd_split(args):
    ctx = context(args.n, args.d, args.k)
    if args.f1 is not None or args.f2 is not None:
        if args.f1 is None or args.f2 is None:
            raise UsageError("both --f1 and --f2 are required")
        line = LineInSystem(_load_poly(args.f1, args.n, args.d, "--f1"),
                            _load_poly(args.f2, args.n, args.d, "--f2"))
    elif args.sample is not None:
        line = sample_line(ctx, args.sample, seed=args.seed)
    else:
        raise UsageError("provide --f1/--f2 or --sample")
    st = splitting_type(verlinde_pencil(ctx, line))
    try:
        generic = is_generic_type(ctx, line)
        dom = dominance(st, generic_type(ctx))
    except GenericTypeUndefinedError:
        generic = None
        dom = None
    _emit({
        "n": ctx.n,
        "d": ctx.d,
        "k": ctx.k,
        "f1": line.f1.to_json(),
        "f2": line.f2.to_json(),
        "type": list(st.entries),
        "p": st.zeros(),
        "generic": generic,
        "gcd_degree": gcd_degree(line.f1, line.f2, trials=args.trials, seed=args.seed),
        "dominance": dom,
    })
    return 0


def _cmd_jumping_class(args):
    if args.n not in (2, 3):
        raise UsageError("n must be 2 or 3")
    if args.d < 2:
        raise UsageError("d must be >= 2")
    try:
        report = reconcile(args.n, args.d, trials=args.trials, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(report.to_json())
    return 0


def _cmd_verify(args):
    results = run_all(args.seed) if args.suite == "all" else [run_suite(args.suite, args.seed)]
    for res in results:
        status = "ok" if res.passed else f"{len(res.failures)} FAILURES"
        print(f"[{res.suite}] cases={res.cases} {status} ({res.wall_time_s:.1f}s)",
              file=sys.stderr)
    _emit({
        "seed": args.seed,
        "suites": [res.to_json() for res in results],
        "passed": all(res.passed for res in results),
    })
    return 0 if all(res.passed for res in results) else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="verlinde",
        description="Splitting types on lines of hypersurface systems and "
                    "the class of the jumping-line locus.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("split", help="splitting type of one line")
    sp.add_argument("--n", type=int, required=True, help="ambient projective dimension")
    sp.add_argument("--d", type=int, required=True, help="hypersurface degree")
    sp.add_argument("--k", type=int, required=True, help="bundle twist")
    sp.add_argument("--f1", help="first spanning form (inline, JSON, or @file)")
    sp.add_argument("--f2", help="second spanning form")
    sp.add_argument("--sample", help="draw the line: random | jumping:D")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=3, help="gcd oracle trials")
    sp.set_defaults(func=_cmd_split)

    jc = sub.add_parser("jumping-class", help="reconciliation report for [Z]")
    jc.add_argument("--n", type=int, required=True)
    jc.add_argument("--d", type=int, required=True)
    jc.add_argument("--trials", type=int, default=3)
    jc.add_argument("--seed", type=int, default=0)
    jc.set_defaults(func=_cmd_jumping_class)

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    vf.add_argument("--seed", type=int, default=0)
    vf.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DegenerateLineError, GenericTypeUndefinedError,
            PencilError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
