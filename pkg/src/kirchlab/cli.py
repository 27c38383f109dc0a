"""Command-line front end.

Machine-readable output (JSON, DOT, member lists) goes to stdout;
diagnostics and timing go to stderr.  Exit status: 0 success, 1 domain
error or failed verification suite, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .numtheory import classify_prime
from .progressions import closure
from .filters import classify, descriptor, filter_le, realize, upset_in_Fprime
from .gamma import export_dot, gamma_graph
from .verify import BOUND_ORDER, run_suite, suite_names


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"need a positive integer, got {v}")
    return v


def _int_csv(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _emit(obj) -> None:
    print(json.dumps(obj))


def _cmd_closure(args) -> int:
    cs = closure(args.a, args.b)
    if args.window is None:
        _emit(cs.to_json_dict())
    else:
        lo, hi = args.window
        print(" ".join(str(z) for z in cs.members(lo, hi)))
    return 0


def _cmd_filter(args) -> int:
    _emit(descriptor(args.elements).to_json_dict())
    return 0


def _cmd_classify(args) -> int:
    _emit(classify(args.elements).to_json_dict())
    return 0


def _cmd_upset(args) -> int:
    _emit([d.to_json_dict() for d in upset_in_Fprime(args.elements)])
    return 0


def _cmd_realize(args) -> int:
    if len(args.primes) != len(args.alpha):
        print("error: --primes and --alpha must have the same length", file=sys.stderr)
        return 2
    alpha = dict(zip(args.primes, args.alpha))
    E = realize(args.primes, alpha)
    _emit(descriptor(E).to_json_dict())
    return 0


def _cmd_gamma(args) -> int:
    g = gamma_graph(args.p, args.bound)
    if args.format == "dot":
        sys.stdout.write(export_dot(g))
    else:
        _emit(g.to_json_dict())
    return 0


def _cmd_verify(args) -> int:
    bounds = None
    if args.bound:
        knobs = BOUND_ORDER[args.suite] if args.suite in BOUND_ORDER else ()
        if len(args.bound) > len(knobs):
            print(
                f"error: suite {args.suite!r} takes at most {len(knobs)} --bound values "
                f"({', '.join(knobs) or 'none'})",
                file=sys.stderr,
            )
            return 2
        bounds = dict(zip(knobs, args.bound))
    report = run_suite(args.suite, bounds=bounds, seed=args.seed)
    _emit(report.to_json_dict())
    print(
        f"suite {report.suite_name}: {report.instances_checked} instances, "
        f"{report.failure_count} failures, {report.elapsed:.2f}s",
        file=sys.stderr,
    )
    return 0 if report.passed else 1


def _cmd_primes(args) -> int:
    pt = classify_prime(args.p)
    _emit({"p": args.p, "tag": pt.tag, "m": pt.witness_exponent})
    return 0


def _cmd_cmp(rest) -> int:
    if "--" not in rest:
        print("usage: kirchlab cmp E1 [E2 ...] -- F1 [F2 ...]", file=sys.stderr)
        return 2
    cut = rest.index("--")
    try:
        E = tuple(int(t) for t in rest[:cut])
        F = tuple(int(t) for t in rest[cut + 1 :])
    except ValueError:
        print("error: cmp arguments must be integers", file=sys.stderr)
        return 2
    if not E or not F or min(min(E), min(F)) < 1:
        print("usage: kirchlab cmp E1 [E2 ...] -- F1 [F2 ...] (positive integers)", file=sys.stderr)
        return 2
    le = filter_le(E, F)
    ge = filter_le(F, E)
    _emit(
        {
            "E": sorted(set(E)),
            "F": sorted(set(F)),
            "E_le_F": le,
            "F_le_E": ge,
            "equal": le and ge,
        }
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirchlab",
        description="laboratory for the arithmetic-progression topology on the positive integers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", help="closure of a + b*N0 in normal form")
    p.add_argument("a", type=_positive_int)
    p.add_argument("b", type=_positive_int)
    p.add_argument("--window", nargs=2, type=_positive_int, metavar=("LO", "HI"))
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("filter", help="filter descriptor of a finite set")
    p.add_argument("elements", nargs="+", type=_positive_int)
    p.set_defaults(func=_cmd_filter)

    p = sub.add_parser("classify", help="coarse classification of a filter")
    p.add_argument("elements", nargs="+", type=_positive_int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("upset", help="FPrime filters above a FDoublePrime filter")
    p.add_argument("elements", nargs="+", type=_positive_int)
    p.set_defaults(func=_cmd_upset)

    p = sub.add_parser("realize", help="witness set for prescribed signature data")
    p.add_argument("--primes", type=_int_csv, required=True, metavar="P1,P2,...")
    p.add_argument("--alpha", type=_int_csv, required=True, metavar="K1,K2,...")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("gamma", help="bounded slice of the graph Gamma_p")
    p.add_argument("p", type=_positive_int)
    p.add_argument("--bound", type=_positive_int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=suite_names())
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", nargs="+", type=_positive_int, metavar="N")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("primes", help="prime utilities")
    psub = p.add_subparsers(dest="primes_command", required=True)
    pc = psub.add_parser("classify", help="shape of a prime relative to powers of two")
    pc.add_argument("p", type=_positive_int)
    pc.set_defaults(func=_cmd_primes)

    return parser


def dispatch(argv) -> int:
    if argv and argv[0] == "cmp":
        try:
            return _cmd_cmp(list(argv[1:]))
        except ValueError as err:
            print(f"error: {err}", file=sys.stderr)
            return 1
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
