"""Command-line interface: JSON in, CSV/JSON out, deterministic.

Exit codes: 0 success (and EQUIVALENT verdicts), 2 parse error, 3 resource
limit, 4 domain error, 10 NOT_EQUIVALENT, 11 UNDECIDED.  Errors go to
stderr only.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional

from . import serialize
from .cones import coplanar_functional
from .equivalence import EQUIVALENT, NOT_EQUIVALENT, decide
from .errors import FroblipError, ParseError, ResourceLimit
from .frobenius import (
    build_multiplicity,
    estimate_gamma,
    frobenius_number_1d,
    make_defining_data,
)
from .growth import analytic_gamma
from .lattice import parse_rational
from .selfsimilar import ExpThreshold, cut_set, matchable, matchable_search

EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_DOMAIN = 4
EXIT_NOT_EQUIVALENT = 10
EXIT_UNDECIDED = 11


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(doc, out: Optional[str]):
    _emit(json.dumps(doc, indent=2, sort_keys=True), out)


def _sweep_directions(system, n: int):
    """n directions inside the exponent cone.

    Dimension 2: evenly spaced angles on the arc spanned by the
    generators; dimension 3: Fibonacci-sphere points clipped to the cone;
    dimension 1: the single ray.
    """
    from .cones import cone_member
    from .frobenius import _snap

    s = system.dim
    cone = system.cone()
    if s == 1:
        return [(1.0,)]
    if s == 2:
        angles = sorted(math.atan2(v[1], v[0]) for v in system.exponents)
        lo, hi = angles[0], angles[-1]
        pad = (hi - lo) / (2 * n) if hi > lo else 0.0
        out = []
        for i in range(n):
            a = lo + pad + (hi - lo - 2 * pad) * (i / max(n - 1, 1))
            out.append((math.cos(a), math.sin(a)))
        return out
    golden = (1 + 5 ** 0.5) / 2
    out = []
    i = 0
    attempts = 0
    while len(out) < n and attempts < 100_000:
        z = 1 - 2 * (i + 0.5) / (4 * n * 10)
        r = math.sqrt(max(1 - z * z, 0.0))
        phi = 2 * math.pi * i / golden
        v = (r * math.cos(phi), r * math.sin(phi), z)
        if cone_member(tuple(_snap(x) for x in v), cone):
            out.append(v)
        i += 1
        attempts += 1
    if not out:
        raise FroblipError("no sweep directions found inside the cone")
    return out


def cmd_build(args) -> int:
    system = serialize.load_system(args.input)
    _emit_json(serialize.system_to_json(system), args.out)
    return 0


def cmd_gamma(args) -> int:
    system = serialize.load_system(args.system)
    data = make_defining_data(system.exponents, system.alpha)
    eta = coplanar_functional(system.exponents)
    want_analytic = args.mode in ("analytic", "both")
    want_empirical = args.mode in ("empirical", "both")
    if want_analytic and not eta.present:
        raise FroblipError("NotCoplanar: no analytic growth for this system")
    if args.theta:
        thetas = [tuple(float(t) for t in args.theta.split(","))]
    else:
        thetas = _sweep_directions(system, args.dirs)
    table = None
    rows = []
    for theta in thetas:
        norm = math.sqrt(sum(t * t for t in theta))
        theta = tuple(t / norm for t in theta)
        row = {"theta": theta, "gamma_analytic": None,
               "gamma_empirical": None, "stderr": None}
        if want_analytic:
            row["gamma_analytic"] = analytic_gamma(data, eta, theta)
        if want_empirical:
            est = estimate_gamma(data, theta, k_max=args.k_max,
                                 k_count=args.k_count, table=table)
            row["gamma_empirical"] = est.gamma_hat
            row["stderr"] = est.stderr
        rows.append(row)
    _emit("\n".join(serialize.sweep_csv_lines(rows, system.dim)), args.out)
    return 0


def cmd_decide(args) -> int:
    a = serialize.load_system(args.a)
    b = serialize.load_system(args.b)
    verdict = decide(a, b, p_q_bound=args.pq_bound,
                     diagnostics=args.diagnostics)
    _emit_json(serialize.verdict_to_json(verdict), args.out)
    if verdict.result == EQUIVALENT:
        return 0
    if verdict.result == NOT_EQUIVALENT:
        return EXIT_NOT_EQUIVALENT
    return EXIT_UNDECIDED


def cmd_multiplicity(args) -> int:
    system = serialize.load_system(args.system)
    data = make_defining_data(system.exponents, system.alpha)
    table = build_multiplicity(data, Fraction(args.bound))
    _emit("\n".join(serialize.table_csv_lines(table)), args.out)
    return 0


def cmd_cutset(args) -> int:
    system = serialize.load_system(args.system)
    if args.t is not None:
        t = parse_rational(args.t)
    elif args.exp_k is not None:
        t = ExpThreshold(Fraction(args.exp_k))
    else:
        raise ParseError("cutset needs --t or --exp-k")
    cs = cut_set(system, t)
    _emit_json(serialize.cutset_to_json(cs), args.out)
    return 0


def cmd_matchable(args) -> int:
    a = serialize.load_system(args.a)
    b = serialize.load_system(args.b)
    if args.t is not None:
        t = parse_rational(args.t)
    elif args.exp_k is not None:
        t = ExpThreshold(Fraction(args.exp_k))
    else:
        raise ParseError("matchable needs --t or --exp-k")
    if args.search:
        report = matchable_search(a, b, t, m0_limit=args.m0_limit)
    else:
        report = matchable(a, b, t, args.m0)
    _emit_json(serialize.match_report_to_json(report), args.out)
    return 0


def cmd_frobenius1d(args) -> int:
    g = frobenius_number_1d(args.values)
    _emit(str(g), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="froblip",
        description="Exact growth invariants and Lipschitz-equivalence "
                    "decisions for dust-like self-similar sets.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="parse ratios, emit the built system")
    b.add_argument("input")
    b.add_argument("-o", "--out")
    b.set_defaults(func=cmd_build)

    g = sub.add_parser("gamma", help="directional growth sweep as CSV")
    g.add_argument("system")
    g.add_argument("--dirs", type=int, default=9)
    g.add_argument("--theta", help="comma-separated direction components")
    g.add_argument("--analytic", dest="mode", action="store_const",
                   const="analytic", default="both")
    g.add_argument("--empirical", dest="mode", action="store_const",
                   const="empirical")
    g.add_argument("--both", dest="mode", action="store_const", const="both")
    g.add_argument("--k-max", type=float, default=120.0)
    g.add_argument("--k-count", type=int, default=12)
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_gamma)

    d = sub.add_parser("decide", help="equivalence verdict as JSON")
    d.add_argument("a")
    d.add_argument("b")
    d.add_argument("--pq-bound", type=int, default=24)
    d.add_argument("--diagnostics", action="store_true")
    d.add_argument("-o", "--out")
    d.set_defaults(func=cmd_decide)

    m = sub.add_parser("multiplicity", help="exact count table as CSV")
    m.add_argument("system")
    m.add_argument("--bound", required=True)
    m.add_argument("-o", "--out")
    m.set_defaults(func=cmd_multiplicity)

    c = sub.add_parser("cutset", help="threshold cut-set as JSON")
    c.add_argument("system")
    c.add_argument("--t")
    c.add_argument("--exp-k", dest="exp_k")
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_cutset)

    mt = sub.add_parser("matchable", help="cut-set matchability as JSON")
    mt.add_argument("a")
    mt.add_argument("b")
    mt.add_argument("--t")
    mt.add_argument("--exp-k", dest="exp_k")
    mt.add_argument("--m0", type=int, default=8)
    mt.add_argument("--search", action="store_true")
    mt.add_argument("--m0-limit", dest="m0_limit", type=int, default=64)
    mt.add_argument("-o", "--out")
    mt.set_defaults(func=cmd_matchable)

    fr = sub.add_parser("frobenius1d", help="classical Frobenius number")
    fr.add_argument("values", type=int, nargs="+")
    fr.add_argument("-o", "--out")
    fr.set_defaults(func=cmd_frobenius1d)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except FroblipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
