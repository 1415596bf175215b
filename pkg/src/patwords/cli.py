"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
3 oracle budget exceeded, 4 unsupported pattern.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from . import formulas as fm
from .oracle import BudgetExceeded, EnumerationBudget, brute_count, brute_occpoly
from .patterns import (
    PatternError,
    all_patterns,
    as_pattern,
    format_pattern,
    parse_pattern,
    symmetry_class,
)
from .verify import build_report
from .wilf import classify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def _budget(args) -> EnumerationBudget:
    base = EnumerationBudget.from_env(workers=args.jobs)
    if args.max_states is not None:
        return EnumerationBudget(args.max_states, args.jobs)
    return base


def _k_values(raw: str) -> list[int]:
    out = []
    for part in raw.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if any(k < 0 for k in out):
        raise ValueError("k must be non-negative")
    return out


def cmd_count(args) -> int:
    tau = parse_pattern(args.pattern)
    budget = _budget(args)
    if args.source == "oracle":
        value = brute_count(tau, args.n, args.k, budget)
    else:
        value = fm.dispatch_or_oracle(tau, args.n, args.k, budget)
    if args.json:
        print(_dump({"pattern": format_pattern(tau), "n": args.n, "k": args.k, "count": value}))
    else:
        print(value)
    return EXIT_OK


def cmd_series(args) -> int:
    tau = parse_pattern(args.pattern)
    if not fm.has_formula(tau):
        raise fm.Unsupported(f"no formula for pattern {format_pattern(tau)}")
    rows = [(k, fm.series_for(tau, k, args.order)) for k in _k_values(args.k)]
    if args.format == "json":
        for k, coeffs in rows:
            print(_dump({"pattern": format_pattern(tau), "k": k, "order": args.order, "coefficients": coeffs}))
    else:
        for _, coeffs in rows:
            print("\t".join(str(c) for c in coeffs))
    return EXIT_OK


def _formula_poly(tau, n, k):
    if len(tau.blocks) == 1 and set(tau.letters) == {1} and tau.length >= 2:
        return fm.occpoly_all_ones(tau.length, n, k)
    if as_pattern("12") in symmetry_class(tau):
        return fm.occpoly_12(n, k)
    raise fm.Unsupported(f"no occurrence-polynomial formula for {format_pattern(tau)}; use --source oracle")


def cmd_poly(args) -> int:
    tau = parse_pattern(args.pattern)
    if args.source == "oracle":
        poly = brute_occpoly(tau, args.n, args.k, _budget(args))
    else:
        poly = _formula_poly(tau, args.n, args.k)
    print(poly)
    print(_dump({
        "pattern": format_pattern(tau), "n": args.n, "k": args.k, "source": args.source,
        "coefficients": {str(e): v for e, v in poly.coefficients.items()},
    }))
    return EXIT_OK


def _pattern_list(args):
    if args.all_3letter:
        pats = all_patterns(3)
    elif args.patterns:
        pats = [parse_pattern(p.strip()) for p in args.patterns.split(",") if p.strip()]
    else:
        pats = [parse_pattern(p) for p in fm.REPRESENTATIVES]
    if getattr(args, "canonical_only", False):
        pats = sorted({symmetry_class(p).canonical for p in pats}, key=format_pattern)
    return pats


def cmd_classify(args) -> int:
    part = classify(_pattern_list(args), args.max_n, args.max_k, args.source, _budget(args), jobs=args.jobs)
    print(_dump({"version": __version__, **part.as_dict()}))
    return EXIT_OK


def cmd_verify(args) -> int:
    pats = _pattern_list(args) if (args.patterns or args.all_3letter) else None
    report = build_report(pats, args.max_n, args.max_k, _budget(args), checks=not args.no_display_checks)
    print(_dump(report))
    return EXIT_OK if report["ok"] else EXIT_MISMATCH


def _nonneg(raw: str) -> int:
    v = int(raw)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="patwords", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"patwords {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-states", type=int, default=None,
                        help="oracle cap on k^n (overrides PATWORDS_MAX_STATES)")
    common.add_argument("--jobs", type=int, default=1, help="oracle worker threads")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="avoidance count f(n,k)")
    c.add_argument("--pattern", required=True)
    c.add_argument("--n", type=_nonneg, required=True)
    c.add_argument("--k", type=_nonneg, required=True)
    c.add_argument("--source", choices=("formula", "oracle"), default="formula")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("series", parents=[common], help="coefficients of F(x;k)")
    s.add_argument("--pattern", required=True)
    s.add_argument("--k", required=True, help="k, a comma list, or a range lo..hi")
    s.add_argument("--order", type=_nonneg, required=True)
    s.add_argument("--format", choices=("tsv", "json"), default="tsv")
    s.set_defaults(func=cmd_series)

    q = sub.add_parser("poly", parents=[common], help="occurrence polynomial F(n,k;q)")
    q.add_argument("--pattern", required=True)
    q.add_argument("--n", type=_nonneg, required=True)
    q.add_argument("--k", type=_nonneg, required=True)
    q.add_argument("--source", choices=("formula", "oracle"), default="formula")
    q.set_defaults(func=cmd_poly)

    for name, func, help_ in (("classify", cmd_classify, "empirical Wilf classes"),
                              ("verify", cmd_verify, "formula vs oracle sweep")):
        w = sub.add_parser(name, parents=[common], help=help_)
        w.add_argument("--max-n", type=_nonneg, default=6)
        w.add_argument("--max-k", type=_nonneg, default=4)
        g = w.add_mutually_exclusive_group()
        g.add_argument("--patterns", help="comma-separated pattern list")
        g.add_argument("--all-3letter", action="store_true", help="every generalized pattern of length 3")
        w.add_argument("--canonical-only", action="store_true", help="one pattern per symmetry class")
        if name == "classify":
            w.add_argument("--source", choices=("formula", "oracle"), default="formula")
        else:
            w.add_argument("--no-display-checks", action="store_true",
                           help="skip the alternative-closed-form cross-checks")
        w.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PatternError, ValueError) as e:
        if isinstance(e, fm.Unsupported):
            print(f"patwords: unsupported: {e}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        print(f"patwords: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"patwords: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
