"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error, 3 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from dompoly import engine, families, oracle
from dompoly.graph import DomainError, Family, build_family, read_edge_list
from dompoly.polynomial import DomPolynomial, KSetTriangle
from dompoly.verify import CHECKS, VerifyConfig, run_checks

log = logging.getLogger("dompoly")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

SEQUENCES = ("paths-triangle", "cycles-triangle", "wheels-triangle", "tribonacci")


class UsageError(Exception):
    pass


def _cap(text: str) -> int:
    v = int(text)
    if not 1 <= v <= oracle.MAX_CAP:
        raise argparse.ArgumentTypeError(f"cap must be in 1..{oracle.MAX_CAP}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _uint(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# --------------------------------------------------------------------------
# poly


def cmd_poly(args) -> int:
    if (args.family is None) == (args.edges is None):
        raise UsageError("give exactly one of --family or --edges")
    if args.family is not None:
        if args.n is None:
            raise UsageError("--family needs --n")
        graph = build_family(args.family, args.n)
    else:
        graph = read_edge_list(Path(args.edges).read_text())

    if args.method == "oracle":
        p = oracle.brute_force_poly(graph, cap=args.cap, workers=args.threads)
    elif args.method == "engine":
        p = engine.graph_poly(graph)
    else:
        if args.family is None:
            raise UsageError("--method formula needs a named --family")
        p = families.family_poly(args.family, args.n)
    print(render_poly(p, args.convention, args.format))
    return EXIT_OK


def render_poly(p: DomPolynomial, convention: str, fmt: str) -> str:
    if fmt == "json":
        return _dump(p.to_json_obj(convention))
    if fmt == "csv":
        cs = p.gamma_coeffs if convention == "gamma" else p.coeffs
        return "\n".join(["power,coefficient"] + [f"{i},{c}" for i, c in enumerate(cs)])
    return p.render(convention)


# --------------------------------------------------------------------------
# table


def _triangle(family: str, max_n: int, source: str, cap: int) -> KSetTriangle:
    if source == "oracle":
        return oracle.kset_triangle(family, max_n, cap=cap)
    return families.formula_triangle(family, max_n)


def cmd_table(args) -> int:
    tri = _triangle(args.family, args.max_n, args.source, args.cap)
    if args.format == "json":
        print(_dump({
            "family": tri.family,
            "first_n": tri.first_n,
            "rows": [[str(c) for c in r] for r in tri.rows],
        }))
    else:
        sep = "," if args.format == "csv" else " "
        for r in tri.rows:
            print(sep.join(str(c) for c in r))
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    names = [c.strip() for c in args.checks.split(",")] if args.checks else None
    if names:
        bad = [n for n in names if n not in CHECKS]
        if bad:
            raise UsageError(f"unknown checks {bad}; choose from {sorted(CHECKS)}")
    cfg = VerifyConfig.acceptance(args.seed) if args.profile == "acceptance" else VerifyConfig(seed=args.seed)
    cfg.cap = args.cap
    cfg.workers = args.threads
    report = run_checks(cfg, names)
    print(_dump(report.to_json_obj()))
    bad = report.first_failure()
    if bad is not None:
        print(f"FAIL {bad.name}: {_dump(bad.counterexample)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# --------------------------------------------------------------------------
# oeis


def sequence_terms(tag: str, *, count: int | None, count_rows: int | None, order: str,
                   source: str = "formula", cap: int = oracle.DEFAULT_CAP) -> list[int]:
    if tag == "tribonacci":
        return [families.tribonacci(n) for n in range(count or 10)]
    family = {"paths-triangle": "path", "cycles-triangle": "cycle", "wheels-triangle": "wheel"}[tag]
    rows = count_rows or 10
    first = 4 if family == "wheel" else 1
    tri = _triangle(family, first + rows - 1, source, cap)
    terms = tri.read_rows() if order == "rows" else tri.read_antidiagonals()
    return terms[:count] if count else terms


def cmd_oeis(args) -> int:
    terms = sequence_terms(args.tag, count=args.count, count_rows=args.count_rows,
                           order=args.order, source=args.source, cap=args.cap)
    if args.format == "json":
        print(_dump({"sequence": args.tag, "order": args.order, "terms": [str(t) for t in terms]}))
    else:
        sep = "," if args.format == "csv" else " "
        print(sep.join(str(t) for t in terms))
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dompoly", description="Domination polynomials of graphs.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt_default):
        p.add_argument("--format", choices=("json", "csv", "plain"), default=fmt_default)
        p.add_argument("--cap", type=_cap, default=oracle.DEFAULT_CAP, help="oracle vertex cap (<= 30)")
        p.add_argument("--threads", type=_positive, default=1, help="oracle worker threads")

    p = sub.add_parser("poly", help="domination polynomial of one graph")
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--n", type=_positive)
    p.add_argument("--edges", metavar="FILE", help="edge list: n, then 'i j' per line")
    p.add_argument("--method", choices=("oracle", "engine", "formula"), default="engine")
    p.add_argument("--convention", choices=("gamma", "D"), default="gamma")
    common(p, "plain")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", help="k-set triangle for a family")
    p.add_argument("--family", choices=("path", "cycle", "wheel"), required=True)
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--source", choices=("formula", "oracle"), default="formula")
    common(p, "csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check oracle, engine and formulas")
    p.add_argument("--checks", help=f"comma-separated subset of: {','.join(sorted(CHECKS))}")
    p.add_argument("--seed", type=_uint, default=0)
    p.add_argument("--profile", choices=("quick", "acceptance"), default="quick")
    common(p, "json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis", help="print sequence terms")
    p.add_argument("tag", choices=SEQUENCES)
    p.add_argument("--count", type=_positive, help="number of terms")
    p.add_argument("--count-rows", type=_positive, help="triangle rows to read")
    p.add_argument("--order", choices=("rows", "antidiagonals"), default="rows")
    p.add_argument("--source", choices=("formula", "oracle"), default="formula")
    common(p, "plain")
    p.set_defaults(func=cmd_oeis)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except oracle.ResourceError as exc:
        print(f"dompoly: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, DomainError, OSError) as exc:
        print(f"dompoly: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
