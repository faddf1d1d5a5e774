"""Command-line front end.

Exit codes are a stable contract: 0 for success (for `check`, an
irreducible pair), 1 for a negative or failed result (a reducible pair,
an infeasible derivation, a resource limit), 2 for unparseable input.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from . import __version__
from .cache import entry_path, load_report, store_report
from .core import Pair
from .derivation import (
    DerivationError,
    DerivationPlan,
    allocate_marbles,
    derive,
    derive_chain,
    derive_product,
    split_index,
)
from .enumeration import (
    EnumConfig,
    compute_ell,
    enumerate_irreducible,
    enumerate_multisets,
    extremal_pairs,
    verify_theorem_bounds,
)
from .formats import (
    FormatError,
    format_multiset,
    format_pair,
    pair_to_json,
    parse_chain,
    parse_pair,
    parse_plan,
)
from .irreducibility import is_irreducible, is_irreducible_naive, reducibility_witness

_REPORT_SEPARATORS = (",", ":")


def _print_report(obj: dict) -> None:
    print(json.dumps(obj, separators=_REPORT_SEPARATORS))


def cmd_check(args: argparse.Namespace) -> int:
    pair = parse_pair(args.pair)
    irreducible = is_irreducible(pair)
    print(f"irreducible: {'true' if irreducible else 'false'}")
    print(f"k-threshold: {pair.max_element}")
    if irreducible:
        return 0
    if not pair.balanced:
        print(f"unbalanced: sum {pair.a.sigma} != {pair.b.sigma}")
    else:
        witness = reducibility_witness(pair)
        print(
            f"witness: {format_multiset(witness.a_sub)} | "
            f"{format_multiset(witness.b_sub)}"
        )
    return 1


def cmd_derive(args: argparse.Namespace) -> int:
    pair = parse_pair(args.pair)
    if args.product is not None:
        plan = DerivationPlan.of(parse_plan(args.product))
        result = derive_product(pair, plan)
    else:
        result = derive_chain(pair, parse_chain(args.chain))
    print(format_pair(result))
    print(f"irreducible: {'true' if is_irreducible(result) else 'false'}")
    return 0


def cmd_ell(args: argparse.Namespace) -> int:
    cfg = EnumConfig(k=args.k, sum_cap=args.sum_cap, mode=args.mode)
    if not args.no_cache:
        cached = load_report(cfg.k, cfg.mode, cfg.sum_cap, __version__)
        if cached is not None:
            _print_report(cached)
            print(
                f"cache: hit {entry_path(cfg.k, cfg.mode, cfg.sum_cap)}",
                file=sys.stderr,
            )
            return 0
    report = compute_ell(cfg, workers=args.workers)
    _print_report(report.to_obj())
    if args.no_cache:
        print("cache: off", file=sys.stderr)
    else:
        path = store_report(cfg.k, cfg.mode, cfg.sum_cap, __version__, report.to_obj())
        print(f"cache: stored {path}", file=sys.stderr)
    return 0


def _emit_pairs(pairs, fmt: str, k: int) -> None:
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["k", "sum", "length", "A", "B"])
        for p in pairs:
            writer.writerow(
                [k, p.a.sigma, p.length, format_multiset(p.a), format_multiset(p.b)]
            )
    elif fmt == "json":
        for p in pairs:
            print(pair_to_json(p))
    else:
        for p in pairs:
            print(format_pair(p))


def cmd_enumerate(args: argparse.Namespace) -> int:
    window = None
    if args.min_len is not None or args.max_len is not None:
        window = (args.min_len or 1, args.max_len or 10**9)
    cfg = EnumConfig(
        k=args.k, sum_cap=args.sum_cap, length_window=window, mode=args.mode
    )
    _emit_pairs(enumerate_irreducible(cfg, workers=args.workers), args.format, args.k)
    return 0


def cmd_extremal(args: argparse.Namespace) -> int:
    cfg = EnumConfig(k=args.k, sum_cap=args.sum_cap, mode=args.mode)
    _emit_pairs(extremal_pairs(cfg), args.format, args.k)
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    """Reduced-scale sanity suites: oracle agreement, derivation
    preservation, and allocation invariants."""
    ok = True

    mismatches = 0
    checked = 0
    for total in range(1, 11):
        msets = list(enumerate_multisets(5, total))
        for i, a in enumerate(msets):
            for b in msets[i:]:
                p = Pair(a, b)
                checked += 1
                if is_irreducible(p) != is_irreducible_naive(p):
                    mismatches += 1
    ok &= mismatches == 0
    print(
        f"oracle-equivalence: {'ok' if mismatches == 0 else 'FAIL'} "
        f"({checked} pairs, {mismatches} mismatches)"
    )

    pool = [
        p
        for p in enumerate_irreducible(EnumConfig(k=5, sum_cap=25, mode="pruned"))
        if p.length > 2
    ]
    rng = random.Random(20240901)
    violations = 0
    samples = 2000
    for _ in range(samples):
        p = rng.choice(pool)
        a = rng.choice(p.a.values())
        b = rng.choice(p.b.values())
        derived = derive(p, a, b)
        if not is_irreducible(derived):
            violations += 1
        if derived.max_element > p.max_element:
            violations += 1
    ok &= violations == 0
    print(
        f"derivation-preservation: {'ok' if violations == 0 else 'FAIL'} "
        f"({samples} samples, {violations} violations)"
    )

    bad = 0
    trials = 2000
    for _ in range(trials):
        n = rng.randint(1, 5)
        x = [rng.randint(1, 9) for _ in range(n)]
        y = [rng.randint(1, min(9, sum(x)))]
        while sum(y) <= sum(x):
            y.append(rng.randint(1, 9))
        t = split_index(x, y)
        alloc = allocate_marbles(x, y, t)
        col = [sum(alloc.z[i][j] for i in range(n)) for j in range(t)]
        if col != y[:t]:
            bad += 1
        if any(r < 0 for r in alloc.residuals()):
            bad += 1
        if not y[t] > sum(alloc.residuals()):
            bad += 1
    ok &= bad == 0
    print(
        f"allocation-invariants: {'ok' if bad == 0 else 'FAIL'} "
        f"({trials} instances, {bad} violations)"
    )

    bounds_bad = sum(
        0 if verify_theorem_bounds(p) else 1
        for p in enumerate_irreducible(EnumConfig(k=4, sum_cap=16, mode="brute"))
    )
    ok &= bounds_bad == 0
    print(f"length-bounds: {'ok' if bounds_bad == 0 else 'FAIL'} ({bounds_bad} violations)")

    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zspairs",
        description="Irreducible zero-sum multiset pairs: check, derive, survey.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide irreducibility of a pair")
    p_check.add_argument("pair", help="pair in 'A | B' text form, e.g. '7^3 1^2 | 6^3 5'")
    p_check.set_defaults(func=cmd_check)

    p_derive = sub.add_parser("derive", help="apply a product plan or a chain")
    p_derive.add_argument("pair", help="pair in 'A | B' text form")
    group = p_derive.add_mutually_exclusive_group(required=True)
    group.add_argument("--product", help="simultaneous plan, e.g. '7,6^2;7,5'")
    group.add_argument("--chain", help="sequential steps, e.g. '5,2;3,2'")
    p_derive.set_defaults(func=cmd_derive)

    p_ell = sub.add_parser("ell", help="survey the maximum pair length for k")
    p_ell.add_argument("k", type=int)
    p_ell.add_argument("--mode", choices=["brute", "pruned"], default="brute")
    p_ell.add_argument("--sum-cap", type=int, default=None)
    p_ell.add_argument("--no-cache", action="store_true")
    p_ell.add_argument("--workers", type=int, default=1)
    p_ell.set_defaults(func=cmd_ell)

    p_enum = sub.add_parser("enumerate", help="list irreducible pairs for k")
    p_enum.add_argument("k", type=int)
    p_enum.add_argument("--mode", choices=["brute", "pruned"], default="brute")
    p_enum.add_argument("--sum-cap", type=int, default=None)
    p_enum.add_argument("--min-len", type=int, default=None)
    p_enum.add_argument("--max-len", type=int, default=None)
    p_enum.add_argument(
        "--format", choices=["json", "csv", "plain"], default="plain"
    )
    p_enum.add_argument("--workers", type=int, default=1)
    p_enum.set_defaults(func=cmd_enumerate)

    p_ext = sub.add_parser(
        "extremal", help="list the maximum-length irreducible pairs for k"
    )
    p_ext.add_argument("k", type=int)
    p_ext.add_argument("--mode", choices=["brute", "pruned"], default="brute")
    p_ext.add_argument("--sum-cap", type=int, default=None)
    p_ext.add_argument(
        "--format", choices=["json", "csv", "plain"], default="plain"
    )
    p_ext.set_defaults(func=cmd_extremal)

    p_self = sub.add_parser("selftest", help="run reduced-scale sanity suites")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except FormatError as e:
        print(f"parse error {e}", file=sys.stderr)
        return 2
    except DerivationError as e:
        where = f" at step {e.step}" if e.step is not None else ""
        print(f"error{where}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
