"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 usage, 3 memory budget,
4 certificate failed self-verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import formats
from .bounds import (
    NU_CHECK_START,
    bounds_table,
    check_nu_inequality,
    max_nu_below,
    nu,
)
from .cache import EXACT, MODULAR, DimensionCache
from .golden import GoldenTables, golden_tables
from .partitions import Partition, count_partitions
from .rank import (
    DEFAULT_PRIMES,
    MemoryBudgetError,
    build_matrix,
    in_span,
    nullspace_certificates,
    rank_exact,
    rank_modular,
)
from .series import series_row
from .tables import compute_tables, diff_tables, u_minus_d

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE, EXIT_CERT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _dimension(n: int, method: str, primes, budget, cache: DimensionCache | None):
    """(D, method label, primes) for one n, using and filling the cache."""
    if cache is not None:
        hit = cache.get(n, exact_only=(method == "exact"))
        if hit is not None:
            return hit.D, hit.method, hit.primes
    if method == "exact":
        D, label, used = rank_exact(build_matrix(n, budget)), EXACT, ()
    else:
        result = rank_modular(n, primes)
        if not result.consensus:
            print(f"warning: primes disagree at n={n}: {result.ranks}", file=sys.stderr)
        D, label, used = result.rank, MODULAR, result.primes
        if not result.consensus:
            return D, "modular-inconsistent", used
    if cache is not None:
        cache.put(n, D, label, used)
    return D, label, used


def _cache(args) -> DimensionCache | None:
    return None if args.no_cache else DimensionCache(args.cache)


def cmd_dims(args) -> int:
    rows = []
    cache = _cache(args)
    for n in range(1, args.n_max + 1):
        D, label, used = _dimension(n, args.method, args.primes, args.memory_budget, cache)
        rows.append((n, D, label, tuple(used)))
    emit = {"csv": formats.dims_to_csv, "json": formats.dims_to_json, "table": formats.dims_to_table}
    sys.stdout.write(emit[args.format](rows))
    return EXIT_OK


def cmd_bounds(args) -> int:
    D_values = {}
    labels = set()
    cache = _cache(args)
    if args.include_d:
        for n in range(1, args.n_max + 1):
            D, label, _ = _dimension(n, args.method, args.primes, args.memory_budget, cache)
            D_values[n] = D
            labels.add(label)
    elif cache is not None:
        D_values = {n: e.D for n, e in cache.load().items() if 1 <= n <= args.n_max}
    records = bounds_table(args.n_max, D_values)
    violations = [v for r in records for v in r.chain_violations()]
    if args.format == "csv":
        sys.stdout.write(formats.bounds_to_csv(records))
        for v in violations:
            print(f"chain violation: {v}", file=sys.stderr)
    elif args.format == "json":
        sys.stdout.write(formats.bounds_to_json(records, violations))
    else:
        sys.stdout.write(formats.bounds_to_table(records))
        print(f"chain violations: {len(violations)}")
        for v in violations:
            print(f"  {v}")
    return EXIT_MISMATCH if violations else EXIT_OK


def _relation_dicts(path: Path, n: int) -> list[dict[Partition, int]]:
    doc = json.loads(path.read_text())
    if int(doc["n"]) != n:
        raise UsageError(f"check file is for n={doc['n']}, not {n}")
    return [
        {Partition.from_parts(t["partition"]): int(t["coeff"]) for t in r["terms"]}
        for r in doc["relations"]
    ]


def cmd_relations(args) -> int:
    certs = nullspace_certificates(args.n)
    info = sys.stderr if args.format == "json" else sys.stdout
    if args.format == "json":
        sys.stdout.write(formats.certificates_to_json(args.n, certs))
    else:
        sys.stdout.write(formats.certificates_to_table(certs))
    print(f"count = P({args.n}) - D({args.n}) = {len(certs)}", file=info)
    if not all(c.verified for c in certs):
        print("error: a certificate failed self-verification", file=sys.stderr)
        return EXIT_CERT
    if args.check_file:
        status = EXIT_OK
        for i, rel in enumerate(_relation_dicts(Path(args.check_file), args.n), 1):
            ok = in_span(rel, certs)
            print(f"check relation {i}: {'in span' if ok else 'NOT in span'}", file=info)
            if not ok:
                status = EXIT_MISMATCH
        return status
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    if args.golden:
        golden = GoldenTables.from_json_obj(json.loads(Path(args.golden).read_text()))
    else:
        golden = golden_tables()
    computed = compute_tables(args.n_max)
    gaps = u_minus_d(computed)
    print("U-D nonzero at: " + (", ".join(f"n={n} (gap {g})" for n, g in gaps.items()) or "none"))
    mismatches = diff_tables(computed, golden)
    if mismatches:
        print(f"MISMATCH: {mismatches[0]}")
        if len(mismatches) > 1:
            print(f"({len(mismatches)} mismatches in total)")
            for m in mismatches[1:]:
                print(f"  {m}")
        return EXIT_MISMATCH
    print(f"tables 1 and 2 reproduced for n = 1..{args.n_max}")
    return EXIT_OK


def cmd_nu(args) -> int:
    status = EXIT_OK
    for m in args.decompose or ():
        print(nu(m))
    if args.max_below is not None:
        best, where = max_nu_below(args.max_below)
        print(f"max ν = {best} at m = {where}")
    if args.verify:
        lo, hi = args.verify
        if lo < NU_CHECK_START:
            raise UsageError(f"--verify range must start at m >= {NU_CHECK_START}")
        report = check_nu_inequality(lo, hi)
        print(
            f"checked {lo}..{hi}: {len(report.violations)} violations, "
            f"min slack {report.min_slack:.4f} at m = {report.min_slack_at}"
        )
        for m in report.violations[:20]:
            print(f"  violation at m = {m}: ν = {nu(m).nu}")
        if report.violations:
            status = EXIT_MISMATCH
    return status


def _parse_lambda(text: str) -> Partition:
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"not a partition: {text!r}")
    if not parts or any(p < 1 for p in parts):
        raise UsageError(f"parts must be positive integers: {text!r}")
    lam = Partition.from_parts(parts)
    if list(lam.parts) != parts:
        print(f"warning: sorted parts to {','.join(map(str, lam.parts))}", file=sys.stderr)
    return lam


def cmd_character(args) -> int:
    lam = _parse_lambda(args.lam)
    values = series_row(lam, args.n_max).coeffs
    if args.format == "json":
        print(json.dumps({"lambda": list(lam.parts), "values": list(values)}))
    elif args.format == "csv":
        sys.stdout.write("N,chi\n" + "".join(f"{N},{v}\n" for N, v in enumerate(values)))
    else:
        print(",".join(map(str, values)))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    compute = argparse.ArgumentParser(add_help=False)
    compute.add_argument("--method", choices=("modular", "exact"), default="modular")
    compute.add_argument("--primes", type=_primes, default=DEFAULT_PRIMES)
    compute.add_argument("--cache", default="./symspan-cache.json")
    compute.add_argument("--no-cache", action="store_true")
    compute.add_argument("--memory-budget", type=float, default=None, metavar="MiB")

    parser = _Parser(prog="symspan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dims", parents=[common, compute], help="D(n) for n = 1..n_max")
    p.add_argument("--n-max", type=_positive, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("bounds", parents=[common, compute], help="U, E, G, H per n")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--include-d", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("relations", parents=[common], help="verified relation certificates")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--check-file", default=None)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("verify-tables", help="recompute and diff the published tables")
    p.add_argument("--n-max", type=_positive, default=23)
    p.add_argument("--golden", default=None, help="alternate golden JSON")
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("nu", help="greedy decompositions and the nu inequality")
    p.add_argument("--decompose", type=int, nargs="+", metavar="M")
    p.add_argument("--verify", type=int, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--max-below", type=int, default=None, metavar="B")
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("character", parents=[common], help="chi_N on a lambda-cycle")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_character)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"symspan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"symspan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryBudgetError as exc:
        print(f"symspan: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    raise SystemExit(main())
