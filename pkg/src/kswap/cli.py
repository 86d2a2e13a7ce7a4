"""Command-line interface.

Subcommands: solve, bench, gen, table dump, table verify.
Exit codes: 0 success, 1 usage error, 2 input error, 3 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .bench import (GenRnSpec, PRESETS, algorithm_names, build_report,
                    emit_csv, gen_collection, load_best_known, run_suite,
                    solve_one)
from .dimacs import DimacsError, emit_dimacs, from_dimacs
from .graph import ProblemMode
from .kernels import BACKEND_NAME
from .localsearch import InvariantViolation
from .micro import MicroTable, TABLE_SIZE, default_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _UsageError(ValueError):
    pass


def _build_parser() -> _Parser:
    parser = _Parser(prog="kswap",
                     description="Bit-parallel max-clique / max-independent-set "
                                 f"heuristics (kernel backend: {BACKEND_NAME})")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a single DIMACS instance")
    p_solve.add_argument("--input", required=True, help="DIMACS file")
    p_solve.add_argument("--algo", required=True, metavar="NAME",
                         help=f"one of: {', '.join(algorithm_names())}")
    p_solve.add_argument("--problem", choices=["mcp", "mis"], default="mcp")
    p_solve.add_argument("--check-invariants", action="store_true",
                         help="verify local-search state from scratch after "
                              "every swap (ls_1_k_* algorithms only)")

    p_bench = sub.add_parser("bench", help="run an instance x algorithm suite")
    p_bench.add_argument("--inputs", required=True, nargs="+",
                         help="DIMACS files and/or directories of them")
    p_bench.add_argument("--algos", default="all",
                         help="comma-separated algorithm names, or 'all'")
    p_bench.add_argument("--problem", choices=["mcp", "mis"], default="mcp")
    p_bench.add_argument("--best-known", metavar="CSV",
                         help="two-column CSV of instance name, best size")
    p_bench.add_argument("--jobs", type=int, default=1)
    p_bench.add_argument("--repeats", type=int, default=1,
                         help="time each pair K times, report the median")
    p_bench.add_argument("--out", required=True, help="output CSV ('-' = stdout)")

    p_gen = sub.add_parser("gen", help="generate a random DIMACS collection")
    group = p_gen.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", choices=sorted(PRESETS))
    group.add_argument("--spec", metavar="n_rpt,n0,nI,nN,d0,dI,dN,seed")
    p_gen.add_argument("--scale", type=int, default=1,
                       help="divide the order sweep by this factor")
    p_gen.add_argument("--dn-exclusive", action="store_true",
                       help="stop the density sweep strictly below dN "
                            "(default includes dN)")
    p_gen.add_argument("--seed", type=int, help="override the spec seed")
    p_gen.add_argument("--out", required=True, help="output directory")

    p_table = sub.add_parser("table", help="micro-solver lookup table tools")
    tsub = p_table.add_subparsers(dest="table_command", required=True)
    t_dump = tsub.add_parser("dump", help=f"write the raw {TABLE_SIZE}-byte table")
    t_dump.add_argument("--out", required=True)
    t_verify = tsub.add_parser("verify", help="check table correctness")
    t_verify.add_argument("--file", help="verify this dump instead of a fresh build")

    return parser


def _cmd_solve(args) -> int:
    if args.algo not in algorithm_names():
        raise _UsageError(f"unknown algorithm {args.algo!r}")
    with open(args.input) as fh:
        g = from_dimacs(fh)
    problem = ProblemMode.from_string(args.problem)
    result = solve_one(g, args.algo, problem,
                       check_invariants=args.check_invariants)
    print(f"size {len(result)}")
    print("vertices " + " ".join(str(v + 1) for v in result.members()))
    return EXIT_OK


def _resolve_inputs(paths: list[str]) -> list[Path]:
    out: list[Path] = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            out.extend(sorted(p for p in path.iterdir() if p.is_file()))
        elif path.exists():
            out.append(path)
        else:
            raise FileNotFoundError(f"input {path} does not exist")
    return out


def _cmd_bench(args) -> int:
    names = algorithm_names() if args.algos == "all" else [
        a.strip() for a in args.algos.split(",") if a.strip()]
    unknown = [a for a in names if a not in algorithm_names()]
    if unknown:
        raise _UsageError(f"unknown algorithm(s): {', '.join(unknown)}")
    if not names:
        raise _UsageError("no algorithms selected")
    sources = _resolve_inputs(args.inputs)
    if not sources:
        raise FileNotFoundError("no input instances found")
    best_known = load_best_known(args.best_known) if args.best_known else None
    records = run_suite(sources, names, ProblemMode.from_string(args.problem),
                        jobs=args.jobs, repeats=args.repeats)
    if not records:
        raise ValueError("no instance could be read")
    report = build_report(records, best_known)
    if args.out == "-":
        emit_csv(report, records, sys.stdout, repeats=args.repeats)
    else:
        with open(args.out, "w", newline="") as fh:
            emit_csv(report, records, fh, repeats=args.repeats)
        print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def _parse_spec(text: str) -> GenRnSpec:
    parts = text.split(",")
    if len(parts) != 8:
        raise _UsageError("--spec needs n_rpt,n0,nI,nN,d0,dI,dN,seed")
    try:
        return GenRnSpec(int(parts[0]), int(parts[1]), int(parts[2]),
                         int(parts[3]), float(parts[4]), float(parts[5]),
                         float(parts[6]), seed=int(parts[7]))
    except ValueError as exc:
        raise _UsageError(f"bad --spec value: {exc}") from None


def _cmd_gen(args) -> int:
    from dataclasses import replace

    spec = PRESETS[args.preset] if args.preset else _parse_spec(args.spec)
    if args.seed is not None:
        spec = replace(spec, seed=args.seed)
    if args.dn_exclusive:
        spec = replace(spec, d_stop_inclusive=False)
    spec = spec.scaled(args.scale)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    collection = gen_collection(spec)
    manifest = out_dir / "manifest.csv"
    with open(manifest, "w") as fh:
        fh.write(f"# spec: n_rpt={spec.n_rpt} orders={spec.orders()} "
                 f"densities={spec.densities()} "
                 f"d_stop_inclusive={spec.d_stop_inclusive} "
                 f"seed={spec.seed} scale={args.scale}\n")
        fh.write("name,n,m\n")
        for name, g in collection:
            with open(out_dir / f"{name}.clq", "w") as gfh:
                emit_dimacs(g, gfh)
            fh.write(f"{name},{g.n},{g.m}\n")
    print(f"wrote {len(collection)} instances to {out_dir}")
    return EXIT_OK


def _cmd_table(args) -> int:
    if args.table_command == "dump":
        default_table().dump(args.out)
        print(f"wrote {TABLE_SIZE}-byte table to {args.out}")
        return EXIT_OK
    # verify
    fresh = default_table()
    if args.file:
        loaded = MicroTable.load(args.file)
        if not (loaded.entries == fresh.entries).all():
            print(f"table verify: {args.file} differs from a fresh build",
                  file=sys.stderr)
            return EXIT_INPUT
        print(f"table verify: {args.file} OK ({TABLE_SIZE} entries)")
        return EXIT_OK
    bad = fresh.verify()
    if bad:
        print(f"table verify: {len(bad)} bad entries, first {bad[:10]}",
              file=sys.stderr)
        return EXIT_INVARIANT
    print(f"table verify: OK ({TABLE_SIZE} entries)")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "gen":
            return _cmd_gen(args)
        return _cmd_table(args)
    except _UsageError as exc:
        print(f"kswap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"kswap: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (DimacsError, OSError, ValueError) as exc:
        print(f"kswap: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
