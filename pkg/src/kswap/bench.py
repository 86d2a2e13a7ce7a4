"""Benchmark harness: suite runner, relative measures, generator, CSV.

Per (instance, algorithm) pair one record is produced.  Timing covers the
algorithm's own data structures and the solve itself; reading the file,
building the adjacency matrix, complementing for independent-set mode and
building the shared lookup table are common to all algorithms and stay
outside the clock.
"""
from __future__ import annotations

import csv
import logging
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import IO, Callable, Sequence

import numpy as np

from .dimacs import from_dimacs
from .graph import Graph, ProblemMode, VertexSet, complement, gen_random
from .heuristics import HeuristicKind, run_heuristic
from .localsearch import ls_1_k
from .micro import MicroTable, default_table

__all__ = [
    "BenchRecord",
    "MeasureReport",
    "GenRnSpec",
    "PRESETS",
    "algorithm_names",
    "solve_one",
    "run_suite",
    "relative_solution_measure",
    "relative_time_measure",
    "build_report",
    "gen_collection",
    "emit_csv",
    "load_best_known",
]

log = logging.getLogger("kswap.bench")

CSV_HEADER = ["instance", "n", "m", "problem", "algorithm",
              "solution_size", "time_ns", "ratio_solution", "ratio_time"]


@dataclass
class BenchRecord:
    instance: str
    n: int
    m: int
    problem: str
    algorithm: str
    solution_size: int
    time_ns: int


def _solvers() -> dict[str, Callable[[Graph, MicroTable], VertexSet]]:
    table: dict[str, Callable[[Graph, MicroTable], VertexSet]] = {}
    for kind in HeuristicKind:
        table[kind.value] = (
            lambda g, t, k=kind: run_heuristic(k, g, g.full_set()))
    for kind in HeuristicKind:
        table[f"ls_1_k_{kind.value}"] = (
            lambda g, t, k=kind: ls_1_k(t, g, g.full_set(), k))
    return table


_SOLVERS = _solvers()


def algorithm_names() -> list[str]:
    """Registered CLI algorithm names, heuristics first."""
    return list(_SOLVERS)


def solve_one(g: Graph, algorithm: str, problem: ProblemMode = ProblemMode.MAX_CLIQUE,
              table: MicroTable | None = None,
              check_invariants: bool = False) -> VertexSet:
    """Solve one instance; MIS mode dispatches on the materialized complement."""
    if algorithm not in _SOLVERS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if problem is ProblemMode.MAX_INDEPENDENT_SET:
        g = complement(g)
    if algorithm.startswith("ls_1_k_"):
        if table is None:
            table = default_table()
        kind = HeuristicKind.from_string(algorithm[len("ls_1_k_"):])
        return ls_1_k(table, g, g.full_set(), kind, check_invariants)
    return _SOLVERS[algorithm](g, table)


def _load_instance(source) -> tuple[str, Graph] | None:
    if isinstance(source, tuple):
        return source
    path = Path(source)
    try:
        with open(path) as fh:
            return path.stem, from_dimacs(fh)
    except (OSError, ValueError) as exc:
        log.warning("skipping unreadable instance %s: %s", path, exc)
        return None


def run_suite(instances: Sequence, algorithms: Sequence[str],
              problem: ProblemMode = ProblemMode.MAX_CLIQUE, *,
              jobs: int = 1, repeats: int = 1) -> list[BenchRecord]:
    """One BenchRecord per (instance, algorithm), in deterministic order.

    Instances are file paths or (name, Graph) pairs; unreadable files are
    logged and skipped.  repeats > 1 reports the median elapsed time.
    """
    for name in algorithms:
        if name not in _SOLVERS:
            raise ValueError(f"unknown algorithm {name!r}")
    table = default_table()  # shared, excluded from per-algorithm timing
    tiny = Graph.from_edges(2, [(0, 1)])
    for name in algorithms:
        _SOLVERS[name](tiny, table)  # jit warm-up is shared infrastructure

    def bench_instance(source) -> list[BenchRecord]:
        loaded = _load_instance(source)
        if loaded is None:
            return []
        name, g = loaded
        solve_g = complement(g) if problem is ProblemMode.MAX_INDEPENDENT_SET else g
        records = []
        for algo in algorithms:
            solver = _SOLVERS[algo]
            times = []
            size = -1
            for _ in range(max(1, repeats)):
                t0 = time.perf_counter_ns()
                result = solver(solve_g, table)
                times.append(time.perf_counter_ns() - t0)
                size = len(result)
            elapsed = max(1, int(statistics.median(times)))
            records.append(BenchRecord(
                name, g.n, g.m, problem.value, algo, size, elapsed))
        return records

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(bench_instance, instances))
    else:
        batches = [bench_instance(src) for src in instances]
    return [rec for batch in batches for rec in batch]


def relative_solution_measure(records: Sequence[BenchRecord],
                              best_known: dict[str, int] | None = None
                              ) -> dict[tuple[str, str], float]:
    """size / Q_max per (instance, algorithm).

    Q_max is the supplied best-known value when present, otherwise the
    best size any algorithm found on that instance.
    """
    by_instance: dict[str, list[BenchRecord]] = {}
    for rec in records:
        by_instance.setdefault(rec.instance, []).append(rec)
    ratios: dict[tuple[str, str], float] = {}
    for instance, recs in by_instance.items():
        observed = max(r.solution_size for r in recs)
        qmax = observed
        if best_known and instance in best_known:
            qmax = best_known[instance]
            if observed > qmax:
                raise ValueError(
                    f"instance {instance}: found solution {observed} exceeds "
                    f"best-known {qmax}; reference data is inconsistent")
        for rec in recs:
            ratios[(instance, rec.algorithm)] = (
                rec.solution_size / qmax if qmax else 1.0)
    return ratios


def relative_time_measure(records: Sequence[BenchRecord]
                          ) -> dict[tuple[str, str], float]:
    """T_min / elapsed per (instance, algorithm); the fastest scores 1.0."""
    by_instance: dict[str, list[BenchRecord]] = {}
    for rec in records:
        by_instance.setdefault(rec.instance, []).append(rec)
    ratios: dict[tuple[str, str], float] = {}
    for instance, recs in by_instance.items():
        tmin = min(r.time_ns for r in recs)
        for rec in recs:
            ratios[(instance, rec.algorithm)] = tmin / rec.time_ns
    return ratios


@dataclass
class MeasureReport:
    """Per-(instance, algorithm) ratios plus per-algorithm means."""

    solution_ratios: dict[tuple[str, str], float]
    time_ratios: dict[tuple[str, str], float]
    problems: dict[tuple[str, str], str]

    def algorithms(self) -> list[str]:
        seen: dict[str, None] = {}
        for _, algo in self.solution_ratios:
            seen.setdefault(algo, None)
        return list(seen)

    def _mean(self, ratios: dict[tuple[str, str], float], algorithm: str,
              problem: str | None) -> float:
        vals = [r for key, r in ratios.items()
                if key[1] == algorithm
                and (problem is None or self.problems[key] == problem)]
        if not vals:
            raise ValueError(f"no records for algorithm {algorithm!r}")
        return sum(vals) / len(vals)

    def mean_solution_ratio(self, algorithm: str, problem: str | None = None) -> float:
        return self._mean(self.solution_ratios, algorithm, problem)

    def mean_time_ratio(self, algorithm: str, problem: str | None = None) -> float:
        return self._mean(self.time_ratios, algorithm, problem)


def build_report(records: Sequence[BenchRecord],
                 best_known: dict[str, int] | None = None) -> MeasureReport:
    return MeasureReport(
        solution_ratios=relative_solution_measure(records, best_known),
        time_ratios=relative_time_measure(records),
        problems={(r.instance, r.algorithm): r.problem for r in records},
    )


@dataclass
class GenRnSpec:
    """Random-collection sweep: repetitions x orders x densities.

    Orders run n0, n0+n_step, ... strictly below n_stop.  Densities run
    d0, d0+d_step, ... up to d_stop, inclusive by default (set
    d_stop_inclusive=False for a strict bound).  One PCG64 stream seeded
    once drives the whole collection.
    """

    n_rpt: int
    n0: int
    n_step: int
    n_stop: int
    d0: float
    d_step: float
    d_stop: float
    d_stop_inclusive: bool = True
    seed: int = 1

    def __post_init__(self):
        if self.n_step <= 0 or self.d_step <= 0:
            raise ValueError("sweep increments must be positive")

    def orders(self) -> list[int]:
        return list(range(self.n0, self.n_stop, self.n_step))

    def densities(self) -> list[float]:
        out = []
        k = 0
        while True:
            d = round(self.d0 + k * self.d_step, 10)
            if self.d_stop_inclusive:
                if d > self.d_stop + 1e-9:
                    break
            elif d >= self.d_stop - 1e-9:
                break
            out.append(d)
            k += 1
        return out

    def scaled(self, divisor: int) -> "GenRnSpec":
        if divisor <= 1:
            return self
        return replace(self, n0=max(1, self.n0 // divisor),
                       n_step=max(1, self.n_step // divisor),
                       n_stop=max(2, self.n_stop // divisor))


PRESETS = {
    "c1": GenRnSpec(100, 250, 250, 999, 0.1, 0.2, 0.9),
    "c2": GenRnSpec(50, 1000, 500, 9999, 0.1, 0.2, 0.9),
    "c3": GenRnSpec(10, 10000, 5000, 50000, 0.1, 0.2, 0.9),
}


def gen_collection(spec: GenRnSpec) -> list[tuple[str, Graph]]:
    """Generate (instance_id, Graph) pairs; repetition outer, density inner."""
    rng = np.random.default_rng(spec.seed)
    out = []
    for rep in range(spec.n_rpt):
        for n in spec.orders():
            for d in spec.densities():
                out.append((f"rn{n}_d{d:g}_r{rep}", gen_random(n, d, rng)))
    return out


def emit_csv(report: MeasureReport, records: Sequence[BenchRecord],
             sink: IO[str], *, repeats: int = 1) -> None:
    """Data rows under the fixed header, then a per-algorithm mean block."""
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        key = (rec.instance, rec.algorithm)
        writer.writerow([
            rec.instance, rec.n, rec.m, rec.problem, rec.algorithm,
            rec.solution_size, rec.time_ns,
            f"{report.solution_ratios[key]:.3f}",
            f"{report.time_ratios[key]:.3f}",
        ])
    instances = {rec.instance for rec in records}
    problems = sorted({rec.problem for rec in records})
    sink.write("\n")
    sink.write(f"# summary: mean ratios over {len(instances)} instances"
               f" (repeats={repeats})\n")
    writer.writerow(["algorithm", "problem",
                     "mean_ratio_solution", "mean_ratio_time"])
    for algo in report.algorithms():
        scopes = ["all"] + problems if len(problems) > 1 else problems
        for scope in scopes:
            problem = None if scope == "all" else scope
            writer.writerow([
                algo, scope,
                f"{report.mean_solution_ratio(algo, problem):.3f}",
                f"{report.mean_time_ratio(algo, problem):.3f}",
            ])


def load_best_known(path: str | Path) -> dict[str, int]:
    """Two-column CSV: instance name, best-known size; header row optional."""
    out: dict[str, int] = {}
    with open(path, newline="") as fh:
        for i, row in enumerate(csv.reader(fh)):
            if not row or row[0].startswith("#"):
                continue
            if len(row) < 2:
                raise ValueError(f"{path}: row {i + 1} needs two columns")
            try:
                out[row[0].strip()] = int(row[1])
            except ValueError:
                if i == 0:
                    continue  # header row
                raise ValueError(
                    f"{path}: row {i + 1} has a non-integer size") from None
    return out
