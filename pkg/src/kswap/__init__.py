"""Bit-parallel maximum-clique / maximum-independent-set toolkit.

Constructive heuristics, a (1,k)-swap local search driven by a lookup-table
micro-solver, DIMACS ingestion, a reproducible random-graph generator and a
benchmarking harness.  Hot kernels run under numba when available; set
KSWAP_BACKEND=numpy to force the pure-numpy fallback.
"""

from .bench import (BenchRecord, GenRnSpec, MeasureReport, PRESETS,
                    algorithm_names, build_report, emit_csv, gen_collection,
                    load_best_known, relative_solution_measure,
                    relative_time_measure, run_suite, solve_one)
from .dimacs import DimacsError, emit_dimacs, from_dimacs
from .graph import (Graph, ProblemMode, VertexSet, complement, degree_within,
                    gen_random, is_clique)
from .heuristics import (HEURISTICS, HeuristicKind, fv_bio, ld_bin, ld_bio,
                         run_heuristic, sd_ext_won, sd_won)
from .kernels import BACKEND_NAME
from .localsearch import (CandidateState, Improvement, InvariantViolation,
                          apply_improvement, build_candidates,
                          exists_improvement, ls_1_k, run_local_search)
from .micro import (MicroTable, N_MICRO, TABLE_SIZE, default_table, fvs_qe,
                    lookup, pack_subgraph, pair_bit)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "BenchRecord",
    "CandidateState",
    "DimacsError",
    "GenRnSpec",
    "Graph",
    "HEURISTICS",
    "HeuristicKind",
    "Improvement",
    "InvariantViolation",
    "MeasureReport",
    "MicroTable",
    "N_MICRO",
    "PRESETS",
    "ProblemMode",
    "TABLE_SIZE",
    "VertexSet",
    "algorithm_names",
    "apply_improvement",
    "build_candidates",
    "build_report",
    "complement",
    "default_table",
    "degree_within",
    "emit_csv",
    "emit_dimacs",
    "exists_improvement",
    "from_dimacs",
    "fv_bio",
    "fvs_qe",
    "gen_collection",
    "gen_random",
    "is_clique",
    "ld_bin",
    "ld_bio",
    "load_best_known",
    "lookup",
    "ls_1_k",
    "pack_subgraph",
    "pair_bit",
    "relative_solution_measure",
    "relative_time_measure",
    "run_heuristic",
    "run_local_search",
    "run_suite",
    "sd_ext_won",
    "sd_won",
    "solve_one",
    "__version__",
]
