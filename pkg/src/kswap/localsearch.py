"""(1,k)-swap local search.

Keeps, for every vertex outside the current clique q, the set of q members
it is NOT adjacent to; vertices missing exactly one member are additionally
pinned into that member's own candidate row.  An improvement swaps one
member u out for a clique of k >= 2 vertices found inside u's pin set by
the micro-solver; the candidate rows are then patched incrementally so
the defining property (row = non-neighbours within q) always holds.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import Graph, VertexSet, bit_indices, is_clique
from .heuristics import HeuristicKind, run_heuristic
from .micro import MicroTable

__all__ = [
    "InvariantViolation",
    "Improvement",
    "CandidateState",
    "build_candidates",
    "exists_improvement",
    "apply_improvement",
    "run_local_search",
    "ls_1_k",
]


class InvariantViolation(RuntimeError):
    """Incremental candidate state diverged from a from-scratch rebuild."""


@dataclass
class Improvement:
    """One (1,k)-swap: remove u_swapped, insert the c_improve clique."""

    u_swapped: int
    c_improve: VertexSet


class CandidateState:
    """Mutable solver state: clique q, universe sg, candidate rows, pins."""

    __slots__ = ("g", "sg_words", "q_words", "cand", "pinned", "needs_plunge")

    def __init__(self, g: Graph, sg_words: np.ndarray, q_words: np.ndarray,
                 cand: np.ndarray, pinned: np.ndarray):
        self.g = g
        self.sg_words = sg_words
        self.q_words = q_words
        self.cand = cand
        self.pinned = pinned
        self.needs_plunge = False

    @property
    def q(self) -> VertexSet:
        return VertexSet.from_words(self.g.n, self.q_words)

    @property
    def sg(self) -> VertexSet:
        return VertexSet.from_words(self.g.n, self.sg_words)

    def verify(self) -> None:
        """Compare against a from-scratch rebuild; raise on any mismatch."""
        if not is_clique(self.g, self.q):
            raise InvariantViolation("current solution is not a clique")
        fresh_cand, fresh_pinned = kernels.build_candidates(
            self.g.adj, self.sg_words, self.q_words)
        if not np.array_equal(fresh_cand, self.cand):
            bad = np.flatnonzero(np.any(fresh_cand != self.cand, axis=1))
            raise InvariantViolation(
                f"candidate rows diverged for vertices {bad[:8].tolist()}")
        if not np.array_equal(fresh_pinned, self.pinned):
            bad = np.flatnonzero(fresh_pinned != self.pinned)
            raise InvariantViolation(
                f"pin entries diverged for vertices {bad[:8].tolist()}")


def _plunge_free(g: Graph, sg_words: np.ndarray, q_words: np.ndarray) -> np.ndarray:
    """Add free vertices (adjacent to all of q) in ascending order."""
    outside = bit_indices(sg_words & ~q_words)
    return kernels.scan_join(g.adj, outside, q_words)


def build_candidates(g: Graph, sg: VertexSet, q: VertexSet) -> CandidateState:
    """Initial state for a maximal clique q within sg."""
    if sg.n != g.n or q.n != g.n:
        raise ValueError("vertex sets must be over the graph's order")
    if not q.issubset(sg):
        raise ValueError("solution is not contained in the subgraph handle")
    if not is_clique(g, q):
        raise ValueError("seed solution is not a clique")
    cand, pinned = kernels.build_candidates(g.adj, sg.words, q.words)
    return CandidateState(g, sg.words.copy(), q.words.copy(), cand, pinned)


def exists_improvement(table: MicroTable, g: Graph,
                       st: CandidateState) -> Improvement | None:
    """Best (1,k)-swap across all solution members, None at a local optimum."""
    u, words = kernels.exists_improvement(g.adj, table.entries, st.q_words, st.cand)
    if u < 0:
        return None
    return Improvement(int(u), VertexSet.from_words(g.n, words, copy=False))


def apply_improvement(g: Graph, st: CandidateState, imp: Improvement) -> None:
    """Apply the swap in place, maintaining all candidate rows and pins."""
    if len(imp.c_improve) < 2:
        raise ValueError("an improvement must insert at least two vertices")
    empties = kernels.apply_improvement(
        g.adj, st.sg_words, st.q_words, st.cand, st.pinned,
        imp.u_swapped, imp.c_improve.words)
    if empties:
        # cannot happen for improvements produced by exists_improvement;
        # flag so the driver can repair rather than run on a stale state
        st.needs_plunge = True


def run_local_search(table: MicroTable, g: Graph, sg: VertexSet,
                     q_seed: VertexSet, check_invariants: bool = False
                     ) -> tuple[VertexSet, int]:
    """Descend from a seed clique; returns the final clique and swap count."""
    q_words = _plunge_free(g, sg.words, q_seed.words)
    st = build_candidates(g, sg, VertexSet.from_words(g.n, q_words, copy=False))
    iterations = 0
    while True:
        imp = exists_improvement(table, g, st)
        if imp is None:
            break
        apply_improvement(g, st, imp)
        iterations += 1
        if st.needs_plunge:
            if check_invariants:
                raise InvariantViolation("free vertex appeared after a swap")
            q_words = _plunge_free(g, sg.words, st.q_words)
            st = build_candidates(g, sg, VertexSet.from_words(g.n, q_words, copy=False))
        if check_invariants:
            st.verify()
    return st.q, iterations


def ls_1_k(table: MicroTable, g: Graph, sg: VertexSet | None = None,
           seed_heuristic: HeuristicKind | str = HeuristicKind.LD_BIN,
           check_invariants: bool = False) -> VertexSet:
    """Seed with a constructive heuristic, then swap until locally optimal."""
    if sg is None:
        sg = g.full_set()
    seed = run_heuristic(seed_heuristic, g, sg)
    result, _ = run_local_search(table, g, sg, seed, check_invariants)
    return result
