"""Five sequential constructive clique heuristics.

All of them work within an induced subgraph handle sg, break every tie
toward the lowest vertex index, and return a clique; all except sd_won
return a clique that is maximal within sg.  Degree indicators always
refer to the current induced subgraph, never the whole graph.
"""
from __future__ import annotations

from enum import Enum

import numpy as np

from . import kernels
from .graph import Graph, VertexSet, bit_indices

__all__ = [
    "HeuristicKind",
    "fv_bio",
    "sd_won",
    "sd_ext_won",
    "ld_bio",
    "ld_bin",
    "HEURISTICS",
    "run_heuristic",
]


class HeuristicKind(Enum):
    FV_BIO = "fv_bio"
    SD_WON = "sd_won"
    SD_EXT_WON = "sd_ext_won"
    LD_BIO = "ld_bio"
    LD_BIN = "ld_bin"

    @classmethod
    def from_string(cls, text: str) -> "HeuristicKind":
        for kind in cls:
            if kind.value == text.lower():
                return kind
        raise ValueError(f"unknown heuristic {text!r}")


def _sg_words(g: Graph, sg: VertexSet | None) -> np.ndarray:
    return (VertexSet.full(g.n) if sg is None else sg).words


def fv_bio(g: Graph, sg: VertexSet | None = None) -> VertexSet:
    """First-vertex scan: take each sg vertex adjacent to all taken so far."""
    words = _sg_words(g, sg)
    empty = np.zeros_like(words)
    q = kernels.scan_join(g.adj, bit_indices(words), empty)
    return VertexSet.from_words(g.n, q, copy=False)


def sd_won(g: Graph, sg: VertexSet | None = None) -> VertexSet:
    """Strip minimum-degree vertices until the rest is a clique.

    May stop short of a maximal clique; sd_ext_won repairs that.
    """
    q, _ = kernels.sd_won_trace(g.adj, _sg_words(g, sg))
    return VertexSet.from_words(g.n, q, copy=False)


def sd_ext_won(g: Graph, sg: VertexSet | None = None) -> VertexSet:
    """sd_won, then re-admit removed vertices in reverse removal order."""
    q, removed = kernels.sd_won_trace(g.adj, _sg_words(g, sg))
    order = np.ascontiguousarray(removed[::-1])
    q = kernels.scan_join(g.adj, order, q)
    return VertexSet.from_words(g.n, q, copy=False)


def ld_bio(g: Graph, sg: VertexSet | None = None) -> VertexSet:
    """fv_bio over the vertices sorted once by descending degree in sg."""
    words = _sg_words(g, sg)
    members = bit_indices(words)
    degs = kernels.degrees_in(g.adj, words, members)
    order = members[np.lexsort((members, -degs))]
    q = kernels.scan_join(g.adj, order, np.zeros_like(words))
    return VertexSet.from_words(g.n, q, copy=False)


def ld_bin(g: Graph, sg: VertexSet | None = None) -> VertexSet:
    """Take the max-degree vertex, restrict to its neighbours, repeat."""
    q = kernels.ld_bin(g.adj, _sg_words(g, sg))
    return VertexSet.from_words(g.n, q, copy=False)


HEURISTICS = {
    HeuristicKind.FV_BIO: fv_bio,
    HeuristicKind.SD_WON: sd_won,
    HeuristicKind.SD_EXT_WON: sd_ext_won,
    HeuristicKind.LD_BIO: ld_bio,
    HeuristicKind.LD_BIN: ld_bin,
}


def run_heuristic(kind: HeuristicKind | str, g: Graph,
                  sg: VertexSet | None = None) -> VertexSet:
    if isinstance(kind, str):
        kind = HeuristicKind.from_string(kind)
    return HEURISTICS[kind](g, sg)
