"""Quasi-exact clique micro-solver backed by a 32768-entry lookup table.

A graph on at most 6 vertices packs into a 15-bit code: pair (i, j) with
i > j occupies bit i*(i-1)/2 + j, so the bits run (1,0), (2,0), (2,1),
(3,0), ... up to (5,4) at bit 14.  The table maps every code to a 6-bit
membership mask of a maximum clique of the decoded graph; among equal-size
maxima it holds the numerically smallest mask, which also makes padding
vertices (isolated local indices beyond a short chunk) provably never
selected.

Larger vertex sets are solved by chunking: solve the first six vertices
exactly, keep only common neighbours of that local solution, repeat.
Exact up to order 6, heuristic beyond.
"""
from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Sequence

import numpy as np

from . import kernels
from .graph import Graph, VertexSet

__all__ = [
    "N_MICRO",
    "TABLE_SIZE",
    "pair_bit",
    "MicroTable",
    "pack_subgraph",
    "lookup",
    "fvs_qe",
    "default_table",
]

N_MICRO = 6
TABLE_SIZE = 1 << (N_MICRO * (N_MICRO - 1) // 2)


def pair_bit(i: int, j: int) -> int:
    """Bit position of the unordered pair {i, j}, i > j, in the packed code."""
    if i == j:
        raise ValueError("no bit for a self-pair")
    if i < j:
        i, j = j, i
    return i * (i - 1) // 2 + j


def decode_adjacency(code: int, n: int = N_MICRO) -> np.ndarray:
    """(n, n) boolean adjacency of a packed code."""
    mat = np.zeros((n, n), bool)
    for i in range(1, n):
        for j in range(i):
            if code >> pair_bit(i, j) & 1:
                mat[i, j] = mat[j, i] = True
    return mat


class MicroTable:
    """The 32768-entry maximum-clique mask table."""

    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        if entries.shape != (TABLE_SIZE,) or entries.dtype != np.uint8:
            raise ValueError(f"table must be {TABLE_SIZE} uint8 entries")
        self.entries = np.ascontiguousarray(entries)
        self.entries.setflags(write=False)

    @classmethod
    def build(cls) -> "MicroTable":
        return cls(kernels.build_table())

    def __getitem__(self, code: int) -> int:
        return int(self.entries[code])

    def dump(self, path: str | Path) -> None:
        """Raw dump: byte i is the mask for code i, no header."""
        Path(path).write_bytes(self.entries.tobytes())

    @classmethod
    def load(cls, path: str | Path) -> "MicroTable":
        """Load a raw dump, validating every byte's clique property."""
        raw = Path(path).read_bytes()
        if len(raw) != TABLE_SIZE:
            raise ValueError(
                f"table file must be exactly {TABLE_SIZE} bytes, got {len(raw)}")
        entries = np.frombuffer(raw, np.uint8).copy()
        bad = _clique_property_violations(entries)
        if bad:
            raise ValueError(
                f"table entries fail the clique check at codes {bad[:10]}"
                + ("..." if len(bad) > 10 else ""))
        return cls(entries)

    def verify(self) -> list[int]:
        """Codes whose entry is not a smallest-mask maximum clique."""
        sizes, masks = _enumerate_maximum_masks()
        entry_sizes = np.bitwise_count(self.entries.astype(np.int64))
        bad = set(np.flatnonzero(entry_sizes != sizes).tolist())
        bad |= set(np.flatnonzero(self.entries.astype(np.int64) != masks).tolist())
        bad |= set(_clique_property_violations(self.entries))
        return sorted(bad)


def _clique_property_violations(entries: np.ndarray) -> list[int]:
    """Codes whose mask is empty, overflows 6 bits, or is not a clique."""
    masks = entries.astype(np.int64)
    codes = np.arange(TABLE_SIZE, dtype=np.int64)
    bad = (masks == 0) | (masks > 63)
    for i in range(1, N_MICRO):
        for j in range(i):
            needs = ((masks >> i) & 1).astype(bool) & ((masks >> j) & 1).astype(bool)
            has = ((codes >> pair_bit(i, j)) & 1).astype(bool)
            bad |= needs & ~has
    return np.flatnonzero(bad).tolist()


def _enumerate_maximum_masks() -> tuple[np.ndarray, np.ndarray]:
    """Per code: maximum clique size and its smallest membership mask.

    Enumerates all 64 subsets explicitly against decoded pair bits;
    used by verify() and the table CLI.
    """
    codes = np.arange(TABLE_SIZE, dtype=np.int64)
    best_size = np.zeros(TABLE_SIZE, np.int64)
    best_mask = np.zeros(TABLE_SIZE, np.int64)
    for mask in range(64):
        vs = [i for i in range(N_MICRO) if mask >> i & 1]
        ok = np.ones(TABLE_SIZE, bool)
        for i, j in combinations(vs, 2):
            ok &= ((codes >> pair_bit(i, j)) & 1).astype(bool)
        better = ok & (len(vs) > best_size)
        best_size[better] = len(vs)
        best_mask[better] = mask
    return best_size, best_mask


def _chunk_array(g: Graph, chunk: Sequence[int]) -> np.ndarray:
    arr = np.asarray(list(chunk), np.int64)
    if arr.size > N_MICRO:
        raise ValueError(f"chunk holds {arr.size} vertices, at most {N_MICRO} allowed")
    if arr.size:
        if arr.min() < 0 or arr.max() >= g.n:
            raise ValueError("chunk vertex out of range")
        if np.unique(arr).size != arr.size:
            raise ValueError("chunk vertices must be distinct")
    return arr


def pack_subgraph(g: Graph, chunk: Sequence[int]) -> int:
    """Packed 15-bit code of the induced adjacency, chunk order = local index."""
    return int(kernels.pack_chunk(g.adj, _chunk_array(g, chunk)))


def lookup(table: MicroTable, g: Graph, chunk: Sequence[int]) -> VertexSet:
    """Maximum clique of the induced subgraph on an ordered chunk."""
    arr = _chunk_array(g, chunk)
    mask = table[int(kernels.pack_chunk(g.adj, arr))]
    return VertexSet(g.n, (int(arr[t]) for t in range(arr.size) if mask >> t & 1))


def fvs_qe(table: MicroTable, g: Graph, sg: VertexSet) -> VertexSet:
    """Chunked quasi-exact solve; returns a clique maximal within sg."""
    if sg.n != g.n:
        raise ValueError(f"vertex set is over order {sg.n}, graph has {g.n}")
    words = kernels.fvs_qe(g.adj, table.entries, sg.words.copy())
    return VertexSet.from_words(g.n, words, copy=False)


_DEFAULT: MicroTable | None = None


def default_table() -> MicroTable:
    """Process-wide shared table, built on first use."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = MicroTable.build()
    return _DEFAULT
