"""Immutable bit-matrix graphs and vertex sets.

A graph of order n stores one n-bit adjacency row per vertex, packed into
little-endian uint64 words.  All solvers operate on these rows with
word-parallel AND/ANDNOT/popcount, so the representation is the contract:
bit u of row v is set iff edge (v, u) exists, the diagonal is always zero,
and bits at n and above are always zero.
"""
from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "Graph",
    "VertexSet",
    "ProblemMode",
    "complement",
    "gen_random",
    "is_clique",
    "degree_within",
    "bit_indices",
]


def _nwords(n: int) -> int:
    return (n + 63) // 64


def bit_indices(words: np.ndarray) -> np.ndarray:
    """Ascending indices of the set bits of a word array."""
    if words.size == 0:
        return np.empty(0, np.int64)
    bits = np.unpackbits(np.ascontiguousarray(words).view(np.uint8), bitorder="little")
    return np.flatnonzero(bits).astype(np.int64)


def _pack_bool_rows(mat: np.ndarray) -> np.ndarray:
    """Pack an (n, n) boolean matrix into (n, nwords) uint64 rows."""
    n = mat.shape[0]
    nw = _nwords(n)
    if n == 0:
        return np.zeros((0, 0), np.uint64)
    padded = np.zeros((n, nw * 64), np.uint8)
    padded[:, :n] = mat
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64)


def _unpack_rows(words: np.ndarray, n: int) -> np.ndarray:
    """Inverse of _pack_bool_rows: (rows, nwords) words -> (rows, n) bool."""
    if words.size == 0:
        return np.zeros((words.shape[0], n), bool)
    bits = np.unpackbits(np.ascontiguousarray(words).view(np.uint8),
                         axis=1, bitorder="little")
    return bits[:, :n].astype(bool)


def _full_words(n: int) -> np.ndarray:
    words = np.zeros(_nwords(n), np.uint64)
    if n:
        words[:] = ~np.uint64(0)
        spare = _nwords(n) * 64 - n
        if spare:
            words[-1] >>= np.uint64(spare)
    return words


class VertexSet:
    """Fixed-width bit vector over the vertex indices 0..n-1."""

    __slots__ = ("n", "words")

    def __init__(self, n: int, members: Iterable[int] = ()):
        words = np.zeros(_nwords(n), np.uint64)
        for v in members:
            v = int(v)
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for order {n}")
            words[v >> 6] |= np.uint64(1) << np.uint64(v & 63)
        self.n = n
        self.words = words
        words.setflags(write=False)

    @classmethod
    def from_words(cls, n: int, words: np.ndarray, *, copy: bool = True) -> "VertexSet":
        s = cls.__new__(cls)
        s.n = n
        s.words = words.copy() if copy else words
        s.words.setflags(write=False)
        return s

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls.from_words(n, _full_words(n), copy=False)

    def members(self) -> list[int]:
        return [int(v) for v in bit_indices(self.words)]

    def __len__(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def __contains__(self, v: int) -> bool:
        if not 0 <= v < self.n:
            return False
        return bool((self.words[v >> 6] >> np.uint64(v & 63)) & np.uint64(1))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.words, other.words))

    def issubset(self, other: "VertexSet") -> bool:
        return not np.any(self.words & ~other.words)

    def __repr__(self) -> str:
        members = self.members()
        if len(members) > 12:
            head = ", ".join(map(str, members[:12]))
            return f"VertexSet(n={self.n}, {{{head}, ...}} size={len(members)})"
        return f"VertexSet(n={self.n}, {{{', '.join(map(str, members))}}})"


class Graph:
    """Immutable simple undirected graph over vertices 0..n-1."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: np.ndarray, m: int | None = None):
        if adj.shape != (n, _nwords(n)) or adj.dtype != np.uint64:
            raise ValueError("adjacency must be (n, ceil(n/64)) uint64")
        self.n = n
        self.adj = np.ascontiguousarray(adj)
        self.adj.setflags(write=False)
        self.m = int(np.bitwise_count(self.adj).sum()) // 2 if m is None else m

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        pairs = np.array(list(edges), np.int64).reshape(-1, 2)
        if pairs.size:
            if pairs.min() < 0 or pairs.max() >= n:
                raise ValueError("edge endpoint out of range")
            if np.any(pairs[:, 0] == pairs[:, 1]):
                raise ValueError("self-loops are not allowed")
        adj = np.zeros((n, _nwords(n)), np.uint64)
        if pairs.size:
            us = np.concatenate([pairs[:, 0], pairs[:, 1]])
            vs = np.concatenate([pairs[:, 1], pairs[:, 0]])
            np.bitwise_or.at(adj, (us, vs >> 6),
                             np.uint64(1) << (vs & 63).astype(np.uint64))
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, np.zeros((n, _nwords(n)), np.uint64), 0)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return complement(cls.empty(n))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u, v >> 6] >> np.uint64(v & 63)) & np.uint64(1))

    def degree(self, v: int) -> int:
        return int(np.bitwise_count(self.adj[v]).sum())

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet.from_words(self.n, self.adj[v])

    def full_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v, ascending."""
        for u in range(self.n):
            row = _unpack_rows(self.adj[u:u + 1], self.n)[0]
            for v in np.flatnonzero(row[u + 1:]):
                yield u, u + 1 + int(v)

    def validate(self) -> None:
        """Check symmetry, irreflexivity, padding and the edge count."""
        dense = _unpack_rows(self.adj, self.n)
        if not np.array_equal(dense, dense.T):
            raise AssertionError("adjacency is not symmetric")
        if dense.diagonal().any():
            raise AssertionError("adjacency has self-loops")
        if self.n and np.any(self.adj & ~_full_words(self.n)[None, :]):
            raise AssertionError("padding bits are set")
        if int(dense.sum()) != 2 * self.m:
            raise AssertionError("edge count mismatch")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.adj, other.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class ProblemMode(Enum):
    """MIS instances are solved as clique instances of the complement."""

    MAX_CLIQUE = "mcp"
    MAX_INDEPENDENT_SET = "mis"

    @classmethod
    def from_string(cls, text: str) -> "ProblemMode":
        for mode in cls:
            if mode.value == text.lower():
                return mode
        raise ValueError(f"unknown problem mode {text!r} (use 'mcp' or 'mis')")


def complement(g: Graph) -> Graph:
    """Materialized complement: edge (v, u) iff v != u and not in g."""
    full = _full_words(g.n)
    adj = (~g.adj) & full[None, :]
    if g.n:
        rows = np.arange(g.n)
        adj[rows, rows >> 6] &= ~(np.uint64(1) << (rows & 63).astype(np.uint64))
    return Graph(g.n, adj, g.n * (g.n - 1) // 2 - g.m)


def gen_random(n: int, d: float, seed: int | np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, d) from a PCG64 stream.

    Each pair (i, j) with i < j, visited in row-major order, draws one
    uniform double and becomes an edge when the draw is below d.  The same
    (n, d, seed) triple always produces the identical graph; passing a
    Generator instead of a seed continues its stream, which is how
    collections advance state between graphs.
    """
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"density {d} outside [0, 1]")
    if n < 0:
        raise ValueError("order must be non-negative")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    mat = np.zeros((n, n), bool)
    for i in range(n - 1):
        mat[i, i + 1:] = rng.random(n - 1 - i) < d
    mat |= mat.T
    return Graph(n, _pack_bool_rows(mat))


def is_clique(g: Graph, s: VertexSet) -> bool:
    """True iff the members of s are pairwise adjacent (vacuous for size <= 1)."""
    members = bit_indices(s.words)
    if members.size <= 1:
        return True
    counts = np.bitwise_count(g.adj[members] & s.words[None, :]).sum(axis=1)
    return bool(np.all(counts == members.size - 1))


def degree_within(g: Graph, v: int, s: VertexSet) -> int:
    """|N(v) ∩ s| via one AND + popcount pass over row v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return int(np.bitwise_count(g.adj[v] & s.words).sum())
