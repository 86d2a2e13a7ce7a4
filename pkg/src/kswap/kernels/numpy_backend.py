"""Pure-numpy implementations of the hot set-operation kernels.

Selected with KSWAP_BACKEND=numpy, or automatically when numba is not
importable.  Must stay semantically identical to ``numba_backend``; the
parity tests run every kernel against both backends.

Conventions shared by both backends:

* a vertex set is a little-endian array of uint64 words, bit v living in
  word ``v >> 6`` at position ``v & 63``;
* an adjacency matrix is one such word row per vertex, shape (n, nwords);
* all vertex orders and tie-breaks are ascending index.
"""
from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"

_ONE = np.uint64(1)


def _bit(v: int) -> np.uint64:
    return _ONE << np.uint64(v & 63)


def bit_indices(words: np.ndarray) -> np.ndarray:
    """Ascending indices of the set bits."""
    if words.size == 0:
        return np.empty(0, np.int64)
    bits = np.unpackbits(words.view(np.uint8), bitorder="little")
    return np.flatnonzero(bits).astype(np.int64)


def popcount(words: np.ndarray) -> int:
    return int(np.bitwise_count(words).sum())


def degrees_in(adj: np.ndarray, s: np.ndarray, members: np.ndarray) -> np.ndarray:
    """Degree of each member vertex within the set s."""
    if members.size == 0:
        return np.empty(0, np.int64)
    return np.bitwise_count(adj[members] & s[None, :]).sum(axis=1).astype(np.int64)


# ---------------------------------------------------------------------------
# micro-solver: 15-bit packed adjacency codes and the 32768-entry mask table

def _required_pair_bits() -> np.ndarray:
    """For each 6-bit membership mask, the pair bits a clique needs."""
    req = np.zeros(64, np.int64)
    for mask in range(64):
        bits = 0
        for i in range(6):
            if not mask >> i & 1:
                continue
            for j in range(i):
                if mask >> j & 1:
                    bits |= 1 << (i * (i - 1) // 2 + j)
        req[mask] = bits
    return req


def build_table() -> np.ndarray:
    """Maximum-clique membership mask for every 15-bit adjacency code.

    Masks are scanned in ascending integer order and only a strictly
    larger clique replaces the incumbent, so ties go to the numerically
    smallest mask.
    """
    req = _required_pair_bits()
    codes = np.arange(32768, dtype=np.int64)
    valid = (codes[:, None] & req[None, :]) == req[None, :]
    sizes = np.array([bin(m).count("1") for m in range(64)], np.int64)
    # score orders first by clique size, then by smaller mask value
    score = np.where(valid, sizes[None, :] * 64 + (63 - np.arange(64)), np.int64(-1))
    return np.argmax(score, axis=1).astype(np.uint8)


def pack_chunk(adj: np.ndarray, chunk: np.ndarray) -> int:
    """Pack the induced adjacency of an ordered chunk (<= 6 vertices).

    Pair (i, j) with i > j maps to bit i*(i-1)/2 + j.
    """
    code = 0
    for i in range(1, chunk.shape[0]):
        vi = int(chunk[i])
        row = adj[vi]
        base = i * (i - 1) // 2
        for j in range(i):
            vj = int(chunk[j])
            if (int(row[vj >> 6]) >> (vj & 63)) & 1:
                code |= 1 << (base + j)
    return code


def fvs_qe(adj: np.ndarray, table: np.ndarray, sg_in: np.ndarray) -> np.ndarray:
    """Chunked table-lookup clique search over the vertex set sg_in.

    Repeatedly solves the first six remaining vertices exactly via the
    mask table, then keeps only common neighbours of the local solution.
    Exact for inputs of at most six vertices, heuristic beyond.
    """
    sg = sg_in.copy()
    q = np.zeros_like(sg)
    while True:
        idx = bit_indices(sg)
        if idx.size == 0:
            break
        chunk = idx[:6]
        for v in chunk:
            sg[int(v) >> 6] &= ~_bit(int(v))
        mask = int(table[pack_chunk(adj, chunk)])
        for t in range(chunk.shape[0]):
            if mask >> t & 1:
                v = int(chunk[t])
                q[v >> 6] |= _bit(v)
                sg &= adj[v]
    return q


# ---------------------------------------------------------------------------
# constructive heuristics

def scan_join(adj: np.ndarray, order: np.ndarray, q0: np.ndarray) -> np.ndarray:
    """Greedy completion: visit order, add every vertex adjacent to all of q."""
    q = q0.copy()
    for v in order:
        v = int(v)
        if not np.any(q & ~adj[v]):
            q[v >> 6] |= _bit(v)
    return q


def sd_won_trace(adj: np.ndarray, sg_in: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Repeated min-degree removal until the survivors form a clique.

    Returns the clique and the removed vertices in removal order.
    Degrees are recomputed within the shrinking set; ties remove the
    lowest index.
    """
    s = sg_in.copy()
    members = bit_indices(s)
    removed = np.empty(members.size, np.int64)
    nrem = 0
    while members.size:
        degs = np.bitwise_count(adj[members] & s[None, :]).sum(axis=1)
        i = int(np.argmin(degs))
        if int(degs[i]) == members.size - 1:
            break
        v = int(members[i])
        s[v >> 6] &= ~_bit(v)
        removed[nrem] = v
        nrem += 1
        members = np.delete(members, i)
    return s, removed[:nrem]


def ld_bin(adj: np.ndarray, sg_in: np.ndarray) -> np.ndarray:
    """Repeatedly take the max-degree vertex and keep only its neighbours."""
    work = sg_in.copy()
    q = np.zeros_like(work)
    while True:
        members = bit_indices(work)
        if members.size == 0:
            break
        degs = np.bitwise_count(adj[members] & work[None, :]).sum(axis=1)
        v = int(members[int(np.argmax(degs))])
        q[v >> 6] |= _bit(v)
        work &= adj[v]
    return q


# ---------------------------------------------------------------------------
# (1,k)-swap local search state

def build_candidates(adj: np.ndarray, sg: np.ndarray, q: np.ndarray
                     ) -> tuple[np.ndarray, np.ndarray]:
    """Candidate matrix and 1-tight pin array for a maximal clique q.

    Outside rows hold the solution members the vertex is NOT adjacent to;
    a solution member's row collects the outside vertices pinned to it
    (exactly one missing neighbour, namely that member).
    """
    n, nwords = adj.shape
    cand = np.zeros((n, nwords), np.uint64)
    pinned = np.full(n, -1, np.int64)
    outside = bit_indices(sg & ~q)
    if outside.size:
        rows = q[None, :] & ~adj[outside]
        cand[outside] = rows
        tight = np.bitwise_count(rows).sum(axis=1)
        for v in outside[tight == 1]:
            v = int(v)
            u = int(bit_indices(cand[v])[0])
            pinned[v] = u
            cand[u, v >> 6] |= _bit(v)
    return cand, pinned


def exists_improvement(adj: np.ndarray, table: np.ndarray, q: np.ndarray,
                       cand: np.ndarray) -> tuple[int, np.ndarray]:
    """Best (1,k)-swap over all solution members, or (-1, empty).

    A member u is examined only when its pin set could beat the incumbent;
    the replacement clique is found by fvs_qe on the pin set and must have
    at least two vertices.
    """
    best_u = -1
    best = np.zeros_like(q)
    best_size = 1
    for u in bit_indices(q):
        u = int(u)
        k = popcount(cand[u])
        if k > 1 and k > best_size:
            qloc = fvs_qe(adj, table, cand[u])
            sz = popcount(qloc)
            if sz > 1 and sz > best_size:
                best_u, best, best_size = u, qloc, sz
    return best_u, best


def apply_improvement(adj: np.ndarray, sg: np.ndarray, q: np.ndarray,
                      cand: np.ndarray, pinned: np.ndarray,
                      u_swapped: int, c_improve: np.ndarray) -> int:
    """Swap u_swapped out, c_improve in, updating all candidate rows in place.

    Returns the number of outside vertices whose candidate set became
    empty (provably zero when c_improve is maximal within the old pin set
    of u_swapped; reported so callers can repair defensively).
    """
    u_swapped = int(u_swapped)
    q[u_swapped >> 6] &= ~_bit(u_swapped)
    cand[u_swapped] = c_improve
    pinned[u_swapped] = -1
    for w in bit_indices(c_improve):
        w = int(w)
        q[w >> 6] |= _bit(w)
        cand[w] = 0
        pinned[w] = -1
    empties = 0
    for v in bit_indices(sg & ~q):
        v = int(v)
        if v == u_swapped:
            continue
        row = cand[v]
        row[u_swapped >> 6] &= ~_bit(u_swapped)
        row |= c_improve & ~adj[v]
        t = popcount(row)
        oldp = int(pinned[v])
        if t == 1:
            u_new = int(bit_indices(row)[0])
            if oldp != u_new:
                if oldp >= 0 and oldp != u_swapped:
                    cand[oldp, v >> 6] &= ~_bit(v)
                pinned[v] = u_new
                cand[u_new, v >> 6] |= _bit(v)
        else:
            if t == 0:
                empties += 1
            if oldp >= 0 and oldp != u_swapped:
                cand[oldp, v >> 6] &= ~_bit(v)
            pinned[v] = -1
    return empties
