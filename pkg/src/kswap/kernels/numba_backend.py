"""numba @njit implementations of the hot set-operation kernels.

Default backend when numba imports; see numpy_backend for the shared
conventions.  Everything below is nopython + nogil so benchmark threads
can run solves in parallel.

uint64 discipline: numba promotes uint64-with-int64 arithmetic to
float64, so every constant that touches a word is wrapped in np.uint64.
"""
from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_JIT = dict(cache=True, nogil=True)

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_U0 = np.uint64(0)
_U1 = np.uint64(1)


@njit(inline="always", **_JIT)
def _popcnt(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(inline="always", **_JIT)
def _bit(v):
    return _U1 << np.uint64(v & 63)


@njit(inline="always", **_JIT)
def _low_index(w):
    # index of the lowest set bit of a nonzero word
    low = w & (~w + _U1)
    return _popcnt(low - _U1)


@njit(**_JIT)
def popcount(words):
    total = np.int64(0)
    for i in range(words.shape[0]):
        total += _popcnt(words[i])
    return total


@njit(**_JIT)
def bit_indices(words):
    out = np.empty(popcount(words), np.int64)
    k = 0
    for wi in range(words.shape[0]):
        w = words[wi]
        while w != _U0:
            out[k] = wi * 64 + _low_index(w)
            k += 1
            w &= w - _U1
    return out


@njit(**_JIT)
def degrees_in(adj, s, members):
    out = np.empty(members.shape[0], np.int64)
    for k in range(members.shape[0]):
        v = members[k]
        c = np.int64(0)
        for wi in range(s.shape[0]):
            c += _popcnt(adj[v, wi] & s[wi])
        out[k] = c
    return out


# ---------------------------------------------------------------------------
# micro-solver

@njit(**_JIT)
def build_table():
    required = np.zeros(64, np.int64)
    for mask in range(64):
        bits = 0
        for i in range(6):
            if not mask >> i & 1:
                continue
            for j in range(i):
                if mask >> j & 1:
                    bits |= 1 << (i * (i - 1) // 2 + j)
        required[mask] = bits
    sizes = np.zeros(64, np.int64)
    for mask in range(64):
        sizes[mask] = _popcnt(np.uint64(mask))
    entries = np.zeros(32768, np.uint8)
    for code in range(32768):
        best_mask = 0
        best_size = np.int64(0)
        # ascending mask order + strict improvement = smallest-mask ties
        for mask in range(64):
            if sizes[mask] > best_size and code & required[mask] == required[mask]:
                best_size = sizes[mask]
                best_mask = mask
        entries[code] = best_mask
    return entries


@njit(**_JIT)
def pack_chunk(adj, chunk):
    code = np.int64(0)
    for i in range(1, chunk.shape[0]):
        vi = chunk[i]
        base = i * (i - 1) // 2
        for j in range(i):
            vj = chunk[j]
            if (adj[vi, vj >> 6] >> np.uint64(vj & 63)) & _U1 != _U0:
                code |= np.int64(1) << np.int64(base + j)
    return code


@njit(**_JIT)
def _take_first_bits(words, k, out):
    # pops up to k lowest set bits from words into out, returns the count
    cnt = 0
    for wi in range(words.shape[0]):
        w = words[wi]
        while w != _U0 and cnt < k:
            out[cnt] = wi * 64 + _low_index(w)
            cnt += 1
            w &= w - _U1
        words[wi] = w
        if cnt == k:
            break
    return cnt


@njit(**_JIT)
def fvs_qe(adj, table, sg_in):
    nwords = adj.shape[1]
    sg = sg_in.copy()
    q = np.zeros(nwords, np.uint64)
    buf = np.empty(6, np.int64)
    while True:
        length = _take_first_bits(sg, 6, buf)
        if length == 0:
            break
        mask = np.int64(table[pack_chunk(adj, buf[:length])])
        for t in range(length):
            if mask >> t & 1:
                v = buf[t]
                q[v >> 6] |= _bit(v)
                for wi in range(nwords):
                    sg[wi] &= adj[v, wi]
    return q


# ---------------------------------------------------------------------------
# constructive heuristics

@njit(**_JIT)
def scan_join(adj, order, q0):
    q = q0.copy()
    nwords = q.shape[0]
    for oi in range(order.shape[0]):
        v = order[oi]
        ok = True
        for wi in range(nwords):
            if q[wi] & ~adj[v, wi] != _U0:
                ok = False
                break
        if ok:
            q[v >> 6] |= _bit(v)
    return q


@njit(**_JIT)
def sd_won_trace(adj, sg_in):
    nwords = adj.shape[1]
    s = sg_in.copy()
    size = popcount(s)
    removed = np.empty(size, np.int64)
    nrem = 0
    while size > 0:
        best_v = np.int64(-1)
        best_d = np.int64(size)  # any degree is < size
        for wi in range(nwords):
            w = s[wi]
            while w != _U0:
                v = wi * 64 + _low_index(w)
                w &= w - _U1
                d = np.int64(0)
                for wj in range(nwords):
                    d += _popcnt(adj[v, wj] & s[wj])
                if d < best_d:
                    best_d = d
                    best_v = v
        if best_d == size - 1:
            break
        s[best_v >> 6] &= ~_bit(best_v)
        removed[nrem] = best_v
        nrem += 1
        size -= 1
    return s, removed[:nrem]


@njit(**_JIT)
def ld_bin(adj, sg_in):
    nwords = adj.shape[1]
    work = sg_in.copy()
    q = np.zeros(nwords, np.uint64)
    while True:
        best_v = np.int64(-1)
        best_d = np.int64(-1)
        for wi in range(nwords):
            w = work[wi]
            while w != _U0:
                v = wi * 64 + _low_index(w)
                w &= w - _U1
                d = np.int64(0)
                for wj in range(nwords):
                    d += _popcnt(adj[v, wj] & work[wj])
                if d > best_d:
                    best_d = d
                    best_v = v
        if best_v < 0:
            break
        q[best_v >> 6] |= _bit(best_v)
        for wi in range(nwords):
            work[wi] &= adj[best_v, wi]
    return q


# ---------------------------------------------------------------------------
# (1,k)-swap local search state

@njit(**_JIT)
def _single_bit_index(words):
    for wi in range(words.shape[0]):
        if words[wi] != _U0:
            return wi * 64 + _low_index(words[wi])
    return np.int64(-1)


@njit(**_JIT)
def build_candidates(adj, sg, q):
    n = adj.shape[0]
    nwords = adj.shape[1]
    cand = np.zeros((n, nwords), np.uint64)
    pinned = np.full(n, -1, np.int64)
    for wi in range(nwords):
        w = sg[wi] & ~q[wi]
        while w != _U0:
            v = wi * 64 + _low_index(w)
            w &= w - _U1
            t = np.int64(0)
            for wj in range(nwords):
                cv = q[wj] & ~adj[v, wj]
                cand[v, wj] = cv
                t += _popcnt(cv)
            if t == 1:
                u = _single_bit_index(cand[v])
                pinned[v] = u
                cand[u, v >> 6] |= _bit(v)
    return cand, pinned


@njit(**_JIT)
def exists_improvement(adj, table, q, cand):
    nwords = q.shape[0]
    best_u = np.int64(-1)
    best = np.zeros(nwords, np.uint64)
    best_size = np.int64(1)
    for wi in range(nwords):
        w = q[wi]
        while w != _U0:
            u = wi * 64 + _low_index(w)
            w &= w - _U1
            k = popcount(cand[u])
            if k > 1 and k > best_size:
                qloc = fvs_qe(adj, table, cand[u])
                sz = popcount(qloc)
                if sz > 1 and sz > best_size:
                    best_u = u
                    best = qloc
                    best_size = sz
    return best_u, best


@njit(**_JIT)
def apply_improvement(adj, sg, q, cand, pinned, u_swapped, c_improve):
    nwords = q.shape[0]
    q[u_swapped >> 6] &= ~_bit(u_swapped)
    for wi in range(nwords):
        cand[u_swapped, wi] = c_improve[wi]
    pinned[u_swapped] = -1
    for wi in range(nwords):
        w = c_improve[wi]
        while w != _U0:
            ins = wi * 64 + _low_index(w)
            w &= w - _U1
            q[ins >> 6] |= _bit(ins)
            for wj in range(nwords):
                cand[ins, wj] = _U0
            pinned[ins] = -1
    empties = 0
    for wi in range(nwords):
        w = sg[wi] & ~q[wi]
        while w != _U0:
            v = wi * 64 + _low_index(w)
            w &= w - _U1
            if v == u_swapped:
                continue
            cand[v, u_swapped >> 6] &= ~_bit(u_swapped)
            t = np.int64(0)
            for wj in range(nwords):
                cv = cand[v, wj] | (c_improve[wj] & ~adj[v, wj])
                cand[v, wj] = cv
                t += _popcnt(cv)
            oldp = pinned[v]
            if t == 1:
                u_new = _single_bit_index(cand[v])
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
