"""Every kernel must behave identically under numba and pure numpy."""
import numpy as np
import pytest

from kswap import gen_random
from kswap.kernels import get_backend

numba_k = get_backend("numba")
numpy_k = get_backend("numpy")

BACKENDS = [pytest.param(numba_k, id="numba"), pytest.param(numpy_k, id="numpy")]


def random_graph_words(rng, n=None, d=None):
    n = n if n is not None else int(rng.integers(1, 130))
    d = d if d is not None else float(rng.random())
    g = gen_random(n, d, rng)
    return g.adj, n


def random_subset(rng, n, nwords):
    words = np.zeros(nwords, np.uint64)
    for v in rng.choice(n, size=int(rng.integers(1, n + 1)), replace=False):
        words[int(v) >> 6] |= np.uint64(1) << np.uint64(int(v) & 63)
    return words


def test_popcount_and_bit_indices():
    rng = np.random.default_rng(1)
    for _ in range(20):
        words = rng.integers(0, 2**63, size=int(rng.integers(1, 9)),
                             dtype=np.uint64)
        assert numba_k.popcount(words) == numpy_k.popcount(words)
        assert np.array_equal(numba_k.bit_indices(words),
                              numpy_k.bit_indices(words))


def test_build_table_identical():
    assert np.array_equal(numba_k.build_table(), numpy_k.build_table())


def test_pack_and_fvs_qe_identical():
    rng = np.random.default_rng(2)
    table = numpy_k.build_table()
    for _ in range(30):
        adj, n = random_graph_words(rng)
        chunk = rng.choice(n, size=min(n, int(rng.integers(1, 7))),
                           replace=False).astype(np.int64)
        assert numba_k.pack_chunk(adj, chunk) == numpy_k.pack_chunk(adj, chunk)
        sg = random_subset(rng, n, adj.shape[1])
        assert np.array_equal(numba_k.fvs_qe(adj, table, sg),
                              numpy_k.fvs_qe(adj, table, sg))


def test_heuristic_kernels_identical():
    rng = np.random.default_rng(3)
    for _ in range(30):
        adj, n = random_graph_words(rng)
        sg = random_subset(rng, n, adj.shape[1])
        members = numpy_k.bit_indices(sg)
        assert np.array_equal(numba_k.degrees_in(adj, sg, members),
                              numpy_k.degrees_in(adj, sg, members))
        empty = np.zeros_like(sg)
        assert np.array_equal(numba_k.scan_join(adj, members, empty),
                              numpy_k.scan_join(adj, members, empty))
        qa, ra = numba_k.sd_won_trace(adj, sg)
        qb, rb = numpy_k.sd_won_trace(adj, sg)
        assert np.array_equal(qa, qb) and np.array_equal(ra, rb)
        assert np.array_equal(numba_k.ld_bin(adj, sg), numpy_k.ld_bin(adj, sg))


def test_local_search_state_kernels_identical():
    rng = np.random.default_rng(4)
    table = numpy_k.build_table()
    for _ in range(25):
        adj, n = random_graph_words(rng, d=float(rng.choice([0.3, 0.5, 0.7])))
        sg = np.zeros(adj.shape[1], np.uint64)
        for v in range(n):
            sg[v >> 6] |= np.uint64(1) << np.uint64(v & 63)
        order = np.arange(n, dtype=np.int64)
        q = numpy_k.scan_join(adj, order, np.zeros_like(sg))

        cand_a, pin_a = numba_k.build_candidates(adj, sg, q)
        cand_b, pin_b = numpy_k.build_candidates(adj, sg, q)
        assert np.array_equal(cand_a, cand_b) and np.array_equal(pin_a, pin_b)

        # walk both implementations through the same full descent
        qa, qb = q.copy(), q.copy()
        while True:
            ua, wa = numba_k.exists_improvement(adj, table, qa, cand_a)
            ub, wb = numpy_k.exists_improvement(adj, table, qb, cand_b)
            assert ua == ub and np.array_equal(wa, wb)
            if ua < 0:
                break
            ea = numba_k.apply_improvement(adj, sg, qa, cand_a, pin_a, ua, wa)
            eb = numpy_k.apply_improvement(adj, sg, qb, cand_b, pin_b, ub, wb)
            assert ea == eb == 0
            assert np.array_equal(qa, qb)
            assert np.array_equal(cand_a, cand_b)
            assert np.array_equal(pin_a, pin_b)
