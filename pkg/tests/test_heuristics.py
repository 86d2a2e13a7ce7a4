import numpy as np
import pytest

from kswap import (Graph, HeuristicKind, VertexSet, fv_bio, gen_random,
                   is_clique, ld_bin, ld_bio, run_heuristic, sd_ext_won,
                   sd_won)
from kswap.heuristics import HEURISTICS

import oracles

ALL = [fv_bio, sd_won, sd_ext_won, ld_bio, ld_bin]
MAXIMAL = [fv_bio, sd_ext_won, ld_bio, ld_bin]  # sd_won may stop short


def star(leaves=4):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def test_fv_bio_examples(c5, k6):
    assert fv_bio(k6).members() == list(range(6))
    assert fv_bio(c5).members() == [0, 1]
    assert fv_bio(c5, VertexSet(5, [])).members() == []


def test_sd_won_examples(c5, k6):
    assert sd_won(k6).members() == list(range(6))
    path3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert sd_won(path3).members() == [1, 2]
    # C5 trace with lowest-index ties: drop 0, 1, 2; {3,4} is a clique
    got = sd_won(c5)
    assert got.members() == [3, 4]
    assert is_clique(c5, got)


def test_sd_ext_won_examples(k6):
    assert sd_ext_won(k6).members() == list(range(6))


def test_sd_ext_won_recovers_stranded_vertex():
    """min-degree stripping can discard a vertex the final clique accepts.

    Found by simulating removal traces over small random graphs: stripping
    ends at the edge {7, 10}, but vertex 0 (removed earlier, adjacent to
    both) survives the reverse re-scan, giving the triangle {0, 7, 10}.
    """
    edges = [(0, 1), (0, 2), (0, 7), (0, 8), (0, 10), (1, 4), (1, 6),
             (1, 9), (2, 5), (2, 8), (2, 9), (3, 4), (3, 8), (3, 10),
             (5, 9), (5, 10), (6, 9), (6, 10), (7, 9), (7, 10)]
    g = Graph.from_edges(11, edges)
    assert sd_won(g).members() == [7, 10]
    assert sd_ext_won(g).members() == [0, 7, 10]


def test_sd_ext_never_smaller_than_sd_won():
    rng = np.random.default_rng(83)
    for _ in range(60):
        n = int(rng.integers(1, 60))
        g = gen_random(n, float(rng.random()), rng)
        assert len(sd_ext_won(g)) >= len(sd_won(g))


def test_ld_bio_examples(c5, k6):
    assert ld_bio(k6).members() == list(range(6))
    assert ld_bio(star()).members() == [0, 1]
    assert ld_bio(c5).members() == fv_bio(c5).members() == [0, 1]


def test_ld_bin_examples(c5, k6):
    assert ld_bin(k6).members() == list(range(6))
    assert ld_bin(star()).members() == [0, 1]
    assert ld_bin(c5).members() == [0, 1]


def test_all_heuristics_on_complete_and_edgeless():
    for heuristic in ALL:
        assert heuristic(Graph.complete(9)).members() == list(range(9))
        assert len(heuristic(Graph.empty(9))) == 1
        assert len(heuristic(Graph.empty(1))) == 1


def test_results_are_cliques_within_sg():
    rng = np.random.default_rng(89)
    for _ in range(80):
        n = int(rng.integers(1, 70))
        g = gen_random(n, float(rng.random()), rng)
        size = int(rng.integers(1, n + 1))
        sg = VertexSet(n, (int(v) for v in rng.choice(n, size=size, replace=False)))
        for heuristic in ALL:
            got = heuristic(g, sg)
            assert got.issubset(sg)
            assert is_clique(g, got)


def test_maximality_within_sg():
    rng = np.random.default_rng(97)
    for _ in range(50):
        n = int(rng.integers(1, 60))
        g = gen_random(n, float(rng.random()), rng)
        members = [int(v) for v in rng.choice(n, size=int(rng.integers(1, n + 1)),
                                              replace=False)]
        sg = VertexSet(n, members)
        for heuristic in MAXIMAL:
            got = heuristic(g, sg)
            assert oracles.is_maximal_clique(g, got.members(), members)


def test_determinism():
    rng = np.random.default_rng(101)
    for _ in range(10):
        g = gen_random(int(rng.integers(1, 80)), float(rng.random()), rng)
        for heuristic in ALL:
            assert heuristic(g).members() == heuristic(g).members()


def test_registry_names():
    assert [k.value for k in HeuristicKind] == [
        "fv_bio", "sd_won", "sd_ext_won", "ld_bio", "ld_bin"]
    assert set(HEURISTICS) == set(HeuristicKind)
    g = Graph.complete(4)
    assert run_heuristic("ld_bin", g).members() == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        run_heuristic("greedy", g)
