import io

import numpy as np
import pytest

from kswap import (BenchRecord, GenRnSpec, PRESETS, ProblemMode,
                   algorithm_names, build_report, complement, emit_csv,
                   emit_dimacs, gen_collection, load_best_known,
                   gen_random, relative_solution_measure, relative_time_measure,
                   run_suite, solve_one)


def rec(instance, algorithm, size, ns, problem="mcp"):
    return BenchRecord(instance, 10, 20, problem, algorithm, size, ns)


def test_algorithm_registry():
    names = algorithm_names()
    assert names == ["fv_bio", "sd_won", "sd_ext_won", "ld_bio", "ld_bin",
                     "ls_1_k_fv_bio", "ls_1_k_sd_won", "ls_1_k_sd_ext_won",
                     "ls_1_k_ld_bio", "ls_1_k_ld_bin"]


def test_solve_one_modes(c5):
    assert len(solve_one(c5, "fv_bio")) == 2
    assert len(solve_one(c5, "ls_1_k_ld_bin")) == 2
    # alpha(C5) = 2 as well, solved on the materialized complement
    assert len(solve_one(c5, "fv_bio", ProblemMode.MAX_INDEPENDENT_SET)) == 2
    with pytest.raises(ValueError):
        solve_one(c5, "dijkstra")


def test_run_suite_record_shape(c5):
    records = run_suite([("c5", c5)], ["fv_bio", "ls_1_k_ld_bin"])
    assert len(records) == 2
    for r in records:
        assert (r.instance, r.n, r.m, r.problem) == ("c5", 5, 5, "mcp")
        assert r.solution_size == 2
        assert r.time_ns > 0
    assert [r.algorithm for r in records] == ["fv_bio", "ls_1_k_ld_bin"]


def test_run_suite_mis(c5):
    records = run_suite([("c5", c5)], ["fv_bio"],
                        ProblemMode.MAX_INDEPENDENT_SET)
    assert records[0].solution_size == 2
    assert records[0].problem == "mis"


def test_run_suite_skips_unreadable(tmp_path, c5):
    good = tmp_path / "c5.clq"
    with open(good, "w") as fh:
        emit_dimacs(c5, fh)
    bad = tmp_path / "bad.clq"
    bad.write_text("p edge 2 1\ne 1 9\n")
    records = run_suite([bad, good], ["fv_bio"])
    assert [r.instance for r in records] == ["c5"]


def test_run_suite_rejects_unknown_algo(c5):
    with pytest.raises(ValueError):
        run_suite([("c5", c5)], ["fv_bio", "nope"])


def test_run_suite_parallel_matches_serial(c5, k6):
    instances = [("c5", c5), ("k6", k6), ("c5b", c5)]
    serial = run_suite(instances, ["fv_bio", "ld_bin"])
    parallel = run_suite(instances, ["fv_bio", "ld_bin"], jobs=3)
    assert [(r.instance, r.algorithm, r.solution_size) for r in serial] == \
           [(r.instance, r.algorithm, r.solution_size) for r in parallel]


def test_relative_solution_measure():
    records = [rec("g", "a", 4, 100), rec("g", "b", 5, 100)]
    ratios = relative_solution_measure(records)
    assert ratios[("g", "a")] == pytest.approx(0.8)
    assert ratios[("g", "b")] == pytest.approx(1.0)


def test_relative_solution_measure_single_algorithm():
    ratios = relative_solution_measure([rec("g", "a", 7, 5)])
    assert ratios[("g", "a")] == 1.0


def test_relative_solution_measure_with_best_known():
    records = [rec("g", "a", 4, 100), rec("g", "b", 5, 100)]
    ratios = relative_solution_measure(records, {"g": 10})
    assert ratios[("g", "a")] == pytest.approx(0.4)
    assert ratios[("g", "b")] == pytest.approx(0.5)


def test_relative_solution_measure_rejects_stale_best_known():
    with pytest.raises(ValueError):
        relative_solution_measure([rec("g", "a", 5, 1)], {"g": 4})


def test_relative_time_measure():
    records = [rec("g", "a", 1, 1_000_000), rec("g", "b", 1, 2_000_000)]
    ratios = relative_time_measure(records)
    assert ratios[("g", "a")] == pytest.approx(1.0)
    assert ratios[("g", "b")] == pytest.approx(0.5)
    assert relative_time_measure([rec("g", "a", 1, 77)])[("g", "a")] == 1.0
    tied = relative_time_measure([rec("g", "a", 1, 300), rec("g", "b", 1, 300)])
    assert set(tied.values()) == {1.0}


def test_report_per_instance_maximum_is_one():
    records = [rec("g1", "a", 4, 100), rec("g1", "b", 5, 400),
               rec("g2", "a", 3, 900), rec("g2", "b", 2, 300)]
    report = build_report(records)
    for instance in ("g1", "g2"):
        assert max(report.solution_ratios[(instance, a)] for a in ("a", "b")) == 1.0
        assert max(report.time_ratios[(instance, a)] for a in ("a", "b")) == 1.0


def test_report_means():
    records = [rec("g1", "a", 4, 100), rec("g1", "b", 5, 400),
               rec("g2", "a", 3, 900), rec("g2", "b", 3, 300)]
    report = build_report(records)
    assert report.mean_solution_ratio("a") == pytest.approx((0.8 + 1.0) / 2)
    assert report.mean_time_ratio("b") == pytest.approx((0.25 + 1.0) / 2)


def test_gen_rn_spec_sweeps():
    spec = GenRnSpec(1, 250, 250, 999, 0.1, 0.2, 0.9, d_stop_inclusive=False)
    assert spec.orders() == [250, 500, 750]
    assert spec.densities() == [0.1, 0.3, 0.5, 0.7]
    assert len(gen_collection(spec)) == 12
    inclusive = GenRnSpec(1, 250, 250, 999, 0.1, 0.2, 0.9)
    assert inclusive.densities() == [0.1, 0.3, 0.5, 0.7, 0.9]
    with pytest.raises(ValueError):
        GenRnSpec(1, 10, 0, 20, 0.1, 0.2, 0.9)


def test_gen_collection_empty_and_deterministic():
    assert gen_collection(GenRnSpec(0, 10, 10, 30, 0.1, 0.2, 0.5)) == []
    spec = GenRnSpec(2, 10, 10, 30, 0.1, 0.4, 0.9, seed=5)
    a = gen_collection(spec)
    b = gen_collection(spec)
    assert [name for name, _ in a] == [name for name, _ in b]
    assert all(ga == gb for (_, ga), (_, gb) in zip(a, b))
    assert a[0][0] == "rn10_d0.1_r0"
    # stream advances between graphs: repetitions differ
    by_name = dict(a)
    assert by_name["rn20_d0.5_r0"] != by_name["rn20_d0.5_r1"]


def test_presets_match_published_parameters():
    assert PRESETS["c1"].orders() == [250, 500, 750]
    assert PRESETS["c2"].orders() == list(range(1000, 9999, 500))
    assert PRESETS["c3"].orders() == list(range(10000, 50000, 5000))
    for preset in PRESETS.values():
        assert preset.densities() == [0.1, 0.3, 0.5, 0.7, 0.9]
    assert PRESETS["c1"].n_rpt == 100
    assert PRESETS["c3"].scaled(100).orders() == [100, 150, 200, 250,
                                                  300, 350, 400, 450]


def test_emit_csv_layout(c5):
    records = run_suite([("c5", c5)], ["fv_bio", "ld_bin"])
    sink = io.StringIO()
    emit_csv(build_report(records), records, sink)
    lines = sink.getvalue().splitlines()
    assert lines[0] == ("instance,n,m,problem,algorithm,solution_size,"
                        "time_ns,ratio_solution,ratio_time")
    assert len([l for l in lines if l.startswith("c5,")]) == 2
    for line in lines[1:3]:
        assert line.split(",")[7] == "1.000"
    assert any(l.startswith("# summary") for l in lines)
    assert "algorithm,problem,mean_ratio_solution,mean_ratio_time" in lines


def test_emit_csv_empty():
    sink = io.StringIO()
    emit_csv(build_report([]), [], sink)
    lines = sink.getvalue().splitlines()
    assert lines[0].startswith("instance,")
    assert any(l.startswith("# summary") for l in lines)


def test_emit_csv_summary_mean():
    records = [rec("g1", "a", 4, 100), rec("g1", "b", 5, 100),
               rec("g2", "a", 6, 100), rec("g2", "b", 6, 100)]
    sink = io.StringIO()
    emit_csv(build_report(records), records, sink)
    summary = [l for l in sink.getvalue().splitlines() if l.startswith("a,")]
    assert summary == ["a,mcp,0.900,1.000"]


def test_load_best_known(tmp_path):
    path = tmp_path / "bk.csv"
    path.write_text("instance,size\nbrock200_2,12\nkeller4,11\n")
    assert load_best_known(path) == {"brock200_2": 12, "keller4": 11}
    bare = tmp_path / "bare.csv"
    bare.write_text("g1,5\n")
    assert load_best_known(bare) == {"g1": 5}


def test_mcp_mis_duality_suite():
    rng = np.random.default_rng(131)
    for _ in range(10):
        n = int(rng.integers(1, 60))
        g = gen_random(n, float(rng.random()), rng)
        for algo in ("fv_bio", "ld_bin", "ls_1_k_ld_bin"):
            mis = solve_one(g, algo, ProblemMode.MAX_INDEPENDENT_SET)
            mcp = solve_one(complement(g), algo, ProblemMode.MAX_CLIQUE)
            assert len(mis) == len(mcp)


def test_degenerate_orders():
    from kswap import Graph

    for n, expect in ((0, 0), (1, 1)):
        g = Graph.empty(n)
        for algo in algorithm_names():
            assert len(solve_one(g, algo)) == expect


def test_mean_ratio_dominance_end_to_end():
    """Swap-improved variants never average below their seed heuristic."""
    rng = np.random.default_rng(137)
    collection = [(f"g{i}", gen_random(int(rng.integers(10, 80)),
                                       float(rng.choice([0.3, 0.5, 0.7])), rng))
                  for i in range(12)]
    report = build_report(run_suite(collection, algorithm_names()))
    for seed in ("fv_bio", "sd_won", "sd_ext_won", "ld_bio", "ld_bin"):
        assert (report.mean_solution_ratio(f"ls_1_k_{seed}")
                >= report.mean_solution_ratio(seed))


def test_suite_rerun_reproduces_sizes():
    rng = np.random.default_rng(139)
    collection = [(f"g{i}", gen_random(40, 0.5, rng)) for i in range(4)]
    first = run_suite(collection, ["ld_bin", "ls_1_k_ld_bin"])
    second = run_suite(collection, ["ld_bin", "ls_1_k_ld_bin"])
    assert [r.solution_size for r in first] == [r.solution_size for r in second]
