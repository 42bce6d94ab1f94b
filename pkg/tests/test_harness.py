import csv
import json
import math

import numpy as np
import pytest

from tailindex import harness
from tailindex.harness import AccuracyRecord, BenchReport, bench_estimators, run_accuracy_grid, write_reports


@pytest.fixture(scope="module")
def grid_records():
    return run_accuracy_grid()


class TestBench:
    def test_report_ordering(self):
        reps = bench_estimators([200, 2000], runs=7, rng=1)
        assert [(r.method, r.sample_size) for r in reps] == [
            (m, n) for n in (200, 2000) for m in harness.DEFAULT_BENCH_METHODS
        ]
        for r in reps:
            assert r.runs == 7 and r.status == "ok" and r.warmup == harness.WARMUP_RUNS
            assert r.min <= r.median <= r.max
            assert r.min <= r.mean <= r.max

    def test_single_run(self):
        for r in bench_estimators([100], runs=1, rng=0):
            assert r.min == r.median == r.mean == r.max

    def test_same_cells(self):
        cells = lambda reps: [(r.method, r.sample_size) for r in reps]
        assert cells(bench_estimators([50, 60], runs=2, rng=3)) == cells(bench_estimators([50, 60], runs=2, rng=9))

    def test_failed_cell_recorded(self):
        # one observation makes every log-ratio estimator degenerate
        reps = bench_estimators([1], runs=3, methods=("mle", "generate_pareto"), rng=0)
        assert reps[0].status == "failed" and math.isnan(reps[0].median) and reps[0].error
        assert reps[1].status == "ok"

    def test_generation_target(self):
        (r,) = bench_estimators([1000], runs=3, methods=("generate_pareto",), rng=0)
        assert r.method == "generate_pareto" and r.median > 0

    def test_mle_scales_linearly(self):
        small, large = bench_estimators([10**5, 10**6], runs=15, methods=("mle",), rng=0)
        assert 5 <= large.median / small.median <= 20

    @pytest.mark.parametrize("kw", [dict(sizes=[]), dict(sizes=[10], runs=0), dict(sizes=[10], methods=("nope",))])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            bench_estimators(**kw)

    def test_time_call_excludes_warmup(self):
        calls = []
        out = harness.time_call(lambda: calls.append(1), runs=4, warmup=2)
        assert len(out) == 4 and len(calls) == 6


class TestAccuracyGrid:
    def test_cardinality(self, grid_records):
        non_hill = [r for r in grid_records if r.method != "hill"]
        hill = [r for r in grid_records if r.method == "hill"]
        assert len(non_hill) == 288
        assert len(hill) == 4 * 3 * 4 * 3
        assert {r.k for r in hill if r.sample_size == 10**6} == {250_000, 500_000, 750_000}

    def test_error_pct_consistent(self, grid_records):
        for r in grid_records:
            assert r.error_pct == pytest.approx(abs(r.true_alpha - r.alpha_hat) / r.true_alpha * 100)
            assert r.error_pct >= 0

    def test_hill_cell(self, grid_records):
        cell = [r for r in grid_records if r.method == "hill" and r.true_alpha == 5 and r.sample_size == 10**6 and r.k == 750_000]
        assert len(cell) == 4 and all(r.error_pct <= 0.5 for r in cell)

    def test_moment_flagged_not_failed(self, grid_records):
        mom = [r for r in grid_records if r.method == "mom" and r.true_alpha == 0.5]
        assert mom and all(r.flag == "expected_nonconvergence" and not r.error for r in mom)
        assert all(0.9 <= r.alpha_hat <= 1.1 for r in mom if r.sample_size >= 10**5)

    def test_mle_improves_with_size(self, grid_records):
        for a in harness.DEFAULT_ALPHAS:
            med = {n: np.median([r.error_pct for r in grid_records
                                 if r.method == "mle" and r.true_alpha == a and r.sample_size == n])
                   for n in (10**3, 10**6)}
            assert med[10**6] < med[10**3]

    def test_samples_shared_across_methods(self):
        recs = run_accuracy_grid(alphas=[1.5], sizes=[500], seeds_per_cell=1, methods=("mle", "hill"),
                                 hill_fractions=(1.0,))
        assert recs[0].alpha_hat == recs[1].alpha_hat

    def test_workers_give_same_records(self):
        kw = dict(alphas=[1.5, 5], sizes=[1000], seeds_per_cell=2)
        assert run_accuracy_grid(**kw, workers=2) == run_accuracy_grid(**kw)

    def test_all_methods_opt_in(self):
        recs = run_accuracy_grid(alphas=[2.2], sizes=[1000], seeds_per_cell=1,
                                 methods=("mle", "ls", "mom", "pm", "mpm", "gmpm", "wls"))
        assert [r.method for r in recs] == ["mle", "ls", "mom", "pm", "mpm", "gmpm", "wls"]

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            run_accuracy_grid(methods=("mle", "bogus"))


class TestReports:
    def test_bench_round_trip(self, tmp_path):
        reps = bench_estimators([100], runs=2, methods=("mle",), rng=0)
        csv_path, json_path = write_reports(reps, tmp_path, "bench", {"runs": 2})
        rows = list(csv.DictReader(open(csv_path)))
        assert rows[0]["method"] == "mle" and float(rows[0]["median"]) == reps[0].median
        doc = json.load(open(json_path))
        assert doc["schema"] == harness.BENCH_SCHEMA and doc["metadata"] == {"runs": 2}
        assert BenchReport(**doc["rows"][0]) == reps[0]

    def test_accuracy_round_trip(self, tmp_path):
        recs = run_accuracy_grid(alphas=[0.5], sizes=[100], seeds_per_cell=1)
        _, json_path = write_reports(recs, tmp_path, "acc")
        doc = json.load(open(json_path))
        assert doc["schema"] == harness.ACCURACY_SCHEMA
        assert [AccuracyRecord(**r) for r in doc["rows"]] == recs

    def test_nan_serialized_as_null(self, tmp_path):
        reps = bench_estimators([1], runs=1, methods=("mle",), rng=0)
        _, json_path = write_reports(reps, tmp_path, "b")
        assert json.load(open(json_path))["rows"][0]["median"] is None
