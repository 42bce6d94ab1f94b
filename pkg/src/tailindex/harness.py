"""Timing and accuracy experiment harnesses.

`bench_estimators` times estimator calls on pre-generated Pareto samples
(generation is never timed) and reports min/median/mean/max in microseconds.
`run_accuracy_grid` sweeps true alpha x sample size x seed and records the
percentage error of each estimator, including Hill at fixed tail fractions.
"""
from __future__ import annotations

import csv
import json
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import estimators as est
from .core import TailIndexError
from .sampling import generate_pareto, make_rng

__all__ = [
    "BenchReport",
    "AccuracyRecord",
    "BENCH_TARGETS",
    "DEFAULT_BENCH_METHODS",
    "bench_estimators",
    "time_call",
    "run_accuracy_grid",
    "write_reports",
]

BENCH_SCHEMA = "tailindex.bench/1"
ACCURACY_SCHEMA = "tailindex.accuracy/1"
WARMUP_RUNS = 3

DEFAULT_BENCH_METHODS = ("mle", "ls", "mom", "pm", "mpm", "gmpm", "wls")
DEFAULT_ALPHAS = (0.5, 1.5, 2.2, 5.0)
DEFAULT_SIZES = (10**3, 10**5, 10**6)
DEFAULT_HILL_FRACTIONS = (0.25, 0.5, 0.75)
# six non-Hill methods (6 x 4 alphas x 3 sizes x 4 seeds = 288 records); GMPM is opt-in
DEFAULT_ACCURACY_METHODS = ("mle", "ls", "mom", "pm", "mpm", "wls", "hill")
ACCURACY_XMIN = 2.0


def _estimator_target(fn):
    def prepare(x, n, rng):
        return lambda: fn(x)
    return prepare


def _generation_target(x, n, rng):
    return lambda: generate_pareto(n, 1.2, 3.0, rng)


# name -> prepare(sample, size, rng) returning the zero-argument call to time
BENCH_TARGETS = {name: _estimator_target(fn) for name, fn in est.PUBLIC.items()}
BENCH_TARGETS["generate_pareto"] = _generation_target


@dataclass(frozen=True)
class BenchReport:
    method: str
    sample_size: int
    runs: int
    min: float
    median: float
    mean: float
    max: float
    warmup: int = WARMUP_RUNS
    status: str = "ok"
    error: str = ""


@dataclass(frozen=True)
class AccuracyRecord:
    method: str
    true_alpha: float
    sample_size: int
    seed_index: int
    alpha_hat: float
    error_pct: float
    k: int | None = None
    flag: str = ""
    error: str = ""


def time_call(fn, runs: int, warmup: int = WARMUP_RUNS) -> list[float]:
    """Durations of `runs` calls to `fn`, in microseconds, after untimed warmup."""
    for _ in range(warmup):
        fn()
    out = []
    clock = time.perf_counter_ns
    for _ in range(runs):
        t0 = clock()
        fn()
        out.append((clock() - t0) / 1e3)
    return out


def _summarize(method, n, durations, warmup) -> BenchReport:
    return BenchReport(
        method, n, len(durations),
        min(durations), statistics.median(durations), statistics.fmean(durations), max(durations),
        warmup,
    )


def bench_estimators(sizes, runs: int = 100, methods=DEFAULT_BENCH_METHODS, rng=None,
                     warmup: int = WARMUP_RUNS, alpha: float = 1.2, xmin: float = 3.0) -> list[BenchReport]:
    """Time each method on one Pareto(alpha, xmin) sample per size.

    A method that raises on some size produces a report with
    ``status="failed"`` and NaN timings; the run continues.
    """
    sizes = list(sizes)
    if not sizes:
        raise ValueError("sizes must be nonempty")
    if runs < 1:
        raise ValueError("runs must be >= 1")
    unknown = set(methods) - set(BENCH_TARGETS)
    if unknown:
        raise ValueError(f"unknown bench methods: {sorted(unknown)}")
    gen = make_rng(rng)
    reports = []
    for n in sizes:
        x = generate_pareto(n, alpha, xmin, gen)
        for m in methods:
            fn = BENCH_TARGETS[m](x, n, gen)
            try:
                reports.append(_summarize(m, n, time_call(fn, runs, warmup), warmup))
            except TailIndexError as exc:
                nan = float("nan")
                reports.append(BenchReport(m, n, runs, nan, nan, nan, nan, warmup, "failed", str(exc)))
    return reports


def _cell_seed(seed, alpha, n, seed_index):
    return np.random.SeedSequence([seed, round(alpha * 1000), n, seed_index])


def _accuracy_cell(args) -> list[AccuracyRecord]:
    alpha, n, seed_index, seed, methods, hill_fractions, xmin = args
    x = np.sort(generate_pareto(n, alpha, xmin, np.random.Generator(np.random.PCG64(_cell_seed(seed, alpha, n, seed_index)))))
    out = []

    def record(method, fn, k=None):
        flag = "expected_nonconvergence" if method == "mom" and alpha <= 1 else ""
        try:
            a_hat = fn().shape
        except TailIndexError as exc:
            nan = float("nan")
            out.append(AccuracyRecord(method, alpha, n, seed_index, nan, nan, k, flag or "failed", str(exc)))
            return
        out.append(AccuracyRecord(method, alpha, n, seed_index, a_hat, est.error_pct(alpha, a_hat), k, flag))

    for m in methods:
        if m == "mom":
            record(m, lambda: est._moment(x, warn=False))
        elif m != "hill":
            record(m, lambda: est.METHODS[m][1](x))
    if "hill" in methods:
        for frac in hill_fractions:
            k = max(1, int(round(frac * n)))
            record("hill", lambda: est._hill_rank(x, k, warn=False), k)
    return out


def run_accuracy_grid(alphas=DEFAULT_ALPHAS, sizes=DEFAULT_SIZES, seeds_per_cell: int = 4,
                      methods=DEFAULT_ACCURACY_METHODS, hill_fractions=DEFAULT_HILL_FRACTIONS,
                      seed: int = 0, xmin: float = ACCURACY_XMIN, workers: int = 1) -> list[AccuracyRecord]:
    """Estimate alpha on every (alpha, size, seed) Pareto sample.

    One sample is drawn per cell and shared by all methods. Hill is run with
    ``k = fraction * N`` for each entry of `hill_fractions`. MoM cells with
    ``alpha <= 1`` are flagged ``expected_nonconvergence`` rather than failed.
    """
    unknown = set(methods) - set(est.METHODS) - {"hill"}
    if unknown:
        raise ValueError(f"unknown methods: {sorted(unknown)}")
    cells = [
        (float(a), int(n), i, seed, tuple(methods), tuple(hill_fractions), xmin)
        for a in alphas for n in sizes for i in range(seeds_per_cell)
    ]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_accuracy_cell, cells))
    else:
        chunks = [_accuracy_cell(c) for c in cells]
    return [r for chunk in chunks for r in chunk]


def _write_csv(path, rows, cls):
    names = [f.name for f in fields(cls)]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(names)
        for r in rows:
            w.writerow(["" if getattr(r, k) is None else getattr(r, k) for k in names])


def _jsonable(v):
    if isinstance(v, float) and v != v:
        return None
    return v


def write_reports(rows, out_dir, stem: str, metadata: dict | None = None) -> tuple[str, str]:
    """Write `rows` (BenchReport or AccuracyRecord) as ``<stem>.csv`` and ``<stem>.json``."""
    rows = list(rows)
    cls = type(rows[0]) if rows else BenchReport
    schema = BENCH_SCHEMA if cls is BenchReport else ACCURACY_SCHEMA
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, f"{stem}.csv")
    json_path = os.path.join(out_dir, f"{stem}.json")
    _write_csv(csv_path, rows, cls)
    doc = {
        "schema": schema,
        "metadata": dict(metadata or {}),
        "rows": [{k: _jsonable(v) for k, v in asdict(r).items()} for r in rows],
    }
    with open(json_path, "w") as fh:
        json.dump(doc, fh, indent=1)
    return csv_path, json_path
