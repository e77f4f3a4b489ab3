"""Measurement harness: one timed run, repeated runs, and aggregation.

Timing wraps only the solve call on a monotonic clock; grid construction
and probe setup stay outside.  Reported memory is the probe's high-water
mark (see instrumentation), so for deterministic solvers only
solve_time_ms varies between repetitions.  A discarded warm-up run
precedes the timed repetitions.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .errors import MeasurementError
from .instrumentation import AllocationProbe
from .solvers import AlgorithmId, SolverParams, solve

METRIC_NAMES = ("path_cost", "memory_kb", "solve_time_ms")


@dataclass(frozen=True)
class RunMetrics:
    path_cost: float
    memory_kb: float
    solve_time_ms: float


@dataclass(frozen=True)
class AggregateStats:
    n: int
    mean: float
    stddev: float
    min: float
    max: float


def aggregate(samples) -> AggregateStats:
    """Mean and sample (n-1) standard deviation of a nonempty list."""
    samples = list(samples)
    n = len(samples)
    if n == 0:
        raise MeasurementError("cannot aggregate an empty sample list")
    lo, hi = min(samples), max(samples)
    # clamp away the one-ULP drift fsum division can introduce
    mean = min(max(math.fsum(samples) / n, lo), hi)
    if n > 1:
        var = math.fsum((x - mean) ** 2 for x in samples) / (n - 1)
        stddev = math.sqrt(var)
    else:
        stddev = 0.0
    return AggregateStats(n=n, mean=mean, stddev=stddev, min=lo, max=hi)


def measure_run(grid, algo: AlgorithmId, params: SolverParams | None = None) -> RunMetrics:
    """One instrumented solve; propagates NoPathError on unsolvable grids."""
    probe = AllocationProbe()
    t0 = time.perf_counter()
    outcome = solve(grid, algo, params, probe)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    if probe.peak_bytes <= 0:
        raise MeasurementError(f"probe recorded no allocations for {algo}")
    return RunMetrics(
        path_cost=outcome.path_cost,
        memory_kb=probe.peak_bytes / 1024.0,
        solve_time_ms=elapsed_ms,
    )


def run_repetitions(grid, algo: AlgorithmId, params: SolverParams | None = None,
                    reps: int = 100, warmup: bool = True) -> dict:
    """Repeated measure_run, aggregated per metric."""
    if reps < 1:
        raise MeasurementError(f"reps must be >= 1, got {reps}")
    if warmup:
        measure_run(grid, algo, params)
    runs = [measure_run(grid, algo, params) for _ in range(reps)]
    return {
        "path_cost": aggregate([r.path_cost for r in runs]),
        "memory_kb": aggregate([r.memory_kb for r in runs]),
        "solve_time_ms": aggregate([r.solve_time_ms for r in runs]),
    }
