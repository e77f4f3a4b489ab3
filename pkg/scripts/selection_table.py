#!/usr/bin/env python3
"""Audit the selection rule against measured metrics.

Generates a handful of random and wall environments, benchmarks the
candidate trio (RTAA*, ARA*, D* Lite) on each, and prints one block per
grid showing every candidate's measurements, the per-priority winner, and
what the rule would have picked instead.

Usage:
    python scripts/selection_table.py [--reps N] [--seed N]
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from gridbench import (  # noqa: E402
    Priority,
    RandomGridSpec,
    SelectionRequest,
    WallGridSpec,
    evaluate_selection,
    generate_random_grid,
    generate_wall_grid,
)
from gridbench.reporting import fmt3  # noqa: E402


def describe(name, grid, reps):
    print(f"== {name}: {grid.width}x{grid.height}, "
          f"{len(grid.blocked)} blocked, start {tuple(grid.start)} goal {tuple(grid.goal)}")
    header = f"{'priority':<12} {'suggested':<12} {'winner':<12} {'correct':<8}"
    print(header)
    for priority in Priority:
        req = SelectionRequest(grid=grid, priority=priority)
        ev = evaluate_selection(grid, req, reps=reps)
        print(f"{priority.name:<12} {ev.selected.label:<12} {ev.best.label:<12} "
              f"{str(ev.selected_is_best).lower():<8}")
    metric_ev = evaluate_selection(
        grid, SelectionRequest(grid=grid, priority=Priority.MEMORY), reps=reps)
    print(f"{'candidate':<12} {'path_cost':>10} {'memory_kb':>10} {'time_ms':>10}")
    for cand in metric_ev.candidates:
        print(f"{cand.algorithm.label:<12} "
              f"{fmt3(cand.stats['path_cost'].mean):>10} "
              f"{fmt3(cand.stats['memory_kb'].mean):>10} "
              f"{fmt3(cand.stats['solve_time_ms'].mean):>10}")
    print()


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--reps", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    base = args.seed
    cases = [
        ("random d=0.35 n=100", generate_random_grid(
            RandomGridSpec(n=100, density=0.35, sg_distance=43, seed=base))),
        ("random d=0.25 n=100", generate_random_grid(
            RandomGridSpec(n=100, density=0.25, sg_distance=38, seed=base + 1))),
        ("random d=0.35 n=100 short", generate_random_grid(
            RandomGridSpec(n=100, density=0.35, sg_distance=36, seed=base + 2))),
        ("walls 6x25", generate_wall_grid(WallGridSpec(num_walls=6, wall_length=25))),
        ("walls 6x16", generate_wall_grid(WallGridSpec(num_walls=6, wall_length=16))),
    ]
    for name, grid in cases:
        describe(name, grid, args.reps)
    return 0


if __name__ == "__main__":
    sys.exit(main())
