"""Anytime search: inflate the heuristic, publish, then repair.

Runs weighted A* rounds with f = g + w*h, starting at the configured
initial weight and lowering w by a fixed decrement down to 1
(2.5 -> 2.0 -> 1.5 -> 1.0 by default).  g values, parents, and the open
list persist across rounds; states found locally inconsistent while
closed are parked on an inconsistency list and re-opened for the next
round instead of restarting the search.  Every published cost is at most
w times the optimum for that round's w, costs never increase between
rounds, and the w = 1 round is exact.
"""

from __future__ import annotations

from ..errors import NoPathError
from ..grid import euclidean_heuristic
from ..instrumentation import MAP_ENTRY_BYTES, AllocationProbe, TrackedSet
from ..pqueue import LazyHeap
from .common import INF, SolverParams, reconstruct, tie_term


def run_detailed(grid, params: SolverParams, probe: AllocationProbe):
    """Returns (path, cost, expanded, iterates) with one (w, cost) per round."""
    start, goal = grid.start, grid.goal
    tb = params.tie_break
    h = euclidean_heuristic

    g = {start: 0.0}
    probe.alloc(MAP_ENTRY_BYTES)
    parents = {}
    open_ = LazyHeap(probe)
    closed = TrackedSet(probe)
    incons = TrackedSet(probe)
    expanded = 0
    iterates = []

    w = params.ara_initial_weight
    open_.push(start, (w * h(start, goal), tie_term(0.0, tb)))

    while True:
        # improve-path round at the current weight
        while open_:
            top = open_.peek()
            if top is not None and g.get(goal, INF) <= top[0][0]:
                break
            _, s = open_.pop()
            closed.add(s)
            expanded += 1
            probe.expand(s)
            gs = g[s]
            for n, c in grid.neighbors8(s):
                ng = gs + c
                if ng < g.get(n, INF):
                    if n not in g:
                        probe.alloc(MAP_ENTRY_BYTES)
                    g[n] = ng
                    if n not in parents:
                        probe.alloc(MAP_ENTRY_BYTES)
                    parents[n] = s
                    if n in closed:
                        incons.add(n)
                    else:
                        open_.push(n, (ng + w * h(n, goal), tie_term(ng, tb)))
        cost = g.get(goal, INF)
        if cost == INF:
            raise NoPathError(f"no path from {tuple(start)} to {tuple(goal)}")
        iterates.append((w, cost))
        if w <= 1.0 or (not open_ and not incons):
            break
        w = max(1.0, w - params.ara_weight_decrement)
        # re-open surviving open entries and the inconsistency list at the new weight
        reopen = open_.live_items()
        for s in incons:
            if s not in open_:
                reopen.append(s)
        open_.release()
        incons.release()
        closed.release()
        for s in reopen:
            open_.push(s, (g[s] + w * h(s, goal), tie_term(g[s], tb)))

    path = reconstruct(parents, goal, start) if goal != start else [start]
    return path, g[goal], expanded, iterates


def run(grid, params: SolverParams, probe: AllocationProbe):
    path, cost, expanded, _ = run_detailed(grid, params, probe)
    return path, cost, expanded
