"""Optimal reference search: A* under the straight-line heuristic.

The heuristic is consistent on an 8-connected grid, so the first expansion
of the goal carries the true minimum cost; this solver is the exactness
oracle the rest of the suite is measured against.
"""

from __future__ import annotations

from ..errors import NoPathError
from ..grid import euclidean_heuristic
from ..instrumentation import MAP_ENTRY_BYTES, AllocationProbe
from ..pqueue import LazyHeap
from .common import INF, SolverParams, reconstruct, tie_term


def run(grid, params: SolverParams, probe: AllocationProbe):
    """Returns (path, path_cost, expanded)."""
    start, goal = grid.start, grid.goal
    tb = params.tie_break
    g = {start: 0.0}
    parents = {}
    probe.alloc(MAP_ENTRY_BYTES)
    open_ = LazyHeap(probe)
    open_.push(start, (euclidean_heuristic(start, goal), tie_term(0.0, tb)))
    expanded = 0
    while open_:
        _, s = open_.pop()
        expanded += 1
        probe.expand(s)
        if s == goal:
            path = reconstruct(parents, goal, start)
            return path, g[goal], expanded
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
                open_.push(n, (ng + euclidean_heuristic(n, goal), tie_term(ng, tb)))
    raise NoPathError(f"no path from {tuple(start)} to {tuple(goal)}")
