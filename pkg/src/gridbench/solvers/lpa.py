"""Incremental forward planner built on one-step-lookahead (rhs) values.

Every touched cell carries two estimates of its cost from the start: g
(committed) and rhs (best over predecessors of g + step cost); a cell is
locally consistent when they agree.  The open list holds inconsistent
cells keyed lexicographically by

    [min(g, rhs) + h(cell, goal); min(g, rhs)]

and the shortest path is recomputed by expanding only inconsistent cells
until the goal is consistent with a minimal key.  The first run on a
static grid therefore behaves exactly like A*; after an edge change,
``set_blocked`` re-queues just the affected cells and the next
``compute`` repairs the solution instead of starting over.
"""

from __future__ import annotations

from ..errors import InvalidCellError, NoPathError
from ..grid import euclidean_heuristic, neighbor_cells
from ..instrumentation import AllocationProbe, TrackedMap
from ..pqueue import LazyHeap
from .common import INF, SolverParams


class LpaStarPlanner:
    def __init__(self, grid, params: SolverParams | None = None, probe: AllocationProbe | None = None):
        self.grid = grid
        self.params = params or SolverParams()
        self.probe = probe or AllocationProbe()
        self._blocked = set(grid.blocked)
        self._g = TrackedMap(self.probe, default=INF)
        self._rhs = TrackedMap(self.probe, default=INF)
        self._open = LazyHeap(self.probe)
        self.expanded = 0
        self._rhs[grid.start] = 0.0
        self._open.push(grid.start, self._key(grid.start))

    # -- movement model over the planner's own (mutable) blocked set --

    def _free(self, x: int, y: int) -> bool:
        return (x, y) not in self._blocked

    def _neighbors(self, cell):
        return neighbor_cells(
            cell, self.grid.width, self.grid.height, self._free, self.grid.allow_corner_cutting
        )

    def _key(self, s):
        m = min(self._g.get(s), self._rhs.get(s))
        return (m + euclidean_heuristic(s, self.grid.goal), m)

    def _update_vertex(self, s) -> None:
        if s != self.grid.start:
            if s in self._blocked:
                rhs = INF
            else:
                rhs = INF
                for n, c in self._neighbors(s):
                    v = self._g.get(n) + c
                    if v < rhs:
                        rhs = v
            self._rhs[s] = rhs
        self._open.remove(s)
        if self._g.get(s) != self._rhs.get(s):
            self._open.push(s, self._key(s))

    def compute(self) -> None:
        """Expand inconsistent cells until the goal is settled."""
        goal = self.grid.goal
        g, rhs, open_ = self._g, self._rhs, self._open
        while open_:
            top = open_.peek()
            if not (top[0] < self._key(goal) or rhs.get(goal) != g.get(goal)):
                break
            _, u = open_.pop()
            self.expanded += 1
            self.probe.expand(u)
            if g.get(u) > rhs.get(u):
                g[u] = rhs.get(u)
                for n, _ in self._neighbors(u):
                    self._update_vertex(n)
            else:
                g[u] = INF
                self._update_vertex(u)
                for n, _ in self._neighbors(u):
                    self._update_vertex(n)
        if g.get(goal) == INF:
            raise NoPathError(f"no path from {tuple(self.grid.start)} to {tuple(goal)}")

    def set_blocked(self, cell, blocked: bool = True) -> None:
        """Apply an obstacle change and re-queue the affected cells."""
        cell = (cell[0], cell[1])
        if cell == tuple(self.grid.start) or cell == tuple(self.grid.goal):
            raise InvalidCellError(f"cannot toggle {cell}: start/goal must stay traversable")
        if blocked:
            self._blocked.add(cell)
        else:
            self._blocked.discard(cell)
        x, y = cell
        self._update_vertex(cell)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                if dx == 0 and dy == 0:
                    continue
                nx, ny = x + dx, y + dy
                if 0 <= nx < self.grid.width and 0 <= ny < self.grid.height:
                    self._update_vertex((nx, ny))

    def extract_path(self) -> list:
        """Greedy descent from the goal along settled g values."""
        start, goal = self.grid.start, self.grid.goal
        if self._g.get(goal) == INF:
            raise NoPathError(f"no path from {tuple(start)} to {tuple(goal)}")
        path = [goal]
        cur = goal
        limit = self.grid.width * self.grid.height + 1
        while cur != start:
            best = None
            best_val = INF
            for n, c in self._neighbors(cur):
                v = self._g.get(n) + c
                if v < best_val:
                    best_val = v
                    best = n
            if best is None or best_val == INF:
                raise NoPathError(f"path extraction stranded at {tuple(cur)}")
            cur = best
            path.append(cur)
            if len(path) > limit:
                raise NoPathError("path extraction cycled; values inconsistent")
        path.reverse()
        return path

    def solve(self) -> tuple:
        self.compute()
        path = self.extract_path()
        return path, self._g.get(self.grid.goal), self.expanded


def run(grid, params: SolverParams, probe: AllocationProbe):
    return LpaStarPlanner(grid, params, probe).solve()
