"""Goal-rooted incremental planner for a moving agent.

Same g/rhs machinery as the forward planner, but rooted at the goal: g(s)
estimates the cost from s to the goal, and keys are measured toward the
agent's current cell,

    [min(g, rhs) + h(agent, s) + k_m; min(g, rhs)].

The offset k_m accumulates the heuristic distance covered by the agent
since the last recomputation, which keeps every stale open-list key a
valid lower bound, so moving does not force a re-sort.  Entries whose
stored key has fallen below their recomputed key are refreshed on pop.
On a static grid the first ``compute`` is plain backward A* and the
extracted path is optimal.
"""

from __future__ import annotations

from ..errors import InvalidCellError, NoPathError
from ..grid import euclidean_heuristic, neighbor_cells
from ..instrumentation import AllocationProbe, TrackedMap
from ..pqueue import LazyHeap
from .common import INF, SolverParams


class DStarLitePlanner:
    def __init__(self, grid, params: SolverParams | None = None, probe: AllocationProbe | None = None):
        self.grid = grid
        self.params = params or SolverParams()
        self.probe = probe or AllocationProbe()
        self._blocked = set(grid.blocked)
        self._g = TrackedMap(self.probe, default=INF)
        self._rhs = TrackedMap(self.probe, default=INF)
        self._open = LazyHeap(self.probe)
        self.expanded = 0
        self.position = grid.start
        self._last = grid.start
        self._k_m = 0.0
        self._rhs[grid.goal] = 0.0
        self._open.push(grid.goal, self._key(grid.goal))

    def _free(self, x: int, y: int) -> bool:
        return (x, y) not in self._blocked

    def _neighbors(self, cell):
        return neighbor_cells(
            cell, self.grid.width, self.grid.height, self._free, self.grid.allow_corner_cutting
        )

    def _key(self, s):
        m = min(self._g.get(s), self._rhs.get(s))
        return (m + euclidean_heuristic(self.position, s) + self._k_m, m)

    def _update_vertex(self, s) -> None:
        if s != self.grid.goal:
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
        """Expand until the agent's cell is consistent with a minimal key."""
        g, rhs, open_ = self._g, self._rhs, self._open
        pos = self.position
        while open_:
            top = open_.peek()
            if not (top[0] < self._key(pos) or rhs.get(pos) != g.get(pos)):
                break
            k_old, u = open_.pop()
            k_new = self._key(u)
            if k_old < k_new:
                # stale lower bound from before the agent moved
                self._open.push(u, k_new)
                continue
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
        if g.get(pos) == INF:
            raise NoPathError(f"no path from {tuple(pos)} to {tuple(self.grid.goal)}")

    def _best_move(self, cell):
        best = None
        best_val = INF
        for n, c in self._neighbors(cell):
            v = c + self._g.get(n)
            if v < best_val:
                best_val = v
                best = n
        return best, best_val

    def extract_path(self) -> list:
        """Greedy descent from the agent's cell toward the goal."""
        goal = self.grid.goal
        if self._g.get(self.position) == INF:
            raise NoPathError(f"no path from {tuple(self.position)} to {tuple(goal)}")
        path = [self.position]
        cur = self.position
        limit = self.grid.width * self.grid.height + 1
        while cur != goal:
            nxt, val = self._best_move(cur)
            if nxt is None or val == INF:
                raise NoPathError(f"path extraction stranded at {tuple(cur)}")
            cur = nxt
            path.append(cur)
            if len(path) > limit:
                raise NoPathError("path extraction cycled; values inconsistent")
        return path

    def advance(self, steps: int = 1) -> None:
        """Move the agent along the current optimal path."""
        for _ in range(steps):
            if self.position == self.grid.goal:
                return
            nxt, val = self._best_move(self.position)
            if nxt is None or val == INF:
                raise NoPathError(f"agent stranded at {tuple(self.position)}")
            self.position = nxt
        self._k_m += euclidean_heuristic(self._last, self.position)
        self._last = self.position

    def set_blocked(self, cell, blocked: bool = True) -> None:
        """Apply an obstacle change and re-queue the affected cells."""
        cell = (cell[0], cell[1])
        if cell == tuple(self.position) or cell == tuple(self.grid.goal):
            raise InvalidCellError(f"cannot toggle {cell}: agent/goal cells must stay traversable")
        self._k_m += euclidean_heuristic(self._last, self.position)
        self._last = self.position
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

    def solve(self) -> tuple:
        self.compute()
        path = self.extract_path()
        return path, self._g.get(self.position), self.expanded


def run(grid, params: SolverParams, probe: AllocationProbe):
    return DStarLitePlanner(grid, params, probe).solve()
