"""Real-time agents: bounded lookahead episodes interleaved with movement.

Both agents repeat the same cycle until the goal is reached: run a
best-first lookahead of at most ``lookahead`` expansions from the current
cell, raise the stored heuristic over the expanded region, then move.  If
the lookahead reaches the goal the agent commits to the found path;
otherwise it takes one step toward the best frontier state (minimum
g + h, ties broken by insertion order).  The executed trajectory,
revisits included, is the reported path.

The two update rules:

* LRTA* (learning): rebuild h over the expanded region by a
  shortest-path backup from the frontier, i.e. the fixpoint of
  h(s) = min over neighbors s' of step_cost(s, s') + h(s');
* RTAA* (adaptive): the bulk rule h(s) = f(best frontier) - g(s) for
  every s expanded this episode.

Both preserve consistency of the (consistent) straight-line heuristic,
which is what guarantees the agent escapes every local minimum.

Value stores follow the canonical real-time-search implementation: dense
per-cell arrays (h, g, search tree, generation counters) allocated for
the whole grid once per solve and reset per episode by counter, so the
live footprint scales with the grid area rather than the touched region.
"""

from __future__ import annotations

import heapq

from ..errors import NoPathError
from ..grid import SQRT2, euclidean_heuristic, step_cost
from ..instrumentation import (
    ARRAY_SLOT_BYTES,
    HEAP_ENTRY_BYTES,
    SET_ENTRY_BYTES,
    AllocationProbe,
)
from ..pqueue import LazyHeap
from .common import SolverParams, TieBreak

_N_ARRAYS = 5  # h, g, tree, generated-counter, expanded-counter


class RealTimeAgent:
    """Stepwise driver, exposed so tests can inspect per-episode state."""

    def __init__(self, grid, params: SolverParams, probe: AllocationProbe, adaptive: bool):
        self.grid = grid
        self.params = params
        self.probe = probe
        self.adaptive = adaptive
        w, h = grid.width, grid.height
        self._width = w
        ncells = w * h
        gx, gy = grid.goal
        self._h = [euclidean_heuristic((x, y), (gx, gy)) for y in range(h) for x in range(w)]
        self._g = [0.0] * ncells
        self._tree = [-1] * ncells
        self._gen = [0] * ncells
        self._exp = [0] * ncells
        probe.alloc(_N_ARRAYS * ncells * ARRAY_SLOT_BYTES)
        self._arrays_live = True
        self._episode = 0
        self.position = grid.start
        self.path = [grid.start]
        self.path_cost = 0.0
        self.expanded = 0
        self.done = False
        # any finite shortest path costs less than sqrt(2) x cell count;
        # stored h climbing past this bound proves the goal unreachable
        self._h_cap = ncells * SQRT2 + 1.0
        self.last_closed = []  # cells expanded by the most recent episode

    def _idx(self, c) -> int:
        return c[1] * self._width + c[0]

    def h_value(self, c) -> float:
        """Current stored heuristic for a cell."""
        return self._h[self._idx(c)]

    def _release_arrays(self) -> None:
        if self._arrays_live:
            self.probe.free(_N_ARRAYS * len(self._h) * ARRAY_SLOT_BYTES)
            self._arrays_live = False

    def run_episode(self) -> bool:
        """One plan/update/move cycle; returns True once the goal is reached."""
        if self.done:
            return True
        grid, probe = self.grid, self.probe
        width = self._width
        h_arr, g_arr, tree, gen, exp = self._h, self._g, self._tree, self._gen, self._exp
        high_g = self.params.tie_break is TieBreak.HIGH_G
        self._episode += 1
        eid = self._episode
        origin = self.position
        goal = grid.goal
        oi = origin[1] * width + origin[0]
        g_arr[oi] = 0.0
        gen[oi] = eid
        tree[oi] = -1
        open_ = LazyHeap(probe)
        open_.push(origin, (h_arr[oi], 0.0))
        closed = []
        budget = self.params.lookahead
        expd = 0
        reached = False
        while open_ and expd < budget:
            _, s = open_.pop()
            expd += 1
            probe.expand(s)
            if s == goal:
                reached = True
                break
            si = s[1] * width + s[0]
            exp[si] = eid
            closed.append(s)
            probe.alloc(ARRAY_SLOT_BYTES)  # closed stack slot
            gs = g_arr[si]
            for n, c in grid.neighbors8(s):
                ni = n[1] * width + n[0]
                ng = gs + c
                if gen[ni] != eid or ng < g_arr[ni]:
                    g_arr[ni] = ng
                    gen[ni] = eid
                    tree[ni] = si
                    open_.push(n, (ng + h_arr[ni], -ng if high_g else ng))
        self.expanded += expd
        self.last_closed = closed

        if reached:
            tail = self._chain_to(goal, oi)
            for step in tail:
                self.path_cost += step_cost(self.position, step)
                self.path.append(step)
                self.position = step
            self._finish_episode(open_, closed)
            self.done = True
            self._release_arrays()
            return True

        top = open_.peek()
        if top is None:
            self._finish_episode(open_, closed)
            self._release_arrays()
            raise NoPathError(f"goal {tuple(goal)} unreachable from {tuple(grid.start)}")
        best = top[1]

        if self.adaptive:
            bi = best[1] * width + best[0]
            f_best = g_arr[bi] + h_arr[bi]
            for s in closed:
                si = s[1] * width + s[0]
                h_arr[si] = f_best - g_arr[si]
        else:
            self._learning_backup(open_, eid)

        step = self._chain_to(best, oi)[0]
        self.path_cost += step_cost(self.position, step)
        self.path.append(step)
        self.position = step
        self._finish_episode(open_, closed)
        if self.position == goal:
            self.done = True
            self._release_arrays()
            return True
        if h_arr[self.position[1] * width + self.position[0]] > self._h_cap:
            self._release_arrays()
            raise NoPathError(f"goal {tuple(goal)} unreachable from {tuple(grid.start)}")
        return False

    def _chain_to(self, end, origin_idx: int) -> list:
        """Tree path origin -> end as coords, origin excluded."""
        width = self._width
        tree = self._tree
        out = []
        ci = end[1] * width + end[0]
        while ci != origin_idx:
            out.append((ci % width, ci // width))
            ci = tree[ci]
        out.reverse()
        return out

    def _finish_episode(self, open_: LazyHeap, closed: list) -> None:
        open_.release()
        self.probe.free(ARRAY_SLOT_BYTES * len(closed))

    def _learning_backup(self, open_: LazyHeap, eid: int) -> None:
        """Dijkstra from the frontier into this episode's expanded region."""
        grid, probe = self.grid, self.probe
        width = self._width
        h_arr, exp = self._h, self._exp
        pq = []
        seq = 0
        for s in open_.live_items():
            seq += 1
            pq.append((h_arr[s[1] * width + s[0]], seq, s))
            probe.alloc(HEAP_ENTRY_BYTES)
        heapq.heapify(pq)
        settled = set()
        while pq:
            d, _, s = heapq.heappop(pq)
            probe.free(HEAP_ENTRY_BYTES)
            si = s[1] * width + s[0]
            if si in settled:
                continue
            settled.add(si)
            probe.alloc(SET_ENTRY_BYTES)
            if exp[si] == eid:
                h_arr[si] = d
            for n, c in grid.neighbors8(s):
                ni = n[1] * width + n[0]
                if exp[ni] == eid and ni not in settled:
                    seq += 1
                    heapq.heappush(pq, (d + c, seq, n))
                    probe.alloc(HEAP_ENTRY_BYTES)
        probe.free(SET_ENTRY_BYTES * len(settled))

    def run(self):
        while not self.run_episode():
            pass
        return self.path, self.path_cost, self.expanded


def run_lrta(grid, params: SolverParams, probe: AllocationProbe):
    return RealTimeAgent(grid, params, probe, adaptive=False).run()


def run_rtaa(grid, params: SolverParams, probe: AllocationProbe):
    return RealTimeAgent(grid, params, probe, adaptive=True).run()
