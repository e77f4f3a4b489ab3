"""Deterministic construction of the two benchmark environment families.

Random family: n x n grids with an exact obstacle count
floor(density * (n^2 - 2) + 0.5), obstacles drawn uniformly without
replacement from all cells except start and goal, and a start/goal pair
whose Euclidean separation lands within 0.5 of the requested distance.
Draws that leave the goal unreachable are rejected wholesale.

Wall family: fixed 31-wide x 71-tall grids with full-width-minus-gap
horizontal walls every 10 rows, anchored to the left edge on odd rows
and the right edge on even ones.

Sampling uses only random.Random().random(), the one stream the stdlib
guarantees stable across versions, so equal specs always serialize to
identical bytes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import GenerationError, InvalidSpecError
from .grid import SQRT2, Coord, Grid, euclidean_heuristic

MAX_GENERATION_ATTEMPTS = 1000

WALL_GRID_WIDTH = 31
WALL_GRID_HEIGHT = 71
WALL_ROW_SPACING = 10
WALL_GRID_START = Coord(1, 1)
WALL_GRID_GOAL = Coord(29, 69)


@dataclass(frozen=True)
class RandomGridSpec:
    n: int
    density: float
    sg_distance: float
    seed: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidSpecError(f"grid side must be >= 3, got {self.n}")
        if not 0.0 <= self.density < 1.0:
            raise InvalidSpecError(f"density must be in [0, 1), got {self.density}")
        if not 0.0 <= self.sg_distance <= SQRT2 * (self.n - 1):
            raise InvalidSpecError(
                f"sg_distance {self.sg_distance} out of [0, {SQRT2 * (self.n - 1):.3f}] for n={self.n}"
            )
        if self.seed < 0:
            raise InvalidSpecError(f"seed must be nonnegative, got {self.seed}")


@dataclass(frozen=True)
class WallGridSpec:
    num_walls: int
    wall_length: int

    def __post_init__(self):
        if not 0 <= self.num_walls <= 7:
            raise InvalidSpecError(f"num_walls must be in [0, 7], got {self.num_walls}")
        if not 1 <= self.wall_length <= 29:
            raise InvalidSpecError(f"wall_length must be in [1, 29], got {self.wall_length}")


def obstacle_count(n: int, density: float) -> int:
    """Exact blocked-cell count: round-half-up of density * (n^2 - 2)."""
    return math.floor(density * (n * n - 2) + 0.5)


def _rand_below(rng: random.Random, n: int) -> int:
    return min(int(rng.random() * n), n - 1)


@lru_cache(maxsize=64)
def _distance_ring(n: int, sg_distance: float) -> tuple:
    """Integer offsets whose length is within 0.5 of sg_distance."""
    lo, hi = sg_distance - 0.5, sg_distance + 0.5
    ring = []
    for dy in range(-(n - 1), n):
        for dx in range(-(n - 1), n):
            if lo <= math.hypot(dx, dy) <= hi:
                ring.append((dx, dy))
    return tuple(ring)


def is_solvable(grid: Grid) -> bool:
    """Breadth-first reachability of the goal from the start."""
    if grid.start == grid.goal:
        return True
    seen = {grid.start}
    frontier = [grid.start]
    goal = grid.goal
    while frontier:
        nxt = []
        for c in frontier:
            for n, _ in grid.neighbors8(c):
                if n == goal:
                    return True
                if n not in seen:
                    seen.add(n)
                    nxt.append(n)
        frontier = nxt
    return False


def generate_random_grid(spec: RandomGridSpec, allow_corner_cutting: bool = False) -> Grid:
    rng = random.Random(spec.seed)
    n = spec.n
    target = obstacle_count(n, spec.density)
    ring = _distance_ring(n, spec.sg_distance)
    for _ in range(MAX_GENERATION_ATTEMPTS):
        start = Coord(_rand_below(rng, n), _rand_below(rng, n))
        goals = [
            Coord(start.x + dx, start.y + dy)
            for dx, dy in ring
            if 0 <= start.x + dx < n and 0 <= start.y + dy < n
        ]
        if not goals:
            continue
        goal = goals[_rand_below(rng, len(goals))]
        cells = [(x, y) for y in range(n) for x in range(n) if (x, y) != start and (x, y) != goal]
        if target > len(cells):
            continue
        # partial Fisher-Yates: first `target` positions become the blocked set
        m = len(cells)
        for i in range(target):
            j = i + _rand_below(rng, m - i)
            cells[i], cells[j] = cells[j], cells[i]
        grid = Grid(n, n, frozenset(cells[:target]), start, goal, allow_corner_cutting)
        if is_solvable(grid):
            return grid
    raise GenerationError(
        f"no solvable placement after {MAX_GENERATION_ATTEMPTS} attempts for {spec}"
    )


def generate_instance_set(spec: RandomGridSpec, count: int,
                          allow_corner_cutting: bool = False) -> list[Grid]:
    """`count` grids from consecutive seeds spec.seed .. spec.seed + count - 1."""
    if count < 1:
        raise InvalidSpecError(f"count must be >= 1, got {count}")
    return [
        generate_random_grid(replace(spec, seed=spec.seed + i), allow_corner_cutting)
        for i in range(count)
    ]


def generate_wall_grid(spec: WallGridSpec, allow_corner_cutting: bool = False) -> Grid:
    blocked = set()
    for k in range(1, spec.num_walls + 1):
        y = WALL_ROW_SPACING * k
        if k % 2 == 1:
            xs = range(0, spec.wall_length)
        else:
            xs = range(WALL_GRID_WIDTH - spec.wall_length, WALL_GRID_WIDTH)
        for x in xs:
            blocked.add(Coord(x, y))
    grid = Grid(
        WALL_GRID_WIDTH, WALL_GRID_HEIGHT, frozenset(blocked),
        WALL_GRID_START, WALL_GRID_GOAL, allow_corner_cutting,
    )
    if not is_solvable(grid):
        raise GenerationError(f"wall grid for {spec} is unsolvable")
    return grid


def wall_length_sequence() -> list[int]:
    """Seven wall lengths: half the grid width, then +2 per step."""
    first = WALL_GRID_WIDTH // 2
    return [first + 2 * i for i in range(7)]


def sg_distance(grid: Grid) -> float:
    return euclidean_heuristic(grid.start, grid.goal)
