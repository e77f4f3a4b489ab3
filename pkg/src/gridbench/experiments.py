"""The five benchmark sweeps as configurable experiment plans.

Each sweep varies one environment parameter while holding the others at
fixed defaults (density 0.25, size 300x300, start-goal distance 140),
generates a set of instances per parameter value, measures every
algorithm on every instance, and aggregates per-instance means into one
report row per (algorithm, value).

The held-constant start-goal distance is capped at n - 1 on grids too
small to realize it, so the size sweep stays well defined at its lower
end; swept distance values are never adjusted.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from ._version import __version__
from .errors import ConfigError, GenerationError, InvalidSpecError
from .generators import (
    RandomGridSpec,
    WallGridSpec,
    generate_instance_set,
    generate_wall_grid,
    sg_distance,
    wall_length_sequence,
)
from .metrics import METRIC_NAMES, aggregate, run_repetitions
from .solvers import AlgorithmId, SolverParams

WALL_SIZE_LABEL = "31x71"


class SweepKind(Enum):
    GRID_SIZE = "grid_size"
    SG_DISTANCE = "sg_distance"
    DENSITY = "density"
    WALL_COUNT = "wall_count"
    WALL_LENGTH = "wall_length"


DEFAULT_ALGORITHMS = (
    AlgorithmId.LRTA_STAR,
    AlgorithmId.RTAA_STAR,
    AlgorithmId.ARA_STAR,
    AlgorithmId.LPA_STAR,
    AlgorithmId.D_STAR,
    AlgorithmId.D_STAR_LITE,
)

DEFAULT_SWEEP_VALUES = {
    SweepKind.GRID_SIZE: (50, 100, 150, 200, 250, 300),
    SweepKind.SG_DISTANCE: (20, 60, 100, 140, 180, 220, 260),
    SweepKind.DENSITY: (0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40),
    SweepKind.WALL_COUNT: (0, 1, 2, 3, 4, 5, 6, 7),
    SweepKind.WALL_LENGTH: tuple(wall_length_sequence()),
}

# wall-count sweeps hold the wall length at the sequence start (half width)
WALL_GRID_DEFAULT_LENGTH = wall_length_sequence()[0]


@dataclass(frozen=True)
class FixedParams:
    density: float = 0.25
    size: int = 300
    sg_distance: float = 140.0


@dataclass(frozen=True)
class SweepConfig:
    kind: SweepKind
    values: tuple = ()
    fixed: FixedParams = FixedParams()
    algorithms: tuple = DEFAULT_ALGORITHMS
    instances_per_point: int = 10
    reps: int = 100
    seed: int = 0
    solver_params: SolverParams = field(default_factory=SolverParams)
    allow_corner_cutting: bool = False
    parallel_pairs: bool = False

    def __post_init__(self):
        values = tuple(self.values) or DEFAULT_SWEEP_VALUES[self.kind]
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "algorithms", tuple(AlgorithmId(a) for a in self.algorithms))
        if not self.algorithms:
            raise ConfigError("algorithm list must not be empty")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ConfigError(f"sweep values must be strictly increasing, got {values}")
        if self.instances_per_point < 1:
            raise ConfigError(f"instances_per_point must be >= 1, got {self.instances_per_point}")
        if self.reps < 1:
            raise ConfigError(f"reps must be >= 1, got {self.reps}")


@dataclass(frozen=True)
class SweepRow:
    algorithm: AlgorithmId
    value: float
    num_walls: int | None
    wall_length: int | None
    density: float | None
    grid_size: str
    sg_distance: float
    stats: dict  # metric name -> AggregateStats across instances


@dataclass(frozen=True)
class ExperimentReport:
    kind: SweepKind
    rows: tuple
    provenance: dict


def default_sweeps(algorithms=DEFAULT_ALGORITHMS, fixed: FixedParams = FixedParams(),
                   instances_per_point: int = 10, reps: int = 100, seed: int = 0,
                   solver_params: SolverParams | None = None,
                   allow_corner_cutting: bool = False,
                   parallel_pairs: bool = False) -> list[SweepConfig]:
    """One config per sweep kind, in canonical order."""
    return [
        SweepConfig(
            kind=kind,
            values=DEFAULT_SWEEP_VALUES[kind],
            fixed=fixed,
            algorithms=tuple(algorithms),
            instances_per_point=instances_per_point,
            reps=reps,
            seed=seed,
            solver_params=solver_params or SolverParams(),
            allow_corner_cutting=allow_corner_cutting,
            parallel_pairs=parallel_pairs,
        )
        for kind in SweepKind
    ]


def _point_grids(cfg: SweepConfig, index: int, value) -> list:
    """Instance grids for one parameter point (shared by all algorithms)."""
    fixed = cfg.fixed
    if cfg.kind in (SweepKind.WALL_COUNT, SweepKind.WALL_LENGTH):
        if cfg.kind is SweepKind.WALL_COUNT:
            spec = WallGridSpec(num_walls=int(value), wall_length=WALL_GRID_DEFAULT_LENGTH)
        else:
            spec = WallGridSpec(num_walls=7, wall_length=int(value))
        grid = generate_wall_grid(spec, cfg.allow_corner_cutting)
        return [grid] * cfg.instances_per_point
    # the held-constant distance adapts to grids too small to realize it;
    # swept distance values are taken literally and fail loudly instead
    if cfg.kind is SweepKind.GRID_SIZE:
        n, density = int(value), fixed.density
        sg = min(fixed.sg_distance, float(n - 1))
    elif cfg.kind is SweepKind.DENSITY:
        n, density = fixed.size, float(value)
        sg = min(fixed.sg_distance, float(n - 1))
    else:  # SG_DISTANCE
        n, density, sg = fixed.size, fixed.density, float(value)
    spec = RandomGridSpec(
        n=n, density=density, sg_distance=sg,
        seed=cfg.seed + index * cfg.instances_per_point,
    )
    return generate_instance_set(spec, cfg.instances_per_point, cfg.allow_corner_cutting)


def _measure_point(args):
    grid, algo, params, reps = args
    return run_repetitions(grid, algo, params, reps=reps)


def run_sweep(cfg: SweepConfig) -> ExperimentReport:
    """Execute one sweep; deterministic given the seed except solve times."""
    point_grids = []
    for index, value in enumerate(cfg.values):
        try:
            point_grids.append(_point_grids(cfg, index, value))
        except (GenerationError, InvalidSpecError) as exc:
            raise type(exc)(f"sweep {cfg.kind.value}, value {value}: {exc}") from exc

    jobs = [
        (grids[i], algo, cfg.solver_params, cfg.reps)
        for grids in point_grids
        for algo in cfg.algorithms
        for i in range(cfg.instances_per_point)
    ]
    if cfg.parallel_pairs:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_measure_point, jobs))
    else:
        results = [_measure_point(job) for job in jobs]

    rows = []
    cursor = 0
    for index, value in enumerate(cfg.values):
        grids = point_grids[index]
        mean_sg = sum(sg_distance(g) for g in grids) / len(grids)
        for algo in cfg.algorithms:
            per_grid = results[cursor:cursor + cfg.instances_per_point]
            cursor += cfg.instances_per_point
            stats = {m: aggregate([stats[m].mean for stats in per_grid]) for m in METRIC_NAMES}
            if cfg.kind is SweepKind.WALL_COUNT:
                num_walls, wall_len, density, size = int(value), WALL_GRID_DEFAULT_LENGTH, None, WALL_SIZE_LABEL
            elif cfg.kind is SweepKind.WALL_LENGTH:
                num_walls, wall_len, density, size = 7, int(value), None, WALL_SIZE_LABEL
            elif cfg.kind is SweepKind.GRID_SIZE:
                num_walls, wall_len, density, size = None, None, cfg.fixed.density, str(int(value))
            elif cfg.kind is SweepKind.DENSITY:
                num_walls, wall_len, density, size = None, None, float(value), str(cfg.fixed.size)
            else:
                num_walls, wall_len, density, size = None, None, cfg.fixed.density, str(cfg.fixed.size)
            rows.append(SweepRow(
                algorithm=algo,
                value=value,
                num_walls=num_walls,
                wall_length=wall_len,
                density=density,
                grid_size=size,
                sg_distance=mean_sg,
                stats=stats,
            ))
    provenance = {
        "kind": cfg.kind.value,
        "values": list(cfg.values),
        "fixed": {"density": cfg.fixed.density, "size": cfg.fixed.size,
                  "sg_distance": cfg.fixed.sg_distance},
        "algorithms": [a.value for a in cfg.algorithms],
        "instances_per_point": cfg.instances_per_point,
        "reps": cfg.reps,
        "seed": cfg.seed,
        "version": __version__,
    }
    return ExperimentReport(kind=cfg.kind, rows=tuple(rows), provenance=provenance)
