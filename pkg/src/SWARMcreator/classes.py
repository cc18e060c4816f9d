from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional

import numpy as np

from .constants import value_constants
from .errors import CellOccupied


@dataclass(frozen=True)
class Position:
    x: int
    y: int


class Grid(object):
    """Toroidal lattice holding at most one item per cell"""

    def __init__(self, width: int = value_constants.GRID_WIDTH, height: int = value_constants.GRID_HEIGHT) -> None:
        if width < value_constants.MIN_GRID_SIZE or height < value_constants.MIN_GRID_SIZE:
            raise ValueError(f"grid must be at least {value_constants.MIN_GRID_SIZE}x{value_constants.MIN_GRID_SIZE},"
                             f" got {width}x{height}")
        self._width = width
        self._height = height
        self._cells: list[Optional[int]] = [None] * (width * height)
        self._positions: dict[int, Position] = dict()

    @property
    def width(self) -> int:
        return self._width

    @property
    def height(self) -> int:
        return self._height

    def __len__(self) -> int:
        return len(self._positions)

    def _index(self, position: Position) -> int:
        return position.y * self._width + position.x

    def item_at(self, position: Position) -> int | None:
        return self._cells[self._index(position)]

    def item_at_index(self, index: int) -> int | None:
        return self._cells[index]

    def is_empty(self, position: Position) -> bool:
        return self._cells[self._index(position)] is None

    def position_of(self, item_id: int) -> Position | None:
        return self._positions.get(item_id)

    def set_item(self, item_id: int, position: Position) -> None:
        index = self._index(position)
        existing = self._cells[index]
        if existing is not None:
            raise CellOccupied(position, existing)
        if item_id in self._positions:
            raise ValueError(f"item {item_id} is already on the grid at {self._positions[item_id]}")
        self._cells[index] = item_id
        self._positions[item_id] = position

    def clear_cell(self, position: Position) -> int:
        index = self._index(position)
        item_id = self._cells[index]
        if item_id is None:
            raise ValueError(f"cell ({position.x}, {position.y}) is empty")
        self._cells[index] = None
        del self._positions[item_id]
        return item_id

    def empty_cells(self) -> list[Position]:
        """row-major list of all unoccupied cells"""
        w = self._width
        return [Position(i % w, i // w) for i, item_id in enumerate(self._cells) if item_id is None]

    def items(self) -> dict[int, Position]:
        return dict(self._positions)


class PheromoneField(object):
    def __init__(self, width: int, height: int) -> None:
        self.sigma = np.zeros((height, width), dtype=np.float64)

    @property
    def width(self) -> int:
        return self.sigma.shape[1]

    @property
    def height(self) -> int:
        return self.sigma.shape[0]

    def at(self, position: Position) -> float:
        return float(self.sigma[position.y, position.x])

    def total(self) -> float:
        return float(self.sigma.sum())

    def summary(self) -> tuple[float, float, float]:
        return float(self.sigma.min()), float(self.sigma.mean()), float(self.sigma.max())

    def copy(self) -> np.ndarray:
        return self.sigma.copy()


@dataclass(frozen=True)
class Item:
    id: int
    features: tuple[float, ...]
    label: str | None = None

    @property
    def dimension(self) -> int:
        return len(self.features)


@dataclass(frozen=True)
class FeatureSpace:
    """Per-dimension bounds used for min-max normalisation. Normalised features span [0,1]."""
    minimums: tuple[float, ...]
    maximums: tuple[float, ...]
    d_max: float = 1.0

    @classmethod
    def unit(cls, dimension: int) -> FeatureSpace:
        return cls(tuple(0.0 for _ in range(dimension)), tuple(1.0 for _ in range(dimension)))

    @property
    def dimension(self) -> int:
        return len(self.minimums)

    def normalize(self, raw: Iterable[float]) -> tuple[float, ...]:
        values = list()
        for value, low, high in zip(raw, self.minimums, self.maximums):
            if high == low:
                values.append(0.5)
            else:
                values.append((value - low) / (high - low))
        return tuple(values)

    def denormalize(self, normalized: Iterable[float]) -> tuple[float, ...]:
        values = list()
        for value, low, high in zip(normalized, self.minimums, self.maximums):
            if high == low:
                values.append(low)
            else:
                values.append(low + value * (high - low))
        return tuple(values)


class ItemStore(object):
    """All items of a run, with a feature matrix for vectorised distance lookups"""

    def __init__(self, items: Iterable[Item], space: FeatureSpace) -> None:
        self._items: dict[int, Item] = dict()
        for item in items:
            if item.id in self._items:
                raise ValueError(f"duplicate item id {item.id}")
            if item.dimension != space.dimension:
                raise ValueError(f"item {item.id} has {item.dimension} features, expected {space.dimension}")
            self._items[item.id] = item
        self._space = space
        ids = sorted(self._items)
        self._row = {item_id: row for row, item_id in enumerate(ids)}
        self._matrix = np.array([self._items[i].features for i in ids], dtype=np.float64).reshape(
            len(ids), space.dimension)

    @property
    def space(self) -> FeatureSpace:
        return self._space

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[Item]:
        return iter(sorted(self._items.values(), key=lambda i: i.id))

    def __getitem__(self, item_id: int) -> Item:
        return self._items[item_id]

    def label_of(self, item_id: int) -> str | None:
        return self._items[item_id].label

    def distances(self, focal_id: int, item_ids: list[int]) -> np.ndarray:
        focal = self._matrix[self._row[focal_id]]
        others = self._matrix[[self._row[i] for i in item_ids]]
        return np.sqrt(np.mean((others - focal) ** 2, axis=1)) / self._space.d_max


@dataclass
class Ant:
    position: Position
    orientation: int
    carried: int | None = None

    @property
    def laden(self) -> bool:
        return self.carried is not None


@dataclass(frozen=True)
class MovementParams:
    beta: float = value_constants.BETA
    delta: float = value_constants.DELTA
    eta: float = value_constants.ETA
    kappa: float = value_constants.KAPPA
    w_table: tuple[float, ...] = value_constants.W_TABLE

    def violations(self) -> list[str]:
        errors = list()
        if not self.beta > 0:
            errors.append(f"movement.beta must be > 0, got {self.beta}")
        if not self.delta >= 0:
            errors.append(f"movement.delta must be >= 0, got {self.delta}")
        if not self.eta > 0:
            errors.append(f"movement.eta must be > 0, got {self.eta}")
        if not 0 <= self.kappa <= 1:
            errors.append(f"movement.kappa must lie in [0, 1], got {self.kappa}")
        if len(self.w_table) != len(value_constants.TURN_ANGLES):
            errors.append(f"movement.w_table needs {len(value_constants.TURN_ANGLES)} weights "
                          f"(for {value_constants.TURN_ANGLES} degrees), got {len(self.w_table)}")
        elif not all(w > 0 for w in self.w_table):
            errors.append(f"movement.w_table weights must all be > 0, got {self.w_table}")
        return errors


@dataclass(frozen=True)
class ThresholdParams:
    theta_count: float = value_constants.THETA_COUNT
    steepness: float = value_constants.STEEPNESS
    k1: float = value_constants.K1
    k2: float = value_constants.K2
    aggregation: str = value_constants.AGGREGATION_MAX

    def violations(self) -> list[str]:
        errors = list()
        if not self.theta_count > 0:
            errors.append(f"threshold.theta_count must be > 0, got {self.theta_count}")
        if not self.steepness > 1:
            errors.append(f"threshold.steepness must be > 1, got {self.steepness}")
        if not self.k1 > 0:
            errors.append(f"threshold.k1 must be > 0, got {self.k1}")
        if not self.k2 > 0:
            errors.append(f"threshold.k2 must be > 0, got {self.k2}")
        if self.aggregation not in value_constants.AGGREGATIONS:
            errors.append(f"threshold.aggregation must be one of {value_constants.AGGREGATIONS}, "
                          f"got '{self.aggregation}'")
        return errors


@dataclass(frozen=True)
class NeighborhoodAssessment:
    object_count: int
    pair_distance: float


@dataclass
class Colony:
    ants: list[Ant]
    rng: np.random.Generator

    def __len__(self) -> int:
        return len(self.ants)

    def carried_items(self) -> list[int]:
        return [ant.carried for ant in self.ants if ant.carried is not None]


@dataclass(frozen=True)
class ReleaseGroup:
    release_step: int
    item_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.item_ids)


@dataclass(frozen=True)
class StreamSchedule:
    groups: tuple[ReleaseGroup, ...]
    total_steps: int

    @property
    def item_count(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def is_batch(self) -> bool:
        return len(self.groups) == 1 and self.groups[0].release_step == 0

    def due(self, step: int) -> list[ReleaseGroup]:
        return [g for g in self.groups if g.release_step == step]

    def released_until(self, step: int) -> int:
        return sum(len(g) for g in self.groups if g.release_step <= step)


@dataclass(frozen=True)
class SyntheticSpec:
    n_classes: int = value_constants.SYNTHETIC_CLASSES
    items_per_class: int = value_constants.SYNTHETIC_ITEMS_PER_CLASS
    means: tuple[tuple[float, ...], ...] = value_constants.SYNTHETIC_MEANS
    spread: float = value_constants.SYNTHETIC_SPREAD
    seed: int = value_constants.SYNTHETIC_SEED

    @property
    def dimension(self) -> int:
        return len(self.means[0]) if self.means else 0

    def violations(self) -> list[str]:
        errors = list()
        if self.n_classes < 1:
            errors.append(f"synthetic.n_classes must be >= 1, got {self.n_classes}")
        if self.items_per_class < 1:
            errors.append(f"synthetic.items_per_class must be >= 1, got {self.items_per_class}")
        if len(self.means) != self.n_classes:
            errors.append(f"synthetic.means holds {len(self.means)} vectors for {self.n_classes} classes")
        if len({len(m) for m in self.means}) > 1:
            errors.append("synthetic.means vectors differ in length")
        if any(not 0 <= v <= 1 for m in self.means for v in m):
            errors.append("synthetic.means components must lie in [0, 1]")
        if self.spread < 0:
            errors.append(f"synthetic.spread must be >= 0, got {self.spread}")
        return errors


@dataclass(frozen=True)
class EvaluationParams:
    k: int = value_constants.KNN_K
    test_fraction: float = value_constants.TEST_FRACTION
    n_subsets: int = value_constants.N_SUBSETS
    patch_size: int = value_constants.PATCH_SIZE

    def violations(self) -> list[str]:
        errors = list()
        if self.k < 1:
            errors.append(f"evaluation.k must be >= 1, got {self.k}")
        if not 0 < self.test_fraction < 1:
            errors.append(f"evaluation.test_fraction must lie in (0, 1), got {self.test_fraction}")
        if self.n_subsets < 1:
            errors.append(f"evaluation.n_subsets must be >= 1, got {self.n_subsets}")
        if self.patch_size < 1:
            errors.append(f"evaluation.patch_size must be >= 1, got {self.patch_size}")
        return errors


@dataclass(frozen=True)
class PlacedItem:
    item_id: int
    position: Position
    label: str | None


@dataclass(frozen=True)
class Snapshot:
    step: int
    width: int
    height: int
    items: tuple[PlacedItem, ...]
    carried: tuple[int, ...]
    pheromone_min: float
    pheromone_mean: float
    pheromone_max: float

    @property
    def item_count(self) -> int:
        return len(self.items) + len(self.carried)


@dataclass(frozen=True)
class ClassificationReport:
    step: int
    rates: tuple[float, ...]
    mean_rate: float
    k: int
    test_fraction: float


@dataclass
class EntropyTrace:
    entries: list[tuple[int, float]] = field(default_factory=list)

    def append(self, step: int, entropy: float) -> None:
        if self.entries and step <= self.entries[-1][0]:
            raise ValueError(f"entropy entries must be ordered by step ({step} after {self.entries[-1][0]})")
        self.entries.append((step, entropy))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[int, float]]:
        return iter(self.entries)


@dataclass
class CheckpointLog:
    """Everything recorded at the checkpoint steps of one run"""
    checkpoints: tuple[int, ...]
    snapshots: list[Snapshot] = field(default_factory=list)
    reports: list[ClassificationReport] = field(default_factory=list)
    entropy: EntropyTrace = field(default_factory=EntropyTrace)
    skipped: list[tuple[int, str]] = field(default_factory=list)
    heatmaps: dict[int, np.ndarray] = field(default_factory=dict)

    @property
    def final_report(self) -> ClassificationReport | None:
        return self.reports[-1] if self.reports else None

    def report_at(self, step: int) -> ClassificationReport | None:
        return {r.step: r for r in self.reports}.get(step)


@dataclass(frozen=True)
class RunConfig:
    grid_width: int = value_constants.GRID_WIDTH
    grid_height: int = value_constants.GRID_HEIGHT
    movement: MovementParams = field(default_factory=MovementParams)
    threshold: ThresholdParams = field(default_factory=ThresholdParams)
    colony_size: int | None = None
    colony_min_size: int = value_constants.COLONY_MIN_SIZE
    items_per_ant: int = value_constants.ITEMS_PER_ANT
    data_source: str = value_constants.SOURCE_SYNTHETIC
    csv_path: str | None = None
    csv_features: int | None = None
    synthetic: SyntheticSpec = field(default_factory=SyntheticSpec)
    schedule_mode: str = value_constants.SCHEDULE_BATCH
    group_sizes: tuple[int, ...] = ()
    release_steps: tuple[int, ...] = ()
    schedule_file: str | None = None
    schedule_order: str = value_constants.ORDER_SHUFFLED
    horizon: int = value_constants.HORIZON
    checkpoints: tuple[int, ...] | None = None
    checkpoints_per_decade: int = value_constants.CHECKPOINTS_PER_DECADE
    seed: int = 0
    output_dir: str = "runs"
    excel: bool = True
    evaluation: EvaluationParams = field(default_factory=EvaluationParams)

    def with_seed(self, seed: int) -> RunConfig:
        return replace(self, seed=seed)

    def as_batch(self) -> RunConfig:
        return replace(self, schedule_mode=value_constants.SCHEDULE_BATCH, group_sizes=(), release_steps=(),
                       schedule_file=None)

    def colony_size_for(self, total_items: int) -> int:
        if self.colony_size is not None:
            return self.colony_size
        return max(self.colony_min_size, math.ceil(total_items / self.items_per_ant))

    def violations(self) -> list[str]:
        errors = list()
        for name, value in (("grid.width", self.grid_width), ("grid.height", self.grid_height)):
            if value < value_constants.MIN_GRID_SIZE:
                errors.append(f"{name} must be >= {value_constants.MIN_GRID_SIZE}, got {value}")
        errors += self.movement.violations()
        errors += self.threshold.violations()
        errors += self.evaluation.violations()
        if self.colony_size is not None and self.colony_size < 0:
            errors.append(f"colony.size must be >= 0, got {self.colony_size}")
        if self.colony_min_size < 0:
            errors.append(f"colony.min_size must be >= 0, got {self.colony_min_size}")
        if self.items_per_ant < 1:
            errors.append(f"colony.items_per_ant must be >= 1, got {self.items_per_ant}")
        if self.data_source not in value_constants.DATA_SOURCES:
            errors.append(f"data.source must be one of {value_constants.DATA_SOURCES}, got '{self.data_source}'")
        if self.data_source == value_constants.SOURCE_CSV and not self.csv_path:
            errors.append("data.csv is required when data.source = csv")
        if self.csv_features is not None and self.csv_features < 1:
            errors.append(f"data.features must be >= 1, got {self.csv_features}")
        if self.data_source == value_constants.SOURCE_SYNTHETIC:
            errors += self.synthetic.violations()
        errors += self._schedule_violations()
        if self.horizon < 0:
            errors.append(f"run.horizon must be >= 0, got {self.horizon}")
        if self.checkpoints is not None:
            if list(self.checkpoints) != sorted(set(self.checkpoints)):
                errors.append("run.checkpoints must be strictly increasing")
            if any(c < 0 or c > self.horizon for c in self.checkpoints):
                errors.append(f"run.checkpoints must lie within [0, {self.horizon}]")
        if self.checkpoints_per_decade < 1:
            errors.append(f"run.checkpoints_per_decade must be >= 1, got {self.checkpoints_per_decade}")
        return errors

    def _schedule_violations(self) -> list[str]:
        errors = list()
        if self.schedule_mode not in value_constants.SCHEDULE_MODES:
            errors.append(f"schedule.mode must be one of {value_constants.SCHEDULE_MODES}, "
                          f"got '{self.schedule_mode}'")
        elif self.schedule_mode == value_constants.SCHEDULE_GROUPS:
            if not self.group_sizes:
                errors.append("schedule.group_sizes is required when schedule.mode = groups")
            if len(self.group_sizes) != len(self.release_steps):
                errors.append(f"schedule.group_sizes ({len(self.group_sizes)}) and schedule.release_steps "
                              f"({len(self.release_steps)}) differ in length")
            if any(size < 1 for size in self.group_sizes):
                errors.append("schedule.group_sizes must all be >= 1")
            if any(b <= a for a, b in zip(self.release_steps, self.release_steps[1:])):
                errors.append("schedule.release_steps must be strictly increasing")
            if any(s < 0 for s in self.release_steps):
                errors.append("schedule.release_steps must be >= 0")
            if any(0 < s and s >= self.horizon for s in self.release_steps):
                errors.append(f"schedule.release_steps must be below run.horizon ({self.horizon})")
            if self.data_source == value_constants.SOURCE_SYNTHETIC and self.group_sizes and \
                    sum(self.group_sizes) != self.synthetic.n_classes * self.synthetic.items_per_class:
                errors.append(f"schedule.group_sizes sum to {sum(self.group_sizes)} but the synthetic set holds "
                              f"{self.synthetic.n_classes * self.synthetic.items_per_class} items")
        elif self.schedule_mode == value_constants.SCHEDULE_FILE and not self.schedule_file:
            errors.append("schedule.file is required when schedule.mode = file")
        if self.schedule_order not in value_constants.SCHEDULE_ORDERS:
            errors.append(f"schedule.order must be one of {value_constants.SCHEDULE_ORDERS}, "
                          f"got '{self.schedule_order}'")
        return errors


@dataclass
class World:
    """Mutable state of one run; owned by a single simulation loop"""
    config: RunConfig
    grid: Grid
    field: PheromoneField
    colony: Colony
    store: ItemStore
    schedule: StreamSchedule
    evaluation_rng: np.random.Generator
    step: int = 0
    released: int = 0

    def resident_count(self) -> int:
        return len(self.grid) + len(self.colony.carried_items())

    def check_conservation(self) -> None:
        resident = self.resident_count()
        if resident != self.released:
            logging.error(f"step {self.step}: {resident} items resident but {self.released} released")
            raise AssertionError(f"item conservation violated at step {self.step}: "
                                 f"{resident} resident != {self.released} released")


@dataclass(frozen=True)
class RunResult:
    status: int
    run_directory: str
    log: CheckpointLog
    wall_time: float

    @property
    def final_rate(self) -> float:
        report = self.log.report_at(self.log.checkpoints[-1]) if self.log.checkpoints else None
        return report.mean_rate if report is not None else float("nan")
