from __future__ import annotations

import logging
import os
from typing import Sequence

import numpy as np

from SWARMcreator import tool
from SWARMcreator.classes import FeatureSpace, Grid, Item, Position, ReleaseGroup, RunConfig, StreamSchedule, \
    SyntheticSpec
from SWARMcreator.constants import value_constants
from SWARMcreator.errors import DataFormatError, GridOverflow, ScheduleError
from SWARMcreator.filehandling import items as item_files


class DataStream:
    @classmethod
    def normalized_distance(cls, a: Item, b: Item, space: FeatureSpace) -> float:
        if a.dimension != b.dimension:
            raise ValueError(f"items {a.id} and {b.id} differ in dimension ({a.dimension} != {b.dimension})")
        diff = np.asarray(a.features, dtype=np.float64) - np.asarray(b.features, dtype=np.float64)
        return float(np.sqrt(np.mean(diff ** 2))) / space.d_max

    @classmethod
    def ingest_csv(cls, path: str | os.PathLike, declared_features: int | None = None) -> tuple[list[Item],
                                                                                               FeatureSpace]:
        rows = item_files.read_item_rows(path)
        if not rows:
            raise DataFormatError(f"'{path}' holds no items")
        dimension = declared_features if declared_features is not None else len(rows[0]["features"])
        for row in rows:
            if len(row["features"]) != dimension:
                raise DataFormatError(f"expected {dimension} features, found {len(row['features'])}", row["row"])

        raw = np.array([row["features"] for row in rows], dtype=np.float64).reshape(len(rows), dimension)
        space = FeatureSpace(tuple(float(v) for v in raw.min(axis=0)), tuple(float(v) for v in raw.max(axis=0)))
        items = [Item(row["id"], space.normalize(row["features"]), row["label"]) for row in rows]
        logging.info(f"ingested {len(items)} items with {dimension} features from '{path}'")
        return items, space

    @classmethod
    def generate_synthetic(cls, spec: SyntheticSpec) -> list[Item]:
        rng = np.random.default_rng(spec.seed)
        items = list()
        item_id = 0
        for class_index, mean in enumerate(spec.means[:spec.n_classes]):
            center = np.asarray(mean, dtype=np.float64)
            noise = rng.standard_normal((spec.items_per_class, len(mean)))
            features = np.clip(center + spec.spread * noise, 0.0, 1.0)
            label = f"{value_constants.LABEL_PREFIX}{class_index}"
            for vector in features:
                items.append(Item(item_id, tuple(float(v) for v in vector), label))
                item_id += 1
        logging.debug(f"generated {len(items)} synthetic items in {spec.n_classes} classes")
        return items

    @classmethod
    def load_items(cls, config: RunConfig) -> tuple[list[Item], FeatureSpace]:
        if config.data_source == value_constants.SOURCE_CSV:
            return cls.ingest_csv(config.csv_path, config.csv_features)
        items = cls.generate_synthetic(config.synthetic)
        return items, FeatureSpace.unit(config.synthetic.dimension)

    @classmethod
    def stream_group_sizes(cls, item_count: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Five equal groups plus a small remainder group, released 10^4 steps apart."""
        groups = value_constants.STREAM_GROUP_COUNT
        if item_count < groups:
            raise ScheduleError(f"need at least {groups} items for the streaming protocol, got {item_count}")
        remainder = max(1, round(item_count * value_constants.STREAM_REMAINDER_SHARE))
        rest = item_count - remainder
        base, extra = divmod(rest, groups - 1)
        sizes = tuple(base + (1 if i < extra else 0) for i in range(groups - 1)) + (remainder,)
        steps = tuple(i * value_constants.STREAM_RELEASE_INTERVAL for i in range(groups))
        return sizes, steps

    @classmethod
    def build_schedule(cls, items: Sequence[Item], group_sizes: Sequence[int], release_steps: Sequence[int],
                       seed: int, total_steps: int,
                       order: str = value_constants.ORDER_SHUFFLED) -> StreamSchedule:
        """Deal items into release groups. Shuffled by seed, or class after class so whole classes arrive late."""
        if len(group_sizes) != len(release_steps):
            raise ScheduleError(f"{len(group_sizes)} group sizes but {len(release_steps)} release steps")
        if sum(group_sizes) != len(items):
            raise ScheduleError(f"group sizes sum to {sum(group_sizes)} but {len(items)} items are available")
        if any(b <= a for a, b in zip(release_steps, release_steps[1:])):
            raise ScheduleError(f"release steps must be strictly increasing: {tuple(release_steps)}")
        if any(s < 0 or (s > 0 and s >= total_steps) for s in release_steps):
            raise ScheduleError(f"release steps must lie in [0, {total_steps}): {tuple(release_steps)}")
        if order not in value_constants.SCHEDULE_ORDERS:
            raise ScheduleError(f"unknown schedule order '{order}', expected one of {value_constants.SCHEDULE_ORDERS}")
        ids = sorted(item.id for item in items)
        if len(set(ids)) != len(ids):
            raise ScheduleError("item ids must be unique")

        if order == value_constants.ORDER_BY_LABEL:
            labels = {item.id: item.label or "" for item in items}
            shuffled = sorted(ids, key=lambda i: (labels[i], i))
        else:
            permutation = np.random.default_rng(seed).permutation(len(ids))
            shuffled = [ids[i] for i in permutation]
        groups = list()
        start = 0
        for size, step in zip(group_sizes, release_steps):
            groups.append(ReleaseGroup(int(step), tuple(shuffled[start:start + size])))
            start += size
        return StreamSchedule(tuple(groups), total_steps)

    @classmethod
    def schedule_for(cls, config: RunConfig, items: Sequence[Item]) -> StreamSchedule:
        if config.schedule_mode == value_constants.SCHEDULE_GROUPS:
            sizes, steps = config.group_sizes, config.release_steps
        elif config.schedule_mode == value_constants.SCHEDULE_FILE:
            sizes, steps = cls.load_schedule_file(config.schedule_file)
        else:
            sizes, steps = (len(items),), (0,)
        return cls.build_schedule(items, sizes, steps, config.seed, config.horizon, config.schedule_order)

    @classmethod
    def release_due(cls, schedule: StreamSchedule, step: int, grid: Grid,
                    rng: np.random.Generator) -> list[tuple[int, Position]]:
        placed = list()
        for group in schedule.due(step):
            empty = grid.empty_cells()
            if len(empty) < len(group):
                raise GridOverflow(f"cannot place {len(group)} items at step {step}: "
                                   f"only {len(empty)} empty cells left")
            chosen = rng.choice(len(empty), size=len(group), replace=False)
            for item_id, cell in zip(group.item_ids, chosen):
                position = empty[int(cell)]
                tool.Habitat.place(item_id, position, grid)
                placed.append((item_id, position))
            logging.info(f"step {step}: released {len(group)} items")
        return placed

    @classmethod
    def load_schedule_file(cls, path: str | os.PathLike) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """group sizes and release steps from 'release_step,count' rows"""
        rows = item_files.read_schedule_file(path)
        return tuple(count for _, count in rows), tuple(step for step, _ in rows)

    @classmethod
    def export_items_csv(cls, items: Sequence[Item], path: str | os.PathLike,
                         space: FeatureSpace | None = None) -> str:
        return item_files.write_items_csv(path, items, space)
