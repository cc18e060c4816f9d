from __future__ import annotations

import logging
import math
from collections import Counter
from typing import Sequence, Union

import numpy as np

from SWARMcreator.classes import CheckpointLog, ClassificationReport, EvaluationParams, Grid, PlacedItem, Position, \
    Snapshot, World
from SWARMcreator.constants import value_constants
from SWARMcreator.errors import InsufficientItems

Lattice = Union[Grid, Snapshot]


class Evaluation:
    @classmethod
    def toroidal_grid_distance(cls, a: Position, b: Position, grid: Lattice) -> float:
        dx = abs(a.x - b.x)
        dy = abs(a.y - b.y)
        dx = min(dx, grid.width - dx)
        dy = min(dy, grid.height - dy)
        return math.hypot(dx, dy)

    @classmethod
    def squared_distance_matrix(cls, a: np.ndarray, b: np.ndarray, width: int, height: int) -> np.ndarray:
        """integer squared toroidal distances between rows of a (n, 2) and b (m, 2)"""
        dx = np.abs(a[:, None, 0] - b[None, :, 0])
        dy = np.abs(a[:, None, 1] - b[None, :, 1])
        dx = np.minimum(dx, width - dx)
        dy = np.minimum(dy, height - dy)
        return dx * dx + dy * dy

    @classmethod
    def vote(cls, labels: Sequence[str]) -> str:
        """majority label; ties go to the label met first (labels ordered nearest first)"""
        counts = Counter(labels)
        best = max(counts.values())
        return next(label for label in labels if counts[label] == best)

    @classmethod
    def knn_predict(cls, test: Sequence[PlacedItem], train: Sequence[PlacedItem], k: int,
                    width: int, height: int) -> list[str]:
        if len(train) < k:
            raise InsufficientItems(f"{len(train)} training items cannot supply {k} neighbours")
        test_xy = np.array([(p.position.x, p.position.y) for p in test], dtype=np.int64).reshape(-1, 2)
        train_xy = np.array([(p.position.x, p.position.y) for p in train], dtype=np.int64).reshape(-1, 2)
        train_ids = np.array([p.item_id for p in train], dtype=np.int64)
        distances = cls.squared_distance_matrix(test_xy, train_xy, width, height)
        predictions = list()
        for row in distances:
            # nearest first, equal distances broken by lower item id
            nearest = np.lexsort((train_ids, row))[:k]
            predictions.append(cls.vote([train[i].label for i in nearest]))
        return predictions

    @classmethod
    def test_size(cls, n_items: int, test_fraction: float) -> int:
        return math.ceil(round(test_fraction * n_items, 9))

    @classmethod
    def knn_rate(cls, snapshot: Snapshot, k: int, test_fraction: float, n_subsets: int,
                 rng: np.random.Generator) -> ClassificationReport:
        labeled = sorted((p for p in snapshot.items if p.label is not None), key=lambda p: p.item_id)
        if len(labeled) < k + 1:
            raise InsufficientItems(f"{len(labeled)} labelled items on the grid, need at least {k + 1}")
        n_test = cls.test_size(len(labeled), test_fraction)
        if len(labeled) - n_test < k:
            raise InsufficientItems(f"a test share of {n_test}/{len(labeled)} leaves fewer than {k} training items")

        rates = list()
        for _ in range(n_subsets):
            test_index = set(int(i) for i in rng.choice(len(labeled), size=n_test, replace=False))
            test = [labeled[i] for i in sorted(test_index)]
            train = [p for i, p in enumerate(labeled) if i not in test_index]
            predicted = cls.knn_predict(test, train, k, snapshot.width, snapshot.height)
            correct = sum(1 for item, label in zip(test, predicted) if item.label == label)
            rates.append(correct / len(test))
        return ClassificationReport(snapshot.step, tuple(rates), sum(rates) / len(rates), k, test_fraction)

    @classmethod
    def spatial_entropy(cls, snapshot: Snapshot, patch_size: int) -> float:
        if not snapshot.items:
            return 0.0
        counts = Counter((p.position.x // patch_size, p.position.y // patch_size) for p in snapshot.items)
        total = len(snapshot.items)
        entropy = -sum((c / total) * math.log2(c / total) for c in counts.values())
        return max(0.0, entropy)

    @classmethod
    def take_snapshot(cls, world: World) -> Snapshot:
        placed = tuple(PlacedItem(item_id, position, world.store.label_of(item_id))
                       for item_id, position in sorted(world.grid.items().items()))
        low, mean, high = world.field.summary()
        return Snapshot(world.step, world.grid.width, world.grid.height, placed,
                        tuple(sorted(world.colony.carried_items())), low, mean, high)

    @classmethod
    def default_checkpoints(cls, horizon: int,
                            per_decade: int = value_constants.CHECKPOINTS_PER_DECADE) -> tuple[int, ...]:
        """t=0, then log-spaced from 10^3 up to the horizon, horizon included"""
        steps = {0, horizon}
        first = value_constants.FIRST_CHECKPOINT
        if horizon > first:
            decades = math.log10(horizon) - math.log10(first)
            count = max(2, int(math.ceil(decades * per_decade)) + 1)
            for value in np.logspace(math.log10(first), math.log10(horizon), count):
                steps.add(int(round(float(value))))
        steps = {s for s in steps if 0 <= s <= horizon}
        return tuple(sorted(steps))

    @classmethod
    def create_log(cls, checkpoints: Sequence[int]) -> CheckpointLog:
        return CheckpointLog(tuple(checkpoints))

    @classmethod
    def log_checkpoint(cls, world: World, log: CheckpointLog, params: EvaluationParams) -> Snapshot:
        world.check_conservation()
        snapshot = cls.take_snapshot(world)
        log.snapshots.append(snapshot)
        log.heatmaps[snapshot.step] = world.field.copy()

        entropy = cls.spatial_entropy(snapshot, params.patch_size)
        log.entropy.append(snapshot.step, entropy)
        try:
            report = cls.knn_rate(snapshot, params.k, params.test_fraction, params.n_subsets, world.evaluation_rng)
        except InsufficientItems as error:
            log.skipped.append((snapshot.step, str(error)))
            logging.warning(f"step {snapshot.step}: classification skipped ({error})")
            logging.info(f"step {snapshot.step}: entropy {entropy:.4f}")
            return snapshot
        log.reports.append(report)
        logging.info(f"step {snapshot.step}: mean rate {report.mean_rate:.4f}, entropy {entropy:.4f}")
        return snapshot
