from __future__ import annotations

import numpy as np
import pytest

from SWARMcreator.classes import FeatureSpace, Grid, Item, ItemStore, PlacedItem, Position, RunConfig, \
    Snapshot, SyntheticSpec


class FixedDraws:
    """Stands in for a numpy Generator, handing out preset uniforms"""

    def __init__(self, *values: float):
        self.values = list(values)
        self.calls = 0

    def random(self) -> float:
        self.calls += 1
        return self.values.pop(0)


def make_store(features: dict[int, tuple[float, ...]], labels: dict[int, str] | None = None) -> ItemStore:
    labels = labels or dict()
    dimension = len(next(iter(features.values())))
    items = [Item(item_id, f, labels.get(item_id)) for item_id, f in features.items()]
    return ItemStore(items, FeatureSpace.unit(dimension))


def make_snapshot(placed: list[tuple[int, int, int, str]], width: int = 10, height: int = 10,
                  step: int = 0) -> Snapshot:
    items = tuple(PlacedItem(item_id, Position(x, y), label) for item_id, x, y, label in placed)
    return Snapshot(step, width, height, items, (), 0.0, 0.0, 0.0)


def small_config(tmp_path, **changes) -> RunConfig:
    values = dict(
        grid_width=10,
        grid_height=10,
        synthetic=SyntheticSpec(n_classes=2, items_per_class=10, means=((0.2, 0.2), (0.8, 0.8)), spread=0.05),
        horizon=200,
        checkpoints=(0, 100, 200),
        seed=7,
        output_dir=str(tmp_path),
    )
    values.update(changes)
    return RunConfig(**values)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def grid() -> Grid:
    return Grid(5, 5)
