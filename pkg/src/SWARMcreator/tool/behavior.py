from __future__ import annotations

import logging

import numpy as np

from SWARMcreator import tool
from SWARMcreator.classes import Ant, Grid, ItemStore, NeighborhoodAssessment, Position, ThresholdParams
from SWARMcreator.constants import value_constants
from SWARMcreator.errors import CellOccupied

AGGREGATORS = {
    value_constants.AGGREGATION_MAX:  np.max,
    value_constants.AGGREGATION_MIN:  np.min,
    value_constants.AGGREGATION_MEAN: np.mean,
}


def _check_distance(d: float) -> None:
    if not 0 <= d <= 1:
        raise ValueError(f"normalized distance must lie in [0, 1], got {d}")


class Behavior:
    @classmethod
    def response_threshold(cls, s: float, theta: float, n: float) -> float:
        if s < 0:
            raise ValueError(f"stimulus must be >= 0, got {s}")
        if s == 0:
            return 0.0
        s_n = s ** n
        return s_n / (s_n + theta ** n)

    @classmethod
    def count_factor(cls, object_count: int, params: ThresholdParams) -> float:
        return cls.response_threshold(object_count, params.theta_count, params.steepness)

    @classmethod
    def drop_factor(cls, d: float, k1: float) -> float:
        _check_distance(d)
        return (k1 / (k1 + d)) ** 2

    @classmethod
    def pick_factor(cls, d: float, k2: float) -> float:
        _check_distance(d)
        return (d / (k2 + d)) ** 2

    @classmethod
    def pick_probability(cls, assessment: NeighborhoodAssessment, params: ThresholdParams) -> float:
        chi = cls.count_factor(assessment.object_count, params)
        return (1.0 - chi) * cls.pick_factor(assessment.pair_distance, params.k2)

    @classmethod
    def drop_probability(cls, assessment: NeighborhoodAssessment, params: ThresholdParams) -> float:
        chi = cls.count_factor(assessment.object_count, params)
        return chi * cls.drop_factor(assessment.pair_distance, params.k1)

    @classmethod
    def assess_neighborhood(cls, position: Position, focal_id: int, grid: Grid, store: ItemStore,
                            aggregation: str = value_constants.AGGREGATION_MAX) -> NeighborhoodAssessment:
        """Crowd around position seen from the focal item (item lying at position, or the carried item)."""
        others = [item_id for item_id in tool.Habitat.neighborhood_items(position, grid)
                  if item_id is not None and item_id != focal_id]
        if not others:
            # an isolated item reads as maximally dissimilar so it stays liftable
            return NeighborhoodAssessment(0, 1.0)
        distances = store.distances(focal_id, others)
        d = float(AGGREGATORS[aggregation](distances))
        return NeighborhoodAssessment(len(others), min(max(d, 0.0), 1.0))

    @classmethod
    def try_pick(cls, ant: Ant, grid: Grid, store: ItemStore, params: ThresholdParams,
                 rng: np.random.Generator) -> bool:
        item_id = grid.item_at(ant.position)
        assessment = cls.assess_neighborhood(ant.position, item_id, grid, store, params.aggregation)
        if rng.random() >= cls.pick_probability(assessment, params):
            return False
        ant.carried = tool.Habitat.remove(ant.position, grid)
        return True

    @classmethod
    def try_drop(cls, ant: Ant, grid: Grid, store: ItemStore, params: ThresholdParams,
                 rng: np.random.Generator) -> bool:
        assessment = cls.assess_neighborhood(ant.position, ant.carried, grid, store, params.aggregation)
        if rng.random() >= cls.drop_probability(assessment, params):
            return False
        try:
            tool.Habitat.place(ant.carried, ant.position, grid)
        except CellOccupied:
            logging.debug(f"drop at {ant.position} refused, ant keeps item {ant.carried}")
            return False
        ant.carried = None
        return True
