from __future__ import annotations

import functools
import logging
from typing import Sequence

import numpy as np

from SWARMcreator import tool
from SWARMcreator.classes import Ant, Colony, Grid, ItemStore, MovementParams, PheromoneField, Position, \
    ThresholdParams
from SWARMcreator.constants import value_constants


@functools.lru_cache(maxsize=None)
def _turn_matrix(w_table: tuple[float, ...]) -> np.ndarray:
    directions = np.arange(value_constants.DIRECTION_COUNT)
    steps = np.abs(np.subtract.outer(directions, directions))
    steps = np.minimum(steps, value_constants.DIRECTION_COUNT - steps)
    matrix = np.asarray(w_table, dtype=np.float64)[steps]
    matrix.flags.writeable = False
    return matrix


class Kinetics:
    """Ant movement on the pheromone lattice.

    Random draws per call, so runs replay exactly:
        create_colony   one integers() call for cells, one for orientations
        move_ant        one random()
        colony_step     one random() per move plus one per evaluated pick/drop attempt
    """

    @classmethod
    def pheromone_weight(cls, sigma: float, beta: float, delta: float) -> float:
        if sigma < 0:
            raise ValueError(f"pheromone concentration must be >= 0, got {sigma}")
        return (1.0 + sigma / (1.0 + delta * sigma)) ** beta

    @classmethod
    def turn_steps(cls, current: int, candidate: int) -> int:
        """smallest number of 45° steps between two directions (0..4)"""
        steps = abs(current - candidate) % value_constants.DIRECTION_COUNT
        return min(steps, value_constants.DIRECTION_COUNT - steps)

    @classmethod
    def turn_weight(cls, current: int, candidate: int, w_table: Sequence[float]) -> float:
        return w_table[cls.turn_steps(current, candidate)]

    @classmethod
    def turn_matrix(cls, w_table: Sequence[float]) -> np.ndarray:
        """turn_weight for every (current, candidate) pair, read-only and cached per table"""
        return _turn_matrix(tuple(w_table))

    @classmethod
    def normalise_weights(cls, weights: Sequence[float] | np.ndarray) -> np.ndarray:
        weights = np.asarray(weights, dtype=np.float64)
        total = weights.sum()
        assert total > 0, "transition weights must not all vanish"
        return weights / total

    @classmethod
    def _probabilities(cls, cell: int, orientation: int, field: PheromoneField, grid: Grid,
                       params: MovementParams) -> np.ndarray:
        sigma = field.sigma.ravel()[tool.Habitat.direction_cells(grid)[cell]]
        # pheromone_weight and turn_weight over all eight neighbours at once
        weights = (1.0 + sigma / (1.0 + params.delta * sigma)) ** params.beta
        weights *= cls.turn_matrix(params.w_table)[orientation]
        return cls.normalise_weights(weights)

    @classmethod
    def transition_distribution(cls, ant: Ant, field: PheromoneField, grid: Grid,
                                params: MovementParams) -> tuple[float, ...]:
        """Probability of stepping into each Moore neighbour, indexed by direction (N, NE, ... NW)"""
        cell = tool.Habitat.cell_index(ant.position, grid)
        return tuple(cls._probabilities(cell, ant.orientation, field, grid, params).tolist())

    @classmethod
    def sample_direction(cls, probabilities: Sequence[float] | np.ndarray, draw: float) -> int:
        probabilities = np.asarray(probabilities, dtype=np.float64)
        direction = int(np.searchsorted(np.cumsum(probabilities), draw, side="right"))
        if direction < len(probabilities):
            return direction
        # rounding left the cumulative sum a hair below 1
        return int(np.flatnonzero(probabilities > 0)[-1])

    @classmethod
    def move_ant(cls, ant: Ant, field: PheromoneField, grid: Grid, params: MovementParams,
                 rng: np.random.Generator) -> Ant:
        cell = tool.Habitat.cell_index(ant.position, grid)
        probabilities = cls._probabilities(cell, ant.orientation, field, grid, params)
        direction = cls.sample_direction(probabilities, rng.random())
        target = int(tool.Habitat.direction_cells(grid)[cell, direction])
        ant.position = tool.Habitat.cell_position(target, grid)
        ant.orientation = direction
        tool.Habitat.deposit(field, ant.position, params.eta)
        return ant

    @classmethod
    def create_colony(cls, size: int, grid: Grid, rng: np.random.Generator) -> Colony:
        cells = rng.integers(0, grid.width * grid.height, size=size)
        orientations = rng.integers(0, value_constants.DIRECTION_COUNT, size=size)
        ants = [Ant(Position(int(c) % grid.width, int(c) // grid.width), int(o)) for c, o in zip(cells, orientations)]
        logging.debug(f"created colony of {size} ants")
        return Colony(ants, rng)

    @classmethod
    def colony_step(cls, colony: Colony, field: PheromoneField, grid: Grid, movement: MovementParams,
                    threshold: ThresholdParams, store: ItemStore) -> Colony:
        rng = colony.rng
        for ant in colony.ants:
            cls.move_ant(ant, field, grid, movement, rng)
            if ant.carried is None:
                if not grid.is_empty(ant.position):
                    tool.Behavior.try_pick(ant, grid, store, threshold, rng)
            elif grid.is_empty(ant.position):
                tool.Behavior.try_drop(ant, grid, store, threshold, rng)
        tool.Habitat.evaporate(field, movement.kappa)
        return colony
