from __future__ import annotations

import functools
import logging

import numpy as np

from SWARMcreator.classes import Grid, PheromoneField, Position
from SWARMcreator.constants import value_constants
from SWARMcreator.filehandling import results


@functools.lru_cache(maxsize=None)
def _offset_table(width: int, height: int, offsets: tuple[tuple[int, int], ...]) -> np.ndarray:
    """flat cell index of every offset around every cell, shape (width * height, len(offsets))"""
    cells = np.arange(width * height)
    xs, ys = cells % width, cells // width
    dx = np.array([o[0] for o in offsets])
    dy = np.array([o[1] for o in offsets])
    table = ((ys[:, None] + dy) % height) * width + (xs[:, None] + dx) % width
    table.flags.writeable = False
    return table


@functools.lru_cache(maxsize=None)
def _offset_lists(width: int, height: int, offsets: tuple[tuple[int, int], ...]) -> list[list[int]]:
    return _offset_table(width, height, offsets).tolist()


@functools.lru_cache(maxsize=None)
def _cell_positions(width: int, height: int) -> tuple[Position, ...]:
    return tuple(Position(i % width, i // width) for i in range(width * height))


class Habitat:
    @classmethod
    def create_grid(cls, width: int, height: int) -> Grid:
        return Grid(width, height)

    @classmethod
    def create_field(cls, grid: Grid) -> PheromoneField:
        return PheromoneField(grid.width, grid.height)

    @classmethod
    def wrap(cls, x: int, y: int, grid: Grid) -> Position:
        # python modulo already maps negatives into [0, n)
        return Position(x % grid.width, y % grid.height)

    @classmethod
    def offset(cls, position: Position, dx: int, dy: int, grid: Grid) -> Position:
        return cls.wrap(position.x + dx, position.y + dy, grid)

    @classmethod
    def cell_index(cls, position: Position, grid: Grid) -> int:
        return position.y * grid.width + position.x

    @classmethod
    def cell_position(cls, index: int, grid: Grid) -> Position:
        return _cell_positions(grid.width, grid.height)[index]

    @classmethod
    def direction_cells(cls, grid: Grid) -> np.ndarray:
        """Moore neighbours of every cell as flat indices, columns in direction order (N, NE, ... NW)"""
        return _offset_table(grid.width, grid.height, value_constants.DIRECTION_OFFSETS)

    @classmethod
    def neighborhood3x3(cls, position: Position, grid: Grid) -> list[tuple[Position, int | None]]:
        """9 cells centred on position, row-major starting at the north-west corner"""
        positions = _cell_positions(grid.width, grid.height)
        indices = _offset_lists(grid.width, grid.height, value_constants.NEIGHBORHOOD_OFFSETS)
        return [(positions[i], grid.item_at_index(i)) for i in indices[cls.cell_index(position, grid)]]

    @classmethod
    def neighborhood_items(cls, position: Position, grid: Grid) -> list[int | None]:
        """item ids of the 3x3 region in neighborhood3x3 order"""
        indices = _offset_lists(grid.width, grid.height, value_constants.NEIGHBORHOOD_OFFSETS)
        return [grid.item_at_index(i) for i in indices[cls.cell_index(position, grid)]]

    @classmethod
    def place(cls, item_id: int, position: Position, grid: Grid) -> Grid:
        grid.set_item(item_id, position)
        return grid

    @classmethod
    def remove(cls, position: Position, grid: Grid) -> int:
        return grid.clear_cell(position)

    @classmethod
    def evaporate(cls, field: PheromoneField, kappa: float) -> PheromoneField:
        if not 0 <= kappa <= 1:
            raise ValueError(f"kappa must lie in [0, 1], got {kappa}")
        if kappa == 1:
            field.sigma.fill(0.0)
        elif kappa > 0:
            field.sigma *= (1.0 - kappa)
        return field

    @classmethod
    def deposit(cls, field: PheromoneField, position: Position, eta: float) -> PheromoneField:
        if not eta > 0:
            raise ValueError(f"eta must be > 0, got {eta}")
        field.sigma[position.y, position.x] += eta
        return field

    @classmethod
    def occupancy_rows(cls, grid: Grid) -> list[tuple[int, int, int]]:
        """(x, y, item_id) sorted row-major"""
        rows = [(p.x, p.y, item_id) for item_id, p in grid.items().items()]
        return sorted(rows, key=lambda r: (r[1], r[0]))

    @classmethod
    def heatmap_levels(cls, sigma) -> list[list[int]]:
        """gray levels 0..255, linearly scaled from [0, max sigma]"""
        peak = float(sigma.max()) if sigma.size else 0.0
        if peak <= 0:
            logging.debug("pheromone field is empty, heatmap will be black")
            return [[0 for _ in row] for row in sigma]
        scaled = (sigma / peak * 255.0).round().astype(int)
        return scaled.tolist()

    @classmethod
    def occupied_count(cls, grid: Grid) -> int:
        return len(grid)

    @classmethod
    def item_positions(cls, grid: Grid) -> dict[int, Position]:
        return grid.items()

    @classmethod
    def export_occupancy_csv(cls, grid: Grid, path: str) -> str:
        return results.write_occupancy(path, cls.occupancy_rows(grid))

    @classmethod
    def export_pgm(cls, field: PheromoneField, path: str) -> str:
        return results.write_pgm(path, cls.heatmap_levels(field.sigma))
