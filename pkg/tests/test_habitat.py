from __future__ import annotations

import numpy as np
import pytest

from SWARMcreator.classes import Grid, PheromoneField, Position
from SWARMcreator.errors import CellOccupied
from SWARMcreator.filehandling import results
from SWARMcreator.tool import Habitat


def test_grid_rejects_tiny_dimensions():
    with pytest.raises(ValueError):
        Grid(2, 10)


@pytest.mark.parametrize("x, y, expected", [
    (0, 0, Position(0, 0)),
    (-1, 0, Position(4, 0)),
    (5, 7, Position(0, 2)),
    (-6, -11, Position(4, 4)),
])
def test_wrap(grid, x, y, expected):
    assert Habitat.wrap(x, y, grid) == expected


def test_wrap_is_idempotent(grid):
    for x in range(-12, 12):
        for y in range(-12, 12):
            once = Habitat.wrap(x, y, grid)
            assert Habitat.wrap(once.x, once.y, grid) == once


def test_neighborhood_is_row_major_from_north_west(grid):
    cells = Habitat.neighborhood3x3(Position(0, 0), grid)
    assert [p for p, _ in cells] == [
        Position(4, 4), Position(0, 4), Position(1, 4),
        Position(4, 0), Position(0, 0), Position(1, 0),
        Position(4, 1), Position(0, 1), Position(1, 1),
    ]


def test_neighborhood_counts_occupied_cells(grid):
    Habitat.place(1, Position(2, 2), grid)
    Habitat.place(2, Position(3, 3), grid)
    occupied = [item_id for _, item_id in Habitat.neighborhood3x3(Position(2, 2), grid) if item_id is not None]
    assert sorted(occupied) == [1, 2]


def test_neighborhood_items_follow_neighborhood_order():
    grid = Grid(6, 4)
    Habitat.place(1, Position(5, 3), grid)
    Habitat.place(2, Position(0, 0), grid)
    for position in (Position(0, 0), Position(5, 3), Position(3, 1)):
        expected = [item_id for _, item_id in Habitat.neighborhood3x3(position, grid)]
        assert Habitat.neighborhood_items(position, grid) == expected
    assert Habitat.neighborhood_items(Position(0, 0), grid)[0] == 1


def test_direction_cells_agree_with_offset():
    grid = Grid(7, 4)
    table = Habitat.direction_cells(grid)
    assert table.shape == (28, 8)
    for index in range(28):
        position = Habitat.cell_position(index, grid)
        assert Habitat.cell_index(position, grid) == index
        for direction, (dx, dy) in enumerate(((0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1))):
            target = Habitat.offset(position, dx, dy, grid)
            assert table[index, direction] == Habitat.cell_index(target, grid)


def test_direction_cells_are_shared_per_grid_size():
    assert Habitat.direction_cells(Grid(9, 5)) is Habitat.direction_cells(Grid(9, 5))
    assert not Habitat.direction_cells(Grid(9, 5)).flags.writeable


def test_place_on_empty_cell(grid):
    Habitat.place(9, Position(1, 1), grid)
    assert grid.item_at(Position(1, 1)) == 9
    assert grid.position_of(9) == Position(1, 1)


def test_place_on_occupied_cell_leaves_grid_unchanged(grid):
    Habitat.place(1, Position(1, 1), grid)
    with pytest.raises(CellOccupied):
        Habitat.place(2, Position(1, 1), grid)
    assert grid.item_at(Position(1, 1)) == 1
    assert grid.position_of(2) is None
    assert Habitat.occupied_count(grid) == 1


def test_remove_then_place(grid):
    Habitat.place(1, Position(1, 1), grid)
    assert Habitat.remove(Position(1, 1), grid) == 1
    Habitat.place(2, Position(1, 1), grid)
    assert grid.item_at(Position(1, 1)) == 2
    assert Habitat.item_positions(grid) == {2: Position(1, 1)}


def test_item_cannot_sit_on_two_cells(grid):
    Habitat.place(1, Position(1, 1), grid)
    with pytest.raises(ValueError):
        Habitat.place(1, Position(2, 2), grid)


def test_evaporate_identity_and_full_decay():
    field = PheromoneField(4, 4)
    field.sigma[:] = np.arange(16, dtype=float).reshape(4, 4)
    before = field.copy()
    Habitat.evaporate(field, 0.0)
    assert np.array_equal(field.sigma, before)
    Habitat.evaporate(field, 1.0)
    assert field.total() == 0.0


def test_evaporate_single_cell():
    field = PheromoneField(3, 3)
    field.sigma[1, 1] = 2.0
    Habitat.evaporate(field, 0.015)
    assert field.at(Position(1, 1)) == pytest.approx(1.97, abs=1e-9)


def test_evaporate_is_a_contraction():
    field = PheromoneField(6, 6)
    field.sigma[:] = np.random.default_rng(3).random((6, 6))
    before = field.total()
    Habitat.evaporate(field, 0.3)
    assert field.total() < before
    assert field.sigma.min() >= 0


def test_evaporate_rejects_rate_outside_unit_interval():
    with pytest.raises(ValueError):
        Habitat.evaporate(PheromoneField(3, 3), 1.5)


def test_deposit_is_additive():
    field = PheromoneField(3, 3)
    Habitat.deposit(field, Position(0, 2), 0.07)
    assert field.at(Position(0, 2)) == pytest.approx(0.07, abs=1e-12)
    Habitat.deposit(field, Position(0, 2), 0.07)
    assert field.at(Position(0, 2)) == pytest.approx(0.14, abs=1e-12)
    assert field.total() == pytest.approx(0.14, abs=1e-12)


def test_deposit_then_evaporate():
    field = PheromoneField(3, 3)
    field.sigma[0, 0] = 0.5
    Habitat.deposit(field, Position(0, 0), 0.07)
    Habitat.evaporate(field, 0.015)
    assert field.at(Position(0, 0)) == pytest.approx((0.5 + 0.07) * (1 - 0.015), abs=1e-12)


def test_deposit_needs_positive_amount():
    with pytest.raises(ValueError):
        Habitat.deposit(PheromoneField(3, 3), Position(0, 0), 0.0)


def test_heatmap_levels_scale_to_peak():
    sigma = np.array([[0.0, 1.0], [2.0, 4.0]])
    assert Habitat.heatmap_levels(sigma) == [[0, 64], [128, 255]]
    assert Habitat.heatmap_levels(np.zeros((2, 3))) == [[0, 0, 0], [0, 0, 0]]


def test_export_pgm(tmp_path):
    field = PheromoneField(3, 2)
    field.sigma[1, 2] = 1.0
    path = Habitat.export_pgm(field, str(tmp_path / "field.pgm"))
    with open(path) as file:
        assert file.read() == "P2\n3 2\n255\n0 0 0\n0 0 255\n"
    assert results.read_pgm(path) == [[0, 0, 0], [0, 0, 255]]


def test_export_occupancy_csv(tmp_path, grid):
    Habitat.place(4, Position(3, 1), grid)
    Habitat.place(2, Position(0, 1), grid)
    Habitat.place(7, Position(2, 0), grid)
    path = Habitat.export_occupancy_csv(grid, str(tmp_path / "occupancy.csv"))
    with open(path) as file:
        assert file.read() == "x,y,item_id\n2,0,7\n0,1,2\n3,1,4\n"
