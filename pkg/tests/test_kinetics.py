from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.stats import chisquare

from SWARMcreator.classes import Ant, Colony, Grid, MovementParams, PheromoneField, Position, ThresholdParams
from SWARMcreator.constants import value_constants
from SWARMcreator.constants.value_constants import E, N, NE, NW, S, SE, SW
from SWARMcreator.tool import Habitat, Kinetics

from conftest import FixedDraws, make_store


def test_pheromone_weight_without_pheromone():
    for beta, delta in ((3.5, 0.2), (1.0, 0.0), (7.0, 3.0)):
        assert Kinetics.pheromone_weight(0.0, beta, delta) == 1.0


def test_pheromone_weight_examples():
    assert Kinetics.pheromone_weight(1.0, 2.0, 0.0) == pytest.approx(4.0, abs=1e-9)
    assert Kinetics.pheromone_weight(5.0, 3.5, 0.2) == pytest.approx(3.5 ** 3.5, abs=1e-9)
    assert Kinetics.pheromone_weight(5.0, 3.5, 0.2) == pytest.approx(80.2118, abs=1e-4)


def test_pheromone_weight_is_linear_for_unit_beta_without_saturation():
    for sigma in (0.0, 0.3, 2.0, 17.5):
        assert Kinetics.pheromone_weight(sigma, 1.0, 0.0) == pytest.approx(1.0 + sigma, abs=1e-12)


def test_pheromone_weight_saturates():
    beta, delta = 3.5, 0.2
    bound = (1 + 1 / delta) ** beta
    values = [Kinetics.pheromone_weight(s, beta, delta) for s in (1.0, 10.0, 1e3, 1e6)]
    assert values == sorted(values)
    assert all(v <= bound for v in values)
    assert values[-1] == pytest.approx(bound, rel=1e-4)


def test_pheromone_weight_rejects_negative_concentration():
    with pytest.raises(ValueError):
        Kinetics.pheromone_weight(-0.1, 3.5, 0.2)


def test_turn_weight():
    table = value_constants.W_TABLE
    assert Kinetics.turn_weight(N, N, table) == table[0]
    assert Kinetics.turn_weight(N, S, table) == table[4]
    assert Kinetics.turn_weight(N, NE, table) == Kinetics.turn_weight(N, NW, table) == table[1]
    assert Kinetics.turn_weight(E, NW, table) == table[3]
    assert Kinetics.turn_weight(SW, E, table) == table[3]


def test_uniform_field_and_table_gives_uniform_distribution(grid):
    params = MovementParams(w_table=(1.0, 1.0, 1.0, 1.0, 1.0))
    field = PheromoneField(grid.width, grid.height)
    field.sigma[:] = 0.4
    probabilities = Kinetics.transition_distribution(Ant(Position(2, 2), SE), field, grid, params)
    assert probabilities == pytest.approx([1 / 8] * 8, abs=1e-12)


def test_normalisation_toy():
    assert tuple(Kinetics.normalise_weights([3.0, 1.0])) == pytest.approx((0.75, 0.25), abs=1e-12)


def _brute_force_distribution(ant: Ant, sigma: np.ndarray, params: MovementParams) -> list[float]:
    height, width = sigma.shape
    weights = list()
    for direction, (dx, dy) in enumerate(((0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1))):
        s = sigma[(ant.position.y + dy) % height, (ant.position.x + dx) % width]
        w_sigma = (1 + s / (1 + params.delta * s)) ** params.beta
        angle = abs(direction - ant.orientation) * 45
        angle = min(angle, 360 - angle)
        weights.append(w_sigma * params.w_table[angle // 45])
    return [w / sum(weights) for w in weights]


def test_transition_distribution_matches_brute_force():
    rng = np.random.default_rng(2024)
    grid = Grid(3, 3)
    for _ in range(50):
        params = MovementParams(beta=float(rng.uniform(0.5, 5)), delta=float(rng.uniform(0, 1)),
                                w_table=tuple(float(v) for v in rng.uniform(0.01, 1, 5)))
        field = PheromoneField(3, 3)
        field.sigma[:] = rng.uniform(0, 10, (3, 3))
        ant = Ant(Position(int(rng.integers(3)), int(rng.integers(3))), int(rng.integers(8)))
        probabilities = Kinetics.transition_distribution(ant, field, grid, params)
        expected = _brute_force_distribution(ant, field.sigma, params)
        assert probabilities == pytest.approx(expected, abs=1e-12)
        assert math.fsum(probabilities) == pytest.approx(1.0, abs=1e-9)
        assert all(0 <= p <= 1 for p in probabilities)


def test_turn_matrix_matches_turn_weight():
    table = (0.9, 0.5, 0.3, 0.2, 0.1)
    matrix = Kinetics.turn_matrix(table)
    for current in range(8):
        for candidate in range(8):
            assert matrix[current, candidate] == Kinetics.turn_weight(current, candidate, table)
    assert Kinetics.turn_matrix(list(table)) is matrix


def test_transition_distribution_composes_the_scalar_weights():
    rng = np.random.default_rng(31)
    grid = Grid(7, 4)
    params = MovementParams()
    field = PheromoneField(7, 4)
    field.sigma[:] = rng.uniform(0, 20, (4, 7))
    for index in range(28):
        ant = Ant(Habitat.cell_position(index, grid), index % 8)
        weights = [Kinetics.pheromone_weight(field.at(Habitat.offset(ant.position, dx, dy, grid)),
                                             params.beta, params.delta)
                   * Kinetics.turn_weight(ant.orientation, direction, params.w_table)
                   for direction, (dx, dy) in enumerate(value_constants.DIRECTION_OFFSETS)]
        expected = [w / math.fsum(weights) for w in weights]
        probabilities = Kinetics.transition_distribution(ant, field, grid, params)
        assert isinstance(probabilities, tuple)
        assert probabilities == pytest.approx(expected, abs=1e-12)


def test_more_pheromone_never_lowers_probability(grid):
    params = MovementParams()
    field = PheromoneField(grid.width, grid.height)
    field.sigma[:] = np.random.default_rng(5).uniform(0, 3, (grid.height, grid.width))
    ant = Ant(Position(2, 2), N)
    target = Habitat.offset(ant.position, 1, 0, grid)
    previous = Kinetics.transition_distribution(ant, field, grid, params)[E]
    for _ in range(5):
        field.sigma[target.y, target.x] += 1.0
        current = Kinetics.transition_distribution(ant, field, grid, params)[E]
        assert current >= previous
        previous = current


def test_forced_draw_moves_north_east_across_the_edge():
    grid = Grid(5, 5)
    field = PheromoneField(5, 5)
    params = MovementParams(w_table=(1.0, 1.0, 1.0, 1.0, 1.0))
    ant = Ant(Position(0, 0), S)
    draws = FixedDraws(0.2)
    Kinetics.move_ant(ant, field, grid, params, draws)
    assert ant.position == Position(1, 4)
    assert ant.orientation == NE
    assert draws.calls == 1
    assert field.at(Position(1, 4)) == pytest.approx(params.eta, abs=1e-12)
    assert field.total() == pytest.approx(params.eta, abs=1e-12)


def test_sample_direction_never_picks_zero_probability():
    probabilities = (0.0, 0.5, 0.0, 0.5 - 1e-17, 0.0, 0.0, 0.0, 0.0)
    assert Kinetics.sample_direction(probabilities, 0.999999999999) == 3
    assert Kinetics.sample_direction(probabilities, 0.0) == 1


def test_move_frequencies_follow_the_distribution():
    grid = Grid(5, 5)
    base = np.zeros((5, 5))
    base[1, 2] = 4.0   # north
    base[2, 3] = 1.5   # east
    base[3, 1] = 0.7   # south-west
    field = PheromoneField(5, 5)
    field.sigma[:] = base
    params = MovementParams()
    start = Ant(Position(2, 2), E)
    expected = np.array(Kinetics.transition_distribution(start, field, grid, params))

    rng = np.random.default_rng(99)
    draws = 100_000
    counts = np.zeros(8, dtype=int)
    for _ in range(draws):
        field.sigma[:] = base
        ant = Ant(start.position, start.orientation)
        Kinetics.move_ant(ant, field, grid, params, rng)
        counts[ant.orientation] += 1
    _, p_value = chisquare(counts, expected * draws)
    assert p_value > 0.001


def test_create_colony_is_seeded(grid):
    first = Kinetics.create_colony(6, grid, np.random.default_rng(1))
    second = Kinetics.create_colony(6, grid, np.random.default_rng(1))
    assert [(a.position, a.orientation) for a in first.ants] == [(a.position, a.orientation) for a in second.ants]
    assert len(first) == 6
    assert all(not ant.laden for ant in first.ants)


def test_zero_ants_only_evaporate(grid):
    field = PheromoneField(grid.width, grid.height)
    field.sigma[:] = 1.0
    colony = Colony([], np.random.default_rng(0))
    Kinetics.colony_step(colony, field, grid, MovementParams(kappa=0.5), ThresholdParams(), make_store({0: (0.0,)}))
    assert np.allclose(field.sigma, 0.5)
    assert len(grid) == 0


def test_single_ant_on_empty_grid_never_carries(grid):
    field = PheromoneField(grid.width, grid.height)
    colony = Kinetics.create_colony(1, grid, np.random.default_rng(4))
    store = make_store({0: (0.0,)})
    for _ in range(100):
        Kinetics.colony_step(colony, field, grid, MovementParams(), ThresholdParams(), store)
        assert not colony.ants[0].laden
    assert field.total() > 0


def _walk(seed: int) -> tuple:
    grid = Grid(8, 8)
    field = PheromoneField(8, 8)
    store = make_store({i: (i / 10, 1 - i / 10) for i in range(10)})
    for i in range(10):
        Habitat.place(i, Position(i % 8, i // 8 * 3), grid)
    colony = Kinetics.create_colony(3, grid, np.random.default_rng(seed))
    for _ in range(1000):
        Kinetics.colony_step(colony, field, grid, MovementParams(), ThresholdParams(), store)
        assert len(grid) + len(colony.carried_items()) == 10
    return sorted(grid.items().items(), key=lambda kv: kv[0]), [(a.position, a.orientation, a.carried)
                                                                for a in colony.ants], field.copy()


def test_fixed_seed_walk_is_reproducible():
    items_a, ants_a, sigma_a = _walk(11)
    items_b, ants_b, sigma_b = _walk(11)
    assert items_a == items_b
    assert ants_a == ants_b
    assert np.array_equal(sigma_a, sigma_b)
