from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from SWARMcreator.classes import Ant, Grid, NeighborhoodAssessment, Position, ThresholdParams
from SWARMcreator.constants import value_constants
from SWARMcreator.tool import Behavior, Habitat

from conftest import FixedDraws, make_store

PARAMS = ThresholdParams()


@pytest.mark.parametrize("s, theta, n, expected", [
    (5.0, 5.0, 2.0, 0.5),
    (0.0, 5.0, 2.0, 0.0),
    (10.0, 5.0, 2.0, 0.8),
    (3.0, 3.0, 4.0, 0.5),
])
def test_response_threshold(s, theta, n, expected):
    assert Behavior.response_threshold(s, theta, n) == pytest.approx(expected, abs=1e-9)


def test_response_threshold_increases_and_stays_below_one():
    values = [Behavior.response_threshold(s, 5.0, 2.0) for s in np.linspace(0, 1000, 200)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert all(0 <= v < 1 for v in values)


def test_response_threshold_rejects_negative_stimulus():
    with pytest.raises(ValueError):
        Behavior.response_threshold(-1.0, 5.0, 2.0)


@pytest.mark.parametrize("count, expected", [(5, 0.5), (0, 0.0), (9, 81 / 106)])
def test_count_factor(count, expected):
    assert Behavior.count_factor(count, PARAMS) == pytest.approx(expected, abs=1e-9)


def test_count_factor_anchor_is_exact():
    assert Behavior.count_factor(5, PARAMS) == 0.5


def test_default_count_factor_squares_the_count():
    for count in range(9):
        assert Behavior.count_factor(count, PARAMS) == pytest.approx(count ** 2 / (count ** 2 + 25), abs=1e-15)


def test_count_factor_uses_steepness():
    steep = ThresholdParams(steepness=4.0)
    assert Behavior.count_factor(9, steep) == pytest.approx(9 ** 4 / (9 ** 4 + 5 ** 4), abs=1e-12)
    assert Behavior.count_factor(5, steep) == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("d, expected", [(0.0, 1.0), (0.1, 0.25), (1.0, (0.1 / 1.1) ** 2)])
def test_drop_factor(d, expected):
    assert Behavior.drop_factor(d, 0.1) == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("d, expected", [(0.0, 0.0), (0.15, 0.25), (1.0, (1 / 1.15) ** 2)])
def test_pick_factor(d, expected):
    assert Behavior.pick_factor(d, 0.15) == pytest.approx(expected, abs=1e-9)


def test_pick_factor_example_value():
    assert Behavior.pick_factor(1.0, 0.15) == pytest.approx(0.756144, abs=1e-6)
    assert Behavior.drop_factor(1.0, 0.1) == pytest.approx(0.0082645, abs=1e-7)


def test_factors_are_monotone_and_bounded():
    distances = np.linspace(0, 1, 101)
    drops = [Behavior.drop_factor(d, 0.1) for d in distances]
    picks = [Behavior.pick_factor(d, 0.15) for d in distances]
    assert all(a > b for a, b in zip(drops, drops[1:]))
    assert all(a < b for a, b in zip(picks, picks[1:]))
    assert all(0 <= v <= 1 for v in drops + picks)


@pytest.mark.parametrize("d", [-0.01, 1.01])
def test_factors_reject_distance_outside_unit_interval(d):
    with pytest.raises(ValueError):
        Behavior.drop_factor(d, 0.1)
    with pytest.raises(ValueError):
        Behavior.pick_factor(d, 0.15)


def test_pick_probability_examples():
    assert Behavior.pick_probability(NeighborhoodAssessment(0, 1.0), PARAMS) == pytest.approx(0.756144, abs=1e-6)
    for count in range(10):
        assert Behavior.pick_probability(NeighborhoodAssessment(count, 0.0), PARAMS) == 0.0
    # chi = 0.5 at count 5 and epsilon = 0.5 where d / (k2 + d) = sqrt(0.5)
    d = 0.15 * math.sqrt(0.5) / (1 - math.sqrt(0.5))
    assert Behavior.pick_probability(NeighborhoodAssessment(5, d), PARAMS) == pytest.approx(0.25, abs=1e-6)


def test_drop_probability_examples():
    assert Behavior.drop_probability(NeighborhoodAssessment(0, 0.0), PARAMS) == 0.0
    assert Behavior.drop_probability(NeighborhoodAssessment(5, 0.0), PARAMS) == pytest.approx(0.5, abs=1e-6)
    assert Behavior.drop_probability(NeighborhoodAssessment(9, 1.0), PARAMS) == pytest.approx(0.006315, abs=1e-6)


def test_probabilities_stay_in_unit_interval():
    for count, d in itertools.product(range(10), np.linspace(0, 1, 21)):
        assessment = NeighborhoodAssessment(count, float(d))
        assert 0 <= Behavior.pick_probability(assessment, PARAMS) <= 1
        assert 0 <= Behavior.drop_probability(assessment, PARAMS) <= 1


def test_empty_region_reads_as_dissimilar(grid):
    store = make_store({0: (0.5, 0.5)})
    Habitat.place(0, Position(2, 2), grid)
    assert Behavior.assess_neighborhood(Position(2, 2), 0, grid, store) == NeighborhoodAssessment(0, 1.0)


def test_region_of_identical_items(grid):
    store = make_store({i: (0.3, 0.6) for i in range(4)})
    Habitat.place(0, Position(2, 2), grid)
    Habitat.place(1, Position(1, 1), grid)
    Habitat.place(2, Position(3, 2), grid)
    Habitat.place(3, Position(2, 3), grid)
    assert Behavior.assess_neighborhood(Position(2, 2), 0, grid, store) == NeighborhoodAssessment(3, 0.0)


def test_carried_item_is_compared_with_every_region_item(grid):
    features = {0: (0.0, 0.0), 1: (1.0, 0.0), 2: (0.5, 0.5), 3: (0.2, 0.9)}
    store = make_store(features)
    Habitat.place(1, Position(0, 0), grid)
    Habitat.place(2, Position(1, 0), grid)
    Habitat.place(3, Position(4, 4), grid)   # wraps into the region of (0, 0)
    distances = [math.sqrt(sum((a - b) ** 2 for a, b in zip(features[0], features[i])) / 2) for i in (1, 2, 3)]
    for rule, expected in ((value_constants.AGGREGATION_MAX, max(distances)),
                           (value_constants.AGGREGATION_MIN, min(distances)),
                           (value_constants.AGGREGATION_MEAN, sum(distances) / 3)):
        assessment = Behavior.assess_neighborhood(Position(0, 0), 0, grid, store, rule)
        assert assessment.object_count == 3
        assert assessment.pair_distance == pytest.approx(expected, abs=1e-12)


def test_pick_consumes_one_draw_and_lifts_the_item(grid):
    store = make_store({0: (0.0,), 1: (1.0,)})
    Habitat.place(0, Position(2, 2), grid)
    Habitat.place(1, Position(2, 1), grid)
    ant = Ant(Position(2, 2), 0)
    draws = FixedDraws(0.0)
    assert Behavior.try_pick(ant, grid, store, PARAMS, draws)
    assert draws.calls == 1
    assert ant.carried == 0
    assert grid.is_empty(Position(2, 2))


def test_pick_fails_on_a_perfect_match(grid):
    store = make_store({0: (0.4,), 1: (0.4,)})
    Habitat.place(0, Position(2, 2), grid)
    Habitat.place(1, Position(2, 1), grid)
    ant = Ant(Position(2, 2), 0)
    assert not Behavior.try_pick(ant, grid, store, PARAMS, FixedDraws(0.0))
    assert ant.carried is None
    assert grid.item_at(Position(2, 2)) == 0


def test_drop_lands_next_to_similar_items(grid):
    store = make_store({i: (0.5,) for i in range(6)})
    for i, position in enumerate([Position(1, 1), Position(2, 1), Position(3, 1), Position(1, 2), Position(3, 2)]):
        Habitat.place(i, position, grid)
    ant = Ant(Position(2, 2), 0, carried=5)
    assert Behavior.try_drop(ant, grid, store, PARAMS, FixedDraws(0.49))
    assert ant.carried is None
    assert grid.item_at(Position(2, 2)) == 5


def test_drop_refused_on_occupied_cell_keeps_the_item(grid):
    store = make_store({i: (0.5,) for i in range(7)})
    for i, position in enumerate([Position(1, 1), Position(2, 1), Position(3, 1), Position(1, 2), Position(3, 2),
                                  Position(2, 2)]):
        Habitat.place(i, position, grid)
    ant = Ant(Position(2, 2), 0, carried=6)
    assert not Behavior.try_drop(ant, grid, store, PARAMS, FixedDraws(0.0))
    assert ant.carried == 6
    assert grid.item_at(Position(2, 2)) == 5
    assert grid.position_of(6) is None


def test_never_drop_in_a_void():
    grid = Grid(5, 5)
    store = make_store({0: (0.5,)})
    ant = Ant(Position(2, 2), 0, carried=0)
    assert not Behavior.try_drop(ant, grid, store, PARAMS, FixedDraws(0.0))
    assert ant.carried == 0
