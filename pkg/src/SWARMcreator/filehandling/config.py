from __future__ import annotations

import logging
import os
from typing import Callable, Iterable

from SWARMcreator.classes import EvaluationParams, MovementParams, RunConfig, SyntheticSpec, ThresholdParams
from SWARMcreator.constants import value_constants
from SWARMcreator.constants.config_constants import *
from SWARMcreator.errors import ConfigError
from .typing import FlatConfig

PATH_KEYS = (DATA_CSV, SCHEDULE_FILE)


##### Value conversion #####

def _to_bool(text: str) -> bool:
    if text.lower() in TRUE_STRINGS:
        return True
    if text.lower() in FALSE_STRINGS:
        return False
    raise ValueError("expected true or false")


def _to_floats(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(LIST_SEPARATOR) if v.strip())


def _to_ints(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(LIST_SEPARATOR) if v.strip())


def _to_vectors(text: str) -> tuple[tuple[float, ...], ...]:
    return tuple(_to_floats(v) for v in text.split(VECTOR_SEPARATOR) if v.strip())


def _auto(convert: Callable[[str], object]) -> Callable[[str], object]:
    def inner(text: str):
        if text.lower() == value_constants.AUTO:
            return None
        return convert(text)

    return inner


def _optional_path(text: str) -> str | None:
    return text or None


def _float_text(value: float) -> str:
    return repr(float(value))


def _floats_text(values: Iterable[float]) -> str:
    return LIST_SEPARATOR.join(_float_text(v) for v in values)


def _ints_text(values: Iterable[int]) -> str:
    return LIST_SEPARATOR.join(str(int(v)) for v in values)


def _auto_text(value) -> str:
    if value is None:
        return value_constants.AUTO
    if isinstance(value, tuple):
        return _ints_text(value)
    return str(value)


PARSERS: dict[str, Callable[[str], object]] = {
    GRID_WIDTH:                 int,
    GRID_HEIGHT:                int,
    MOVEMENT_BETA:              float,
    MOVEMENT_DELTA:             float,
    MOVEMENT_ETA:               float,
    MOVEMENT_KAPPA:             float,
    MOVEMENT_W_TABLE:           _to_floats,
    THRESHOLD_THETA_COUNT:      float,
    THRESHOLD_STEEPNESS:        float,
    THRESHOLD_K1:               float,
    THRESHOLD_K2:               float,
    THRESHOLD_AGGREGATION:      str.lower,
    COLONY_SIZE:                _auto(int),
    COLONY_MIN_SIZE:            int,
    COLONY_ITEMS_PER_ANT:       int,
    DATA_SOURCE:                str.lower,
    DATA_CSV:                   _optional_path,
    DATA_FEATURES:              _auto(int),
    SYNTHETIC_CLASSES:          int,
    SYNTHETIC_ITEMS_PER_CLASS:  int,
    SYNTHETIC_MEANS:            _to_vectors,
    SYNTHETIC_SPREAD:           float,
    SYNTHETIC_SEED:             int,
    SCHEDULE_MODE:              str.lower,
    SCHEDULE_GROUP_SIZES:       _to_ints,
    SCHEDULE_RELEASE_STEPS:     _to_ints,
    SCHEDULE_FILE:              _optional_path,
    SCHEDULE_ORDER:             str.lower,
    RUN_HORIZON:                int,
    RUN_CHECKPOINTS:            _auto(_to_ints),
    RUN_CHECKPOINTS_PER_DECADE: int,
    RUN_SEED:                   int,
    RUN_OUTPUT:                 str,
    RUN_EXCEL:                  _to_bool,
    EVALUATION_K:               int,
    EVALUATION_TEST_FRACTION:   float,
    EVALUATION_SUBSETS:         int,
    EVALUATION_PATCH_SIZE:      int,
}


#### Export ######

def write(config: RunConfig) -> FlatConfig:
    """every effective parameter as text, defaults included"""
    movement, threshold, synthetic, evaluation = config.movement, config.threshold, config.synthetic, config.evaluation
    return {
        GRID_WIDTH:                 str(config.grid_width),
        GRID_HEIGHT:                str(config.grid_height),
        MOVEMENT_BETA:              _float_text(movement.beta),
        MOVEMENT_DELTA:             _float_text(movement.delta),
        MOVEMENT_ETA:               _float_text(movement.eta),
        MOVEMENT_KAPPA:             _float_text(movement.kappa),
        MOVEMENT_W_TABLE:           _floats_text(movement.w_table),
        THRESHOLD_THETA_COUNT:      _float_text(threshold.theta_count),
        THRESHOLD_STEEPNESS:        _float_text(threshold.steepness),
        THRESHOLD_K1:               _float_text(threshold.k1),
        THRESHOLD_K2:               _float_text(threshold.k2),
        THRESHOLD_AGGREGATION:      threshold.aggregation,
        COLONY_SIZE:                _auto_text(config.colony_size),
        COLONY_MIN_SIZE:            str(config.colony_min_size),
        COLONY_ITEMS_PER_ANT:       str(config.items_per_ant),
        DATA_SOURCE:                config.data_source,
        DATA_CSV:                   config.csv_path or "",
        DATA_FEATURES:              _auto_text(config.csv_features),
        SYNTHETIC_CLASSES:          str(synthetic.n_classes),
        SYNTHETIC_ITEMS_PER_CLASS:  str(synthetic.items_per_class),
        SYNTHETIC_MEANS:            VECTOR_SEPARATOR.join(_floats_text(m) for m in synthetic.means),
        SYNTHETIC_SPREAD:           _float_text(synthetic.spread),
        SYNTHETIC_SEED:             str(synthetic.seed),
        SCHEDULE_MODE:              config.schedule_mode,
        SCHEDULE_GROUP_SIZES:       _ints_text(config.group_sizes),
        SCHEDULE_RELEASE_STEPS:     _ints_text(config.release_steps),
        SCHEDULE_FILE:              config.schedule_file or "",
        SCHEDULE_ORDER:             config.schedule_order,
        RUN_HORIZON:                str(config.horizon),
        RUN_CHECKPOINTS:            _auto_text(config.checkpoints),
        RUN_CHECKPOINTS_PER_DECADE: str(config.checkpoints_per_decade),
        RUN_SEED:                   str(config.seed),
        RUN_OUTPUT:                 config.output_dir,
        RUN_EXCEL:                  "true" if config.excel else "false",
        EVALUATION_K:               str(evaluation.k),
        EVALUATION_TEST_FRACTION:   _float_text(evaluation.test_fraction),
        EVALUATION_SUBSETS:         str(evaluation.n_subsets),
        EVALUATION_PATCH_SIZE:      str(evaluation.patch_size),
    }


DEFAULTS: FlatConfig = write(RunConfig())


##### Import #####

def read(path: str | os.PathLike) -> FlatConfig:
    """key = value lines; '#' starts a comment. Relative data paths resolve against the file's folder."""
    if not os.path.isfile(path):
        raise FileNotFoundError(f"File '{path}' does not exist!")
    values: FlatConfig = dict()
    errors = list()
    try:
        with open(path, "r", encoding="utf-8") as file:
            lines = file.readlines()
    except UnicodeDecodeError as error:
        raise ConfigError([f"{path}: not UTF-8 text ({error.reason} at byte {error.start})"])
    for line_number, line in enumerate(lines, start=1):
        text = line.split(COMMENT, 1)[0].strip()
        if not text:
            continue
        if ASSIGNMENT not in text:
            errors.append(f"{path}:{line_number}: expected 'key = value', got '{text}'")
            continue
        key, value = (part.strip() for part in text.split(ASSIGNMENT, 1))
        values[key] = value
    if errors:
        raise ConfigError(errors)

    folder = os.path.dirname(os.path.abspath(path))
    for key in PATH_KEYS:
        if values.get(key) and not os.path.isabs(values[key]):
            values[key] = os.path.normpath(os.path.join(folder, values[key]))
    return values


def parse_overrides(assignments: Iterable[str]) -> FlatConfig:
    values: FlatConfig = dict()
    errors = list()
    for assignment in assignments:
        if ASSIGNMENT not in assignment:
            errors.append(f"override '{assignment}' is not of the form key=value")
            continue
        key, value = (part.strip() for part in assignment.split(ASSIGNMENT, 1))
        if key in PATH_KEYS and value and not os.path.isabs(value):
            # relative to the working directory, so the manifest stays replayable from anywhere
            value = os.path.abspath(value)
        values[key] = value
    if errors:
        raise ConfigError(errors)
    return values


def load(*layers: FlatConfig) -> RunConfig:
    """Merge layers over the defaults (later layers win) and build a validated RunConfig."""
    values = dict(DEFAULTS)
    for layer in layers:
        values.update(layer)

    errors = [f"unknown key '{key}'" for key in sorted(set(values) - set(PARSERS))]
    parsed = dict()
    for key, parser in PARSERS.items():
        try:
            parsed[key] = parser(values[key].strip())
        except ValueError as error:
            errors.append(f"{key}: cannot read '{values[key]}' ({error})")
            parsed[key] = parser(DEFAULTS[key])

    config = _build(parsed)
    errors += config.violations()
    if errors:
        raise ConfigError(errors)
    logging.debug(f"configuration resolved ({len(values)} keys)")
    return config


def _build(p: dict) -> RunConfig:
    return RunConfig(
        grid_width=p[GRID_WIDTH],
        grid_height=p[GRID_HEIGHT],
        movement=MovementParams(p[MOVEMENT_BETA], p[MOVEMENT_DELTA], p[MOVEMENT_ETA], p[MOVEMENT_KAPPA],
                                p[MOVEMENT_W_TABLE]),
        threshold=ThresholdParams(p[THRESHOLD_THETA_COUNT], p[THRESHOLD_STEEPNESS], p[THRESHOLD_K1],
                                  p[THRESHOLD_K2], p[THRESHOLD_AGGREGATION]),
        colony_size=p[COLONY_SIZE],
        colony_min_size=p[COLONY_MIN_SIZE],
        items_per_ant=p[COLONY_ITEMS_PER_ANT],
        data_source=p[DATA_SOURCE],
        csv_path=p[DATA_CSV],
        csv_features=p[DATA_FEATURES],
        synthetic=SyntheticSpec(p[SYNTHETIC_CLASSES], p[SYNTHETIC_ITEMS_PER_CLASS], p[SYNTHETIC_MEANS],
                                p[SYNTHETIC_SPREAD], p[SYNTHETIC_SEED]),
        schedule_mode=p[SCHEDULE_MODE],
        group_sizes=p[SCHEDULE_GROUP_SIZES],
        release_steps=p[SCHEDULE_RELEASE_STEPS],
        schedule_file=p[SCHEDULE_FILE],
        schedule_order=p[SCHEDULE_ORDER],
        horizon=p[RUN_HORIZON],
        checkpoints=p[RUN_CHECKPOINTS],
        checkpoints_per_decade=p[RUN_CHECKPOINTS_PER_DECADE],
        seed=p[RUN_SEED],
        output_dir=p[RUN_OUTPUT],
        excel=p[RUN_EXCEL],
        evaluation=EvaluationParams(p[EVALUATION_K], p[EVALUATION_TEST_FRACTION], p[EVALUATION_SUBSETS],
                                    p[EVALUATION_PATCH_SIZE]),
    )
