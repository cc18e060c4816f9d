from __future__ import annotations

import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence, Type

import numpy as np

from SWARMcreator import filehandling
from SWARMcreator.classes import RunConfig, RunResult
from SWARMcreator.constants import value_constants
from SWARMcreator.core import export_excel as excel
from SWARMcreator.errors import ConfigError
from SWARMcreator.filehandling import constants as file_constants
from SWARMcreator.filehandling import results
from SWARMcreator.filehandling.typing import CompareRow
from SWARMcreator.tool import DataStream, Evaluation, ExportExcel, Habitat, Kinetics, Simulation


def run(config: RunConfig, simulation: Type[Simulation], habitat: Type[Habitat], kinetics: Type[Kinetics],
        datastream: Type[DataStream], evaluation: Type[Evaluation], export_excel: Type[ExportExcel]) -> RunResult:
    start = time.perf_counter()
    run_directory = simulation.prepare_run_directory(config)
    world = simulation.create_world(config)
    checkpoints = config.checkpoints
    if checkpoints is None:
        checkpoints = evaluation.default_checkpoints(config.horizon, config.checkpoints_per_decade)
    log = evaluation.create_log(checkpoints)
    due_checkpoints = set(checkpoints)
    logging.info(f"run started: horizon {config.horizon}, {len(checkpoints)} checkpoints, output '{run_directory}'")

    for t in range(config.horizon + 1):
        placed = datastream.release_due(world.schedule, t, world.grid, world.colony.rng)
        world.released += len(placed)
        if t in due_checkpoints:
            evaluation.log_checkpoint(world, log, config.evaluation)
        if t < config.horizon:
            kinetics.colony_step(world.colony, world.field, world.grid, config.movement, config.threshold,
                                 world.store)
            world.step = t + 1

    results.write_log(log, run_directory, habitat.heatmap_levels)
    habitat.export_occupancy_csv(world.grid, os.path.join(run_directory, file_constants.OCCUPANCY_FILE))
    if config.excel:
        excel.export_run(log, os.path.join(run_directory, file_constants.RESULTS_WORKBOOK), export_excel)
    wall_time = time.perf_counter() - start
    filehandling.write_manifest(config, run_directory, wall_time)
    logging.info(f"run finished after {wall_time:.1f} s")
    return RunResult(0, run_directory, log, wall_time)


def run_default(config: RunConfig) -> RunResult:
    """run() with the stock toolboxes; module level so worker processes can pickle it"""
    return run(config, Simulation, Habitat, Kinetics, DataStream, Evaluation, ExportExcel)


def _final_rates(config: RunConfig) -> tuple[int, float, float]:
    stream_config = config
    batch_config = config.as_batch()
    stream_rate = run_default(stream_config).final_rate
    if batch_config == stream_config:
        batch_rate = stream_rate
    else:
        batch_rate = run_default(batch_config).final_rate
    return config.seed, batch_rate, stream_rate


def aggregate_rows(rows: Sequence[CompareRow]) -> list[CompareRow]:
    """mean and sample standard deviation over the per-seed rows"""
    keys = (file_constants.BATCH_FINAL_RATE, file_constants.STREAM_FINAL_RATE, file_constants.DELTA)
    values = {key: np.array([row[key] for row in rows], dtype=np.float64) for key in keys}
    mean_row = {file_constants.SEED: file_constants.AGGREGATE_MEAN}
    std_row = {file_constants.SEED: file_constants.AGGREGATE_STDDEV}
    for key in keys:
        mean_row[key] = float(np.mean(values[key]))
        std_row[key] = float(np.std(values[key], ddof=1)) if len(rows) > 1 else float("nan")
    return [mean_row, std_row]


def compare_directory(config: RunConfig, simulation: Type[Simulation]) -> str:
    path = os.path.join(config.output_dir, f"compare_{simulation.config_hash(config)}")
    os.makedirs(path, exist_ok=True)
    return path


def compare(config: RunConfig, seeds: Sequence[int], simulation: Type[Simulation],
            export_excel: Type[ExportExcel], workers: int = 1) -> tuple[str, list[CompareRow]]:
    """Batch against streaming feed of the same data, once per seed"""
    if len(seeds) < 2:
        raise ConfigError([f"compare needs at least 2 seeds, got {len(seeds)}"])
    if len(set(seeds)) != len(seeds):
        raise ConfigError([f"compare seeds must be distinct, got {tuple(seeds)}"])
    if config.schedule_mode == value_constants.SCHEDULE_BATCH:
        logging.warning("the configuration already releases everything at t=0, deltas will be zero")

    configs = [config.with_seed(seed) for seed in seeds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(_final_rates, configs))
    else:
        outcomes = [_final_rates(c) for c in configs]

    rows: list[CompareRow] = list()
    for seed, batch_rate, stream_rate in outcomes:
        delta = stream_rate - batch_rate
        if math.isnan(delta):
            logging.warning(f"seed {seed}: no final classification rate, delta undefined")
        rows.append({file_constants.SEED: seed, file_constants.BATCH_FINAL_RATE: batch_rate,
                     file_constants.STREAM_FINAL_RATE: stream_rate, file_constants.DELTA: delta})
        logging.info(f"seed {seed}: batch {batch_rate:.4f}, stream {stream_rate:.4f}, delta {delta:+.4f}")
    rows += aggregate_rows(rows)

    directory = compare_directory(config, simulation)
    results.write_compare(os.path.join(directory, file_constants.COMPARE_FILE), rows)
    if config.excel:
        excel.export_compare(rows, os.path.join(directory, file_constants.COMPARE_WORKBOOK), export_excel)
    return directory, rows
