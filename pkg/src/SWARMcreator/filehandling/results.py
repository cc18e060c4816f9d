from __future__ import annotations

import csv
import logging
import os
from typing import Iterable, Sequence, TYPE_CHECKING

from . import constants

if TYPE_CHECKING:
    from SWARMcreator.classes import CheckpointLog, ClassificationReport, EntropyTrace, Snapshot
    from .typing import CompareRow


def _number(value) -> str:
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def _write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence]) -> str:
    with open(path, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file, lineterminator=constants.LINE_TERMINATOR)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_number(v) for v in row])
    logging.debug(f"wrote '{path}'")
    return path


def write_reports(path: str, reports: Sequence[ClassificationReport]) -> str:
    subset_count = max((len(r.rates) for r in reports), default=0)
    header = [constants.STEP, constants.MEAN_RATE] + [f"{constants.RATE_PREFIX}{i}" for i in
                                                      range(1, subset_count + 1)]
    rows = [[r.step, float(r.mean_rate)] + [float(v) for v in r.rates] for r in reports]
    return _write_csv(path, header, rows)


def write_entropy(path: str, trace: EntropyTrace) -> str:
    return _write_csv(path, [constants.STEP, constants.ENTROPY], [[s, float(e)] for s, e in trace])


def write_skipped(path: str, skipped: Sequence[tuple[int, str]]) -> str:
    return _write_csv(path, [constants.STEP, constants.REASON], skipped)


def write_snapshot(path: str, snapshot: Snapshot) -> str:
    rows = sorted(((p.position.x, p.position.y, p.item_id, p.label or "") for p in snapshot.items),
                  key=lambda r: (r[1], r[0]))
    return _write_csv(path, [constants.X, constants.Y, constants.ITEM_ID, constants.LABEL], rows)


def write_occupancy(path: str, rows: Sequence[tuple[int, int, int]]) -> str:
    return _write_csv(path, [constants.X, constants.Y, constants.ITEM_ID], rows)


def write_pgm(path: str, levels: Sequence[Sequence[int]]) -> str:
    """plain (P2) graymap, one value per cell, row-major"""
    height = len(levels)
    width = len(levels[0]) if height else 0
    with open(path, "w", encoding="ascii", newline="") as file:
        file.write(f"{constants.PGM_MAGIC}{constants.LINE_TERMINATOR}")
        file.write(f"{width} {height}{constants.LINE_TERMINATOR}")
        file.write(f"{constants.PGM_MAX_GRAY}{constants.LINE_TERMINATOR}")
        for row in levels:
            file.write(" ".join(str(int(v)) for v in row) + constants.LINE_TERMINATOR)
    return path


def read_pgm(path: str) -> list[list[int]]:
    if not os.path.isfile(path):
        raise FileNotFoundError(f"File '{path}' does not exist!")
    with open(path, "r", encoding="ascii") as file:
        tokens = file.read().split()
    if not tokens or tokens[0] != constants.PGM_MAGIC:
        raise ValueError(f"'{path}' is not a plain PGM file")
    width, height = int(tokens[1]), int(tokens[2])
    values = [int(v) for v in tokens[4:]]
    return [values[row * width:(row + 1) * width] for row in range(height)]


def write_compare(path: str, rows: Sequence[CompareRow]) -> str:
    header = [constants.SEED, constants.BATCH_FINAL_RATE, constants.STREAM_FINAL_RATE, constants.DELTA]
    return _write_csv(path, header, [[r["seed"], r["batch_final_rate"], r["stream_final_rate"], r["delta"]]
                                     for r in rows])


def snapshot_directory(run_directory: str) -> str:
    path = os.path.join(run_directory, constants.SNAPSHOT_DIR)
    os.makedirs(path, exist_ok=True)
    return path


def write_log(log: CheckpointLog, run_directory: str, heatmap_levels) -> list[str]:
    """Write reports, entropy, skipped reasons and per-checkpoint snapshots/heatmaps of a finished run.

    heatmap_levels converts a pheromone array to gray levels.
    """
    written = [
        write_reports(os.path.join(run_directory, constants.REPORTS_FILE), log.reports),
        write_entropy(os.path.join(run_directory, constants.ENTROPY_FILE), log.entropy),
        write_skipped(os.path.join(run_directory, constants.SKIPPED_FILE), log.skipped),
    ]
    folder = snapshot_directory(run_directory)
    for snapshot in log.snapshots:
        written.append(write_snapshot(os.path.join(folder, constants.SNAPSHOT_TEMPLATE.format(step=snapshot.step)),
                                      snapshot))
        sigma = log.heatmaps.get(snapshot.step)
        if sigma is not None:
            written.append(write_pgm(os.path.join(folder, constants.HEATMAP_TEMPLATE.format(step=snapshot.step)),
                                     heatmap_levels(sigma)))
    logging.info(f"wrote {len(written)} result files to '{run_directory}'")
    return written
