from __future__ import annotations

import csv
import logging
import math
import os
from typing import Iterable, TYPE_CHECKING

from SWARMcreator.errors import DataFormatError
from . import constants
from .typing import ItemRow

if TYPE_CHECKING:
    from SWARMcreator.classes import FeatureSpace, Item


def _check_file(path: str | os.PathLike) -> None:
    if not path or not os.path.isfile(path):
        raise FileNotFoundError(f"File '{path}' does not exist!")


def _csv_rows(path: str | os.PathLike) -> list[tuple[int, list[str]]]:
    """numbered, stripped cells of every line"""
    try:
        with open(path, "r", encoding="utf-8", newline="") as file:
            reader = csv.reader(file)
            return [(row_number, [c.strip() for c in cells]) for row_number, cells in enumerate(reader, start=1)]
    except UnicodeDecodeError as error:
        raise DataFormatError(f"'{path}' is not UTF-8 text: {error.reason} at byte {error.start}")
    except csv.Error as error:
        raise DataFormatError(f"'{path}' is not readable as CSV: {error}")


def _is_header(cells: list[str]) -> bool:
    try:
        int(cells[0])
    except ValueError:
        return True
    return False


def _parse_item_row(cells: list[str], row_number: int) -> ItemRow:
    if len(cells) < 3:
        raise DataFormatError(f"expected 'id,label,f1,...' but found {len(cells)} column(s)", row_number)
    try:
        item_id = int(cells[0])
    except ValueError:
        raise DataFormatError(f"item id '{cells[0]}' is not an integer", row_number)
    features = list()
    for column, text in enumerate(cells[2:], start=1):
        try:
            features.append(float(text))
        except ValueError:
            raise DataFormatError(f"feature f{column} '{text}' is not a number", row_number)
        if not math.isfinite(features[-1]):
            raise DataFormatError(f"feature f{column} '{text}' is not finite", row_number)
    label = cells[1].strip() or None
    return {"row": row_number, "id": item_id, "label": label, "features": tuple(features)}


def read_item_rows(path: str | os.PathLike) -> list[ItemRow]:
    """rows 'id,label,f1,...,fF'; the header line is optional"""
    _check_file(path)
    rows: list[ItemRow] = list()
    seen: dict[int, int] = dict()
    for row_number, cells in _csv_rows(path):
        if not any(cells):
            continue
        if row_number == 1 and _is_header(cells):
            continue
        row = _parse_item_row(cells, row_number)
        if row["id"] in seen:
            raise DataFormatError(f"item id {row['id']} already used in row {seen[row['id']]}", row_number)
        seen[row["id"]] = row_number
        rows.append(row)
    logging.debug(f"read {len(rows)} item rows from '{path}'")
    return rows


def write_items_csv(path: str | os.PathLike, items: Iterable[Item], space: FeatureSpace | None = None) -> str:
    """Write items in the ingestion format. With a space the features are mapped back to raw values."""
    items = sorted(items, key=lambda i: i.id)
    dimension = items[0].dimension if items else 0
    header = [constants.ID, constants.LABEL] + [f"{constants.FEATURE_PREFIX}{i}" for i in range(1, dimension + 1)]
    with open(path, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file, lineterminator=constants.LINE_TERMINATOR)
        writer.writerow(header)
        for item in items:
            features = space.denormalize(item.features) if space is not None else item.features
            writer.writerow([item.id, item.label or ""] + [repr(float(v)) for v in features])
    logging.info(f"wrote {len(items)} items to '{path}'")
    return str(path)


def read_schedule_file(path: str | os.PathLike) -> list[tuple[int, int]]:
    """rows 'release_step,count' in release order; the header line is optional"""
    _check_file(path)
    rows = list()
    for row_number, cells in _csv_rows(path):
        if not any(cells):
            continue
        if row_number == 1 and _is_header(cells):
            continue
        if len(cells) != 2:
            raise DataFormatError(f"expected 'release_step,count' but found {len(cells)} column(s)", row_number)
        try:
            rows.append((int(cells[0]), int(cells[1])))
        except ValueError:
            raise DataFormatError(f"'{cells[0]},{cells[1]}' are not integers", row_number)
    if not rows:
        raise DataFormatError(f"schedule file '{path}' holds no groups")
    return rows
