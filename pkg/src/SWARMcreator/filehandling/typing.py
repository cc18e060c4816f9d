from __future__ import annotations
from typing import TypedDict, Union


class ItemRow(TypedDict):
    row: int
    id: int
    label: str | None
    features: tuple[float, ...]


class CompareRow(TypedDict):
    seed: Union[int, str]
    batch_final_rate: float
    stream_final_rate: float
    delta: float


class ManifestDict(TypedDict):
    version: str
    seed: int
    run_directory: str
    wall_time: float
    config: dict[str, str]


FlatConfig = dict[str, str]
