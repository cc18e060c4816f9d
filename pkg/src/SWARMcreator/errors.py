from __future__ import annotations
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from SWARMcreator.classes import Position


class SwarmError(Exception):
    """Base class of all errors raised by SWARMcreator"""


class CellOccupied(SwarmError):
    def __init__(self, position: Position, item_id: int):
        super().__init__(f"cell ({position.x}, {position.y}) already holds item {item_id}")
        self.position = position
        self.item_id = item_id


class GridOverflow(SwarmError):
    pass


class ScheduleError(SwarmError):
    pass


class InsufficientItems(SwarmError):
    pass


class DataFormatError(SwarmError):
    def __init__(self, message: str, row: int | None = None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class ConfigError(SwarmError):
    """Carries every violation found while loading a configuration"""

    def __init__(self, violations: Iterable[str]):
        self.violations = list(violations)
        text = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(f"invalid configuration ({len(self.violations)} violation(s)):\n{text}")
