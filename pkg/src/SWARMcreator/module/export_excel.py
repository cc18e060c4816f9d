from __future__ import annotations
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from SWARMcreator.classes import CheckpointLog
    from SWARMcreator.filehandling.typing import CompareRow


class ExportExcelProperties:
    log: CheckpointLog = None
    compare_rows: list[CompareRow] = None
