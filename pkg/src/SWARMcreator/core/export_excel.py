from __future__ import annotations

import os
from typing import Type, TYPE_CHECKING

from SWARMcreator.classes import CheckpointLog
from SWARMcreator.tool import ExportExcel

if TYPE_CHECKING:
    from SWARMcreator.filehandling.typing import CompareRow


def export_run(log: CheckpointLog, path: str, export_excel: Type[ExportExcel]) -> str:
    if not export_excel.directory_of_path_exists(path):
        raise FileNotFoundError(f"path {os.path.dirname(path)} DNE")

    export_excel.set_log(log)
    workbook = export_excel.create_workbook()
    export_excel.fill_rate_sheet(workbook.active)
    export_excel.fill_entropy_sheet(workbook.create_sheet())
    if log.skipped:
        export_excel.fill_skipped_sheet(workbook.create_sheet())
    workbook.save(path)
    return path


def export_compare(rows: list[CompareRow], path: str, export_excel: Type[ExportExcel]) -> str:
    if not export_excel.directory_of_path_exists(path):
        raise FileNotFoundError(f"path {os.path.dirname(path)} DNE")

    export_excel.set_compare_rows(rows)
    workbook = export_excel.create_workbook()
    export_excel.fill_compare_sheet(workbook.active)
    workbook.save(path)
    return path
