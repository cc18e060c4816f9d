from __future__ import annotations
from typing import TYPE_CHECKING

import math
import os.path

from openpyxl import Workbook
from openpyxl import styles
from openpyxl.utils import get_column_letter
from openpyxl.worksheet.table import Table, TableStyleInfo
from openpyxl.worksheet.worksheet import Worksheet

import SWARMcreator
from SWARMcreator.classes import CheckpointLog

RATES = "Rates"
ENTROPY = "Entropy"
SKIPPED = "Skipped"
COMPARE = "Compare"
TABLE_STYLE = "TableStyleLight1"
AGGREGATE_FONT = styles.Font(bold=True)

if TYPE_CHECKING:
    from SWARMcreator.module.export_excel import ExportExcelProperties
    from SWARMcreator.filehandling.typing import CompareRow


class ExportExcel:
    @classmethod
    def get_properties(cls) -> ExportExcelProperties:
        return SWARMcreator.ExportExcelProperties

    @classmethod
    def get_log(cls) -> CheckpointLog:
        return cls.get_properties().log

    @classmethod
    def set_log(cls, log: CheckpointLog):
        cls.get_properties().log = log

    @classmethod
    def get_compare_rows(cls) -> list[CompareRow]:
        return cls.get_properties().compare_rows

    @classmethod
    def set_compare_rows(cls, rows: list[CompareRow]):
        cls.get_properties().compare_rows = rows

    @classmethod
    def create_workbook(cls):
        return Workbook()

    @classmethod
    def directory_of_path_exists(cls, path):
        return os.path.exists(os.path.dirname(os.path.abspath(path)))

    @classmethod
    def _write_rows(cls, sheet: Worksheet, titles: list[str], rows: list[list]) -> int:
        for column, text in enumerate(titles, start=1):
            sheet.cell(1, column).value = text
        row_index = 1
        for row_index, values in enumerate(rows, start=2):
            for column, value in enumerate(values, start=1):
                sheet.cell(row_index, column).value = value
        return row_index

    @classmethod
    def _add_table(cls, sheet: Worksheet, name: str, last_row: int, column_count: int) -> None:
        if last_row < 2:
            return
        table_range = f"{sheet.cell(1, 1).coordinate}:{sheet.cell(last_row, column_count).coordinate}"
        table = Table(displayName=name, ref=table_range)
        style = TableStyleInfo(name=TABLE_STYLE, showFirstColumn=False,
                               showLastColumn=False, showRowStripes=True, showColumnStripes=False)
        table.tableStyleInfo = style
        sheet.add_table(table)

    @classmethod
    def fill_rate_sheet(cls, sheet: Worksheet) -> None:
        log = cls.get_log()
        sheet.title = RATES
        subset_count = max((len(r.rates) for r in log.reports), default=0)
        titles = ["step", "mean_rate"] + [f"rate_{i}" for i in range(1, subset_count + 1)]
        rows = [[r.step, r.mean_rate] + list(r.rates) for r in log.reports]
        last_row = cls._write_rows(sheet, titles, rows)
        cls._add_table(sheet, RATES, last_row, len(titles))
        cls.autoadjust_column_widths(sheet)

    @classmethod
    def fill_entropy_sheet(cls, sheet: Worksheet) -> None:
        log = cls.get_log()
        sheet.title = ENTROPY
        titles = ["step", "entropy", "items_on_grid", "items_carried", "pheromone_max"]
        rows = [[s.step, e, len(s.items), len(s.carried), s.pheromone_max]
                for s, (_, e) in zip(log.snapshots, log.entropy)]
        last_row = cls._write_rows(sheet, titles, rows)
        cls._add_table(sheet, ENTROPY, last_row, len(titles))
        cls.autoadjust_column_widths(sheet)

    @classmethod
    def fill_skipped_sheet(cls, sheet: Worksheet) -> None:
        sheet.title = SKIPPED
        titles = ["step", "reason"]
        last_row = cls._write_rows(sheet, titles, [list(entry) for entry in cls.get_log().skipped])
        cls._add_table(sheet, SKIPPED, last_row, len(titles))
        cls.autoadjust_column_widths(sheet)

    @classmethod
    def _cell_value(cls, value: float) -> float | None:
        # excel has no NaN
        return None if math.isnan(value) else value

    @classmethod
    def fill_compare_sheet(cls, sheet: Worksheet) -> None:
        sheet.title = COMPARE
        titles = ["seed", "batch_final_rate", "stream_final_rate", "delta"]
        rows = [[r["seed"]] + [cls._cell_value(r[key]) for key in ("batch_final_rate", "stream_final_rate", "delta")]
                for r in cls.get_compare_rows()]
        last_row = cls._write_rows(sheet, titles, rows)
        for row in range(2, last_row + 1):
            if not isinstance(sheet.cell(row, 1).value, int):
                for column in range(1, len(titles) + 1):
                    sheet.cell(row, column).font = AGGREGATE_FONT
        cls._add_table(sheet, COMPARE, last_row, len(titles))
        cls.autoadjust_column_widths(sheet)

    @classmethod
    def autoadjust_column_widths(cls, sheet: Worksheet) -> None:
        for i in range(len(list(sheet.columns))):
            column_letter = get_column_letter(i + 1)
            column = sheet[column_letter]
            width = max([len(str(cell.value)) for cell in column if cell.value is not None], default=2)
            sheet.column_dimensions[column_letter].width = width + 2
