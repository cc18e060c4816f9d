from .simulation import SimulationProperties
from .export_excel import ExportExcelProperties
import SWARMcreator

SWARMcreator.SimulationProperties = SimulationProperties()
SWARMcreator.ExportExcelProperties = ExportExcelProperties()
