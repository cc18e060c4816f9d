from .habitat import Habitat
from .kinetics import Kinetics
from .behavior import Behavior
from .datastream import DataStream
from .evaluation import Evaluation
from .simulation import Simulation
from .export_excel import ExportExcel
