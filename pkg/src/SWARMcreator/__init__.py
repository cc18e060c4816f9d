__version__ = "0.3.0"

from .errors import SwarmError, ConfigError, DataFormatError, ScheduleError, GridOverflow, InsufficientItems, \
    CellOccupied
from .classes import Grid, PheromoneField, Position, Item, FeatureSpace, RunConfig, World
from .constants import value_constants, config_constants
from . import tool, filehandling
from .core import simulation

from . import module
