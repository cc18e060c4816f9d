from . import value_constants, config_constants
