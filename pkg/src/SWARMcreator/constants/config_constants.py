GRID_WIDTH = "grid.width"
GRID_HEIGHT = "grid.height"

MOVEMENT_BETA = "movement.beta"
MOVEMENT_DELTA = "movement.delta"
MOVEMENT_ETA = "movement.eta"
MOVEMENT_KAPPA = "movement.kappa"
MOVEMENT_W_TABLE = "movement.w_table"

THRESHOLD_THETA_COUNT = "threshold.theta_count"
THRESHOLD_STEEPNESS = "threshold.steepness"
THRESHOLD_K1 = "threshold.k1"
THRESHOLD_K2 = "threshold.k2"
THRESHOLD_AGGREGATION = "threshold.aggregation"

COLONY_SIZE = "colony.size"
COLONY_MIN_SIZE = "colony.min_size"
COLONY_ITEMS_PER_ANT = "colony.items_per_ant"

DATA_SOURCE = "data.source"
DATA_CSV = "data.csv"
DATA_FEATURES = "data.features"

SYNTHETIC_CLASSES = "synthetic.n_classes"
SYNTHETIC_ITEMS_PER_CLASS = "synthetic.items_per_class"
SYNTHETIC_MEANS = "synthetic.means"
SYNTHETIC_SPREAD = "synthetic.spread"
SYNTHETIC_SEED = "synthetic.seed"

SCHEDULE_MODE = "schedule.mode"
SCHEDULE_GROUP_SIZES = "schedule.group_sizes"
SCHEDULE_RELEASE_STEPS = "schedule.release_steps"
SCHEDULE_FILE = "schedule.file"
SCHEDULE_ORDER = "schedule.order"

RUN_HORIZON = "run.horizon"
RUN_CHECKPOINTS = "run.checkpoints"
RUN_CHECKPOINTS_PER_DECADE = "run.checkpoints_per_decade"
RUN_SEED = "run.seed"
RUN_OUTPUT = "run.output"
RUN_EXCEL = "run.excel"

EVALUATION_K = "evaluation.k"
EVALUATION_TEST_FRACTION = "evaluation.test_fraction"
EVALUATION_SUBSETS = "evaluation.n_subsets"
EVALUATION_PATCH_SIZE = "evaluation.patch_size"

# keys left out of the run directory hash
HASH_EXCLUDED = (RUN_SEED, RUN_OUTPUT)

LIST_SEPARATOR = ","
VECTOR_SEPARATOR = ";"
ASSIGNMENT = "="
COMMENT = "#"
TRUE_STRINGS = ("true", "yes", "1", "on")
FALSE_STRINGS = ("false", "no", "0", "off")
