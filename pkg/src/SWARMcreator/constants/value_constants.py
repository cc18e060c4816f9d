# Compass directions, clockwise from north in 45° steps. A direction is stored as its index.
N, NE, E, SE, S, SW, W, NW = range(8)
DIRECTIONS = ("N", "NE", "E", "SE", "S", "SW", "W", "NW")
DIRECTION_COUNT = 8

# (dx, dy) per direction; y is the row index and grows southwards
DIRECTION_OFFSETS = ((0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1))

# 3x3 region, row-major, NW first
NEIGHBORHOOD_OFFSETS = ((-1, -1), (0, -1), (1, -1),
                        (-1, 0), (0, 0), (1, 0),
                        (-1, 1), (0, 1), (1, 1))

TURN_ANGLES = (0, 45, 90, 135, 180)

# Grid
GRID_WIDTH = 57
GRID_HEIGHT = 57
MIN_GRID_SIZE = 3

# Movement kinetics
BETA = 3.5
DELTA = 0.2
ETA = 0.07
KAPPA = 0.015
W_TABLE = (1.0, 0.5, 0.25, 1 / 12, 1 / 20)

# Response thresholds
THETA_COUNT = 5.0
STEEPNESS = 2.0
K1 = 0.1
K2 = 0.15

AGGREGATION_MAX = "max"
AGGREGATION_MIN = "min"
AGGREGATION_MEAN = "mean"
AGGREGATIONS = (AGGREGATION_MAX, AGGREGATION_MIN, AGGREGATION_MEAN)

# Colony
COLONY_MIN_SIZE = 10
ITEMS_PER_ANT = 10

# Synthetic data
SYNTHETIC_CLASSES = 4
SYNTHETIC_ITEMS_PER_CLASS = 200
SYNTHETIC_MEANS = ((0.2, 0.2), (0.2, 0.8), (0.8, 0.2), (0.8, 0.8))
SYNTHETIC_SPREAD = 0.1
SYNTHETIC_SEED = 0
LABEL_PREFIX = "type"

# Data sources / schedule modes
SOURCE_SYNTHETIC = "synthetic"
SOURCE_CSV = "csv"
DATA_SOURCES = (SOURCE_SYNTHETIC, SOURCE_CSV)

SCHEDULE_BATCH = "batch"
SCHEDULE_GROUPS = "groups"
SCHEDULE_FILE = "file"
SCHEDULE_MODES = (SCHEDULE_BATCH, SCHEDULE_GROUPS, SCHEDULE_FILE)

# how items are dealt into release groups
ORDER_SHUFFLED = "shuffled"
ORDER_BY_LABEL = "by_label"
SCHEDULE_ORDERS = (ORDER_SHUFFLED, ORDER_BY_LABEL)

# Streaming protocol: five equal groups and a small remainder, 10^4 steps apart
STREAM_GROUP_COUNT = 6
STREAM_RELEASE_INTERVAL = 10_000
STREAM_REMAINDER_SHARE = 4 / 244

# Run / evaluation
HORIZON = 1_000_000
FIRST_CHECKPOINT = 1_000
CHECKPOINTS_PER_DECADE = 10
KNN_K = 3
TEST_FRACTION = 0.2
N_SUBSETS = 10
PATCH_SIZE = 8
AUTO = "auto"
