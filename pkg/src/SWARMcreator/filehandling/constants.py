ID = "id"
LABEL = "label"
FEATURE_PREFIX = "f"
X = "x"
Y = "y"
ITEM_ID = "item_id"
STEP = "step"
MEAN_RATE = "mean_rate"
RATE_PREFIX = "rate_"
ENTROPY = "entropy"
REASON = "reason"
RELEASE_STEP = "release_step"
COUNT = "count"
SEED = "seed"
BATCH_FINAL_RATE = "batch_final_rate"
STREAM_FINAL_RATE = "stream_final_rate"
DELTA = "delta"
AGGREGATE_MEAN = "mean"
AGGREGATE_STDDEV = "stddev"

REPORTS_FILE = "reports.csv"
ENTROPY_FILE = "entropy.csv"
SKIPPED_FILE = "skipped_reports.csv"
MANIFEST_FILE = "manifest.cfg"
RESULTS_WORKBOOK = "results.xlsx"
COMPARE_FILE = "compare.csv"
COMPARE_WORKBOOK = "compare.xlsx"
OCCUPANCY_FILE = "occupancy_final.csv"
SNAPSHOT_DIR = "snapshots"
SNAPSHOT_TEMPLATE = "snapshot_{step:08d}.csv"
HEATMAP_TEMPLATE = "pheromone_{step:08d}.pgm"

PGM_MAGIC = "P2"
PGM_MAX_GRAY = 255
LINE_TERMINATOR = "\n"
