from datetime import datetime

# Canonical grid.
MINUTES_PER_DAY = 60 * 24
DEFAULT_STEP_MINUTES = 1
EPOCH = datetime(1970, 1, 1)
ISO_MINUTE_FORMAT = "%Y-%m-%dT%H:%M"
CSV_HEADER = ("timestamp", "value")
CSV_FLOAT_FORMAT = "%.17g"

# Ingestion gap policy, in missing samples.
MAX_GAP_SAMPLES = 5

# Trend and slope windows, in samples.
TREND_WINDOW = 100
SLOPE_WINDOW = 100
REFERENCE_WINDOW = 100

# Rolling sums are re-accumulated from scratch at least this often.
RESUM_INTERVAL = 2**16

# Forecast horizons, in samples.
HORIZONS = (5, 15, 60)

# Denominator guard of the day-lagged scaling factor, veh/min.
SCALE_EPS = 0.5

# Volatility analysis scales and the volatility-forecast case.
VOLATILITY_WINDOWS = (100, 250, 500)
VOLATILITY_FORECAST_WINDOW = 250
VOLATILITY_FORECAST_HORIZON = 15

# Windows processed per chunk by the two-pass volatility kernel.
VOLATILITY_CHUNK = 4096

# loguru's built-in levels, lowest first.
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")
