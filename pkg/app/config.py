import logging
import os
import sys

LOG_LEVEL = os.getenv("IMMERSION_LOG_LEVEL", "INFO").upper()
LOG_FILE = os.getenv("IMMERSION_LOG_FILE")

# Branch-node budget shared by the exact colorers and the oracle
DEFAULT_BUDGET = int(os.getenv("IMMERSION_BUDGET", 10_000_000))
DEFAULT_TIME_LIMIT = float(os.getenv("IMMERSION_TIME_LIMIT", 120))
DEFAULT_MAX_PATHS_PER_PAIR = int(os.getenv("IMMERSION_MAX_PATHS_PER_PAIR", 100_000))

_handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
if LOG_FILE:
    _handlers.append(logging.FileHandler(LOG_FILE))

logging.basicConfig(
    level=LOG_LEVEL,
    format="%(asctime)s - %(levelname)s - %(message)s",
    handlers=_handlers,
)

logger = logging.getLogger("app")
