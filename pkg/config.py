from dotenv import load_dotenv
import logging
import os

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)

VERSION = "1.0.0"

# Logging Configuration
LOG_LEVEL = os.getenv("CASIMIR_RECT_LOG_LEVEL", "WARNING").upper()

# Series / determinant truncation
DEFAULT_ORDER = int(os.getenv("CASIMIR_RECT_ORDER", "8"))
DEFAULT_MODES = int(os.getenv("CASIMIR_RECT_MODES", "16"))

# Quadrature Configuration
DEFAULT_REL_TOL = float(os.getenv("CASIMIR_RECT_REL_TOL", "1e-12"))
ABS_TOL = 1e-14
MAX_DEPTH = 60

# Root finding
ROOT_TOL = 1e-14
ROOT_MAX_ITER = 200

# Below this aspect ratio Sigma is only reached through the exchange symmetry
MIN_RHO = 0.5

# psi(xi, 1) is below 1e-16 past this |xi|
XI_CUTOFF = 40.0

# Series order used for the potential integrals at rho = 1
PSI_CACHE_ORDER = 8

# Worker pool for grid evaluation
try:
    THREADS = int(os.getenv("CASIMIR_RECT_THREADS", str(os.cpu_count() or 1)))
    if THREADS < 1:
        raise ValueError(f"thread count must be positive, got {THREADS}")
except ValueError as e:
    logger.warning(f"Invalid CASIMIR_RECT_THREADS, using 1 worker: {e}")
    THREADS = 1
