"""Constants."""
from typing import Final

DEFAULT_BUDGET_ELEMENTS: Final = 1_000_000
DEFAULT_DENSE_LIMIT: Final = 10_000
DEFAULT_SPARSE_LIMIT: Final = 100_000
DEFAULT_CHARTAB_MAX_ORDER: Final = 10_000
DEFAULT_CHARTAB_MAX_CLASSES: Final = 1500
DEFAULT_CLUSTER_TOLERANCE: Final = 1e-7
DEFAULT_SPECTRAL_ATTEMPTS: Final = 3
DEFAULT_SEED: Final = 0

# Exhaustive checks run up to this many elements, sampled above
EXHAUSTIVE_CHECK_LIMIT: Final = 10_000

REPORT_SCHEMA_VERSION: Final = 1

EXIT_OK: Final = 0
EXIT_MISMATCH: Final = 1
EXIT_USAGE: Final = 2

FLAVOR_ZMOD: Final = "zmod"
FLAVOR_TPOLY: Final = "tpoly"
FLAVORS: Final = (FLAVOR_ZMOD, FLAVOR_TPOLY)

TYPE_CUSPIDAL: Final = "cuspidal"
TYPE_SS: Final = "split-semisimple"
TYPE_SNS: Final = "split-non-semisimple"
TYPE_NON_REGULAR: Final = "non-regular"
MATRIX_TYPES: Final = (TYPE_CUSPIDAL, TYPE_SS, TYPE_SNS, TYPE_NON_REGULAR)

CONFIG_PATH_ENV: Final = "WHITTAKER_CONFIG"
