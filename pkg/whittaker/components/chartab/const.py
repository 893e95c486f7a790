"""Character table constants."""
from typing import Final

COMPONENT = "chartab"

# CONFIG_SCHEMA constants
CONFIG_MAX_ORDER = "max_order"
CONFIG_MAX_CLASSES = "max_classes"

DESC_COMPONENT = "Full character tables of small groups."
DESC_MAX_ORDER = "Largest group order a character table is computed for."
DESC_MAX_CLASSES = "Largest class count a character table is computed for."

# float64 products are exact below this bound
EXACT_FLOAT_BOUND: Final = 2**52
EXACT_INT_BOUND: Final = 2**62

KEY_TYPE = "type"
KEY_DIM = "dim"
KEY_MULT = "mult"
KEY_COUNT = "count"
KEY_CENTRAL = "central"
