"""Hecke algebra constants."""
from typing import Final

COMPONENT = "hecke"

# CONFIG_SCHEMA constants
CONFIG_DENSE_LIMIT = "dense_limit"
CONFIG_SPARSE_LIMIT = "sparse_limit"
CONFIG_TOLERANCE = "tolerance"
CONFIG_SEED = "seed"
CONFIG_MAX_ATTEMPTS = "max_attempts"
CONFIG_EXACT_LIMIT = "exact_limit"

DEFAULT_EXACT_LIMIT: Final = 2000

DESC_COMPONENT = "Endomorphism algebras of induced modules."
DESC_DENSE_LIMIT = "Largest algebra dimension whose spectrum is computed densely."
DESC_SPARSE_LIMIT = "Largest induced module dimension an algebra is built for."
DESC_TOLERANCE = "Relative gap below which two eigenvalues are counted as equal."
DESC_SEED = "Seed of the random self-adjoint element."
DESC_MAX_ATTEMPTS = "Fresh seeds tried before a degenerate spectrum is reported."
DESC_EXACT_LIMIT = (
    "Largest algebra dimension for which the number of blocks is confirmed by an exact "
    "centre computation modulo a prime."
)

# Products sampled by the closure check
DEFAULT_CLOSURE_SAMPLES: Final = 20

# Seed offset of the second, independent spectral run
SECOND_SEED_OFFSET: Final = 7919

KEY_BLOCKS = "blocks"
KEY_BLOCK_SIZE = "m"
KEY_BLOCK_COUNT = "count"
