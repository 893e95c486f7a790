"""Mackey constants."""
from typing import Final

COMPONENT = "mackey"

# Randomized reciprocity triples checked by the acceptance sweep
DEFAULT_FROBENIUS_TRIPLES: Final = 500
