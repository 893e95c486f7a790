"""JSON helpers."""
import dataclasses
import json
from enum import Enum
from fractions import Fraction
from typing import Any

import numpy as np


class JSONEncoder(json.JSONEncoder):
    """Helper to convert objects to JSON."""

    def default(self, o: Any) -> Any:
        """Convert objects."""
        if hasattr(o, "as_dict"):
            return o.as_dict()
        if dataclasses.is_dataclass(o) and not isinstance(o, type):
            return dataclasses.asdict(o)
        if isinstance(o, Enum):
            return o.value
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, Fraction):
            if o.denominator == 1:
                return o.numerator
            return str(o)
        if isinstance(o, (set, frozenset)):
            return sorted(o)

        return json.JSONEncoder.default(self, o)


def dumps(data: Any) -> str:
    """Serialize deterministically."""
    return json.dumps(data, cls=JSONEncoder, sort_keys=True, indent=2)
