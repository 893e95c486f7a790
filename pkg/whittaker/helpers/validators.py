"""Custom voluptuous validators."""
from __future__ import annotations

from typing import Any

import voluptuous as vol
from sympy import isprime


class OddPrime:
    """Ensure value is an odd prime."""

    def __init__(self, description: str = "An odd prime number.") -> None:
        self.description = description

    def __call__(self, value: Any) -> int:
        """Validate odd prime."""
        try:
            value = int(value)
        except (TypeError, ValueError) as error:
            raise vol.Invalid(f"expected an integer, got {value!r}") from error
        if value < 3 or not isprime(value):
            raise vol.Invalid(f"{value} is not an odd prime")
        return value

    def __repr__(self) -> str:
        """Return representation."""
        return "OddPrime"


class CoerceNoneToDict:
    """Coerce None to empty dict."""

    def __call__(self, value: dict[str, Any] | None) -> dict[str, Any]:
        """Coerce None to empty dict."""
        if isinstance(value, dict):
            return value

        if value is None:
            return {}
        raise vol.CoerceInvalid("expected dict or None")

    def __repr__(self) -> str:
        """Return representation."""
        return "CoerceNoneToDict(dict)"


class Maybe(vol.Any):
    """Mimic voluptuous.Maybe but using a class instead."""

    def __init__(self, *validators, **kwargs) -> None:
        super().__init__(*validators + (None,), **kwargs)


def positive_int(description: str) -> vol.All:
    """Return a validator for integers >= 1."""
    return vol.All(vol.Coerce(int), vol.Range(min=1), msg=description)
