"""Constructions constants."""
from typing import Final

from whittaker.const import TYPE_CUSPIDAL, TYPE_SNS, TYPE_SS

COMPONENT = "constructions"


def regular_dimension(kind: str, q: int, ell: int) -> int:
    """Return the dimension of a regular irreducible of the given type."""
    if kind == TYPE_SS:
        return (q + 1) * q ** (ell - 1)
    if kind == TYPE_SNS:
        return (q * q - 1) * q ** (ell - 2) if ell >= 2 else q
    return (q - 1) * q ** (ell - 1)


def regular_count(kind: str, q: int, ell: int) -> int:
    """Return the number of regular irreducibles of the given type."""
    if ell == 1:
        if kind == TYPE_SS:
            return (q - 1) * (q - 2) // 2
        if kind == TYPE_SNS:
            return q - 1
        return q * (q - 1) // 2
    if kind == TYPE_SS:
        return (q - 1) ** 3 * q ** (2 * ell - 3) // 2
    if kind == TYPE_SNS:
        return (q - 1) * q ** (2 * ell - 2)
    return (q - 1) * (q * q - 1) * q ** (2 * ell - 3) // 2


REGULAR_KINDS: Final = (TYPE_SS, TYPE_SNS, TYPE_CUSPIDAL)
