"""Induced characters, exact inner products and the Mackey double coset sum."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from whittaker.components.characters import LinearCharacter
from whittaker.components.group_core import (
    ConjugacyClasses,
    DoubleCosetSet,
    MatrixGroup,
    double_cosets,
)
from whittaker.exceptions import BadParam, InexactResult, NotASubgroup
from whittaker.helpers import log_duration
from whittaker.helpers.cyclotomic import Cyclotomic

from .class_function import ClassFunction
from .const import DEFAULT_FROBENIUS_TRIPLES
from .induction import (
    InducedModuleSpec,
    class_counts,
    induced_char,
    inner,
    restricted_inner,
)
from .nonregular import (
    check_nonregular_identity,
    check_support_shape,
    inflate,
    kernel_constituents,
    nonregular_part,
    twist,
)

LOGGER = logging.getLogger(__name__)


@dataclass
class DoubleCosetData:
    """Double cosets left \\ G / right with stabilizer orders."""

    cosets: DoubleCosetSet
    stabilizer_orders: np.ndarray

    @property
    def count(self) -> int:
        """Return the number of double cosets."""
        return self.cosets.count

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {
            **self.cosets.as_dict(),
            "stabilizer_orders": self.stabilizer_orders.tolist(),
        }


def double_coset_data(
    ambient: MatrixGroup, left: MatrixGroup, right: MatrixGroup
) -> DoubleCosetData:
    """Return representatives, sizes and stabilizers of left \\ ambient / right."""
    cosets = double_cosets(ambient, left, right)
    orders = np.array(
        [len(cosets.stabilizer(index)[0]) for index in range(cosets.count)],
        dtype=np.int64,
    )
    # |left r right| = |left| |right| / |left cap r right r^-1|
    expected = np.full(cosets.count, left.order * right.order)
    if not np.array_equal(orders * cosets.sizes, expected):
        reason = "stabilizer orders do not match double coset sizes"
        raise NotASubgroup(left.name, reason)
    return DoubleCosetData(cosets, orders)


def mackey_summand(
    cosets: DoubleCosetSet, index: int, first: LinearCharacter, second: LinearCharacter
) -> int:
    """Return <first, second^r> on left cap r right r^-1 for double coset index."""
    stabilizer, residual = cosets.stabilizer(index)
    on_left = first.exponents(stabilizer, check=False)
    on_right = second.exponents(residual, check=False)
    difference = (on_left - on_right) % first.conductor
    if not np.any(difference):
        return 1
    value = Cyclotomic.from_exponents(difference, first.conductor).to_rational()
    if value is None or value % len(stabilizer):
        raise InexactResult("Mackey summand", value)
    summand = int(value) // len(stabilizer)
    if summand not in (0, 1):
        raise InexactResult("Mackey summand", summand)
    return summand


def supported_double_cosets(
    cosets: DoubleCosetSet, first: LinearCharacter, second: LinearCharacter
) -> np.ndarray:
    """Return the indices of double cosets with a nonzero Mackey summand."""
    return np.array(
        [
            index
            for index in range(cosets.count)
            if mackey_summand(cosets, index, first, second)
        ],
        dtype=np.int64,
    )


def mackey_hom(
    first: InducedModuleSpec,
    second: InducedModuleSpec,
    cosets: DoubleCosetSet | None = None,
) -> int:
    """Return dim Hom(Ind first, Ind second) by the Mackey formula."""
    if first.ambient.order != second.ambient.order:
        raise BadParam("second", second.label, "induced to a different group")
    if cosets is None:
        cosets = double_cosets(first.ambient, first.subgroup, second.subgroup)
    with log_duration(LOGGER, f"Mackey sum over {cosets.count} double cosets"):
        total = len(supported_double_cosets(cosets, first.character, second.character))
    LOGGER.debug("Hom(%s, %s) has dimension %d", first.label, second.label, total)
    return total


def frobenius_crosscheck(
    classes: ConjugacyClasses, spec: InducedModuleSpec, rho: ClassFunction
) -> bool:
    """Return True if <Ind phi, rho>_G equals <phi, Res rho>_H."""
    induced_side = inner(induced_char(classes, spec), rho)
    restricted_side = restricted_inner(spec.character, rho)
    if induced_side != restricted_side:
        LOGGER.error(
            "Frobenius reciprocity fails for %s and %s: %s != %s",
            spec.label,
            rho.label,
            induced_side,
            restricted_side,
        )
        return False
    return True


__all__ = [
    "ClassFunction",
    "DEFAULT_FROBENIUS_TRIPLES",
    "DoubleCosetData",
    "InducedModuleSpec",
    "check_nonregular_identity",
    "check_support_shape",
    "class_counts",
    "double_coset_data",
    "frobenius_crosscheck",
    "induced_char",
    "inflate",
    "inner",
    "kernel_constituents",
    "mackey_hom",
    "mackey_summand",
    "nonregular_part",
    "restricted_inner",
    "supported_double_cosets",
    "twist",
]
