"""GL2(o_ell), its named subgroups, cosets and conjugacy classes."""
from __future__ import annotations

from typing import Final

import voluptuous as vol

from whittaker.const import DEFAULT_BUDGET_ELEMENTS

from .classes import ConjugacyClasses, conjugacy_classes
from .classify import classify_codes, classify_matrix, f_exponent, is_regular
from .const import (
    COMPONENT,
    CONFIG_BUDGET_ELEMENTS,
    DESC_BUDGET_ELEMENTS,
    DESC_COMPONENT,
)
from .cosets import CosetSpace, DoubleCosetSet, coset_space, double_cosets
from .groups import GroupHandle, MatrixGroup, enumerate_gl2, gl2_order
from .matrices import Mat2, MatrixOps, matrix_ops
from .subgroups import Subgroup, build_subgroup, intersection, product

CONFIG_SCHEMA: Final = vol.Schema(
    {
        vol.Optional(COMPONENT, default={}, description=DESC_COMPONENT): vol.Schema(
            {
                vol.Optional(
                    CONFIG_BUDGET_ELEMENTS,
                    default=DEFAULT_BUDGET_ELEMENTS,
                    description=DESC_BUDGET_ELEMENTS,
                ): vol.All(vol.Coerce(int), vol.Range(min=1)),
            }
        )
    },
    extra=vol.ALLOW_EXTRA,
)

__all__ = [
    "CONFIG_SCHEMA",
    "ConjugacyClasses",
    "CosetSpace",
    "DoubleCosetSet",
    "GroupHandle",
    "Mat2",
    "MatrixGroup",
    "MatrixOps",
    "Subgroup",
    "build_subgroup",
    "classify_codes",
    "classify_matrix",
    "conjugacy_classes",
    "coset_space",
    "double_cosets",
    "enumerate_gl2",
    "f_exponent",
    "gl2_order",
    "intersection",
    "is_regular",
    "matrix_ops",
    "product",
]
