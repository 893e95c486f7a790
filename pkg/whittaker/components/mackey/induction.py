"""Induced characters and exact inner products."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from whittaker.components.characters import LinearCharacter
from whittaker.components.group_core import ConjugacyClasses, MatrixGroup
from whittaker.exceptions import BadParam, BudgetExceeded, InexactResult, NotASubgroup
from whittaker.helpers import log_duration
from whittaker.helpers.cyclotomic import reduce_mod_cyclotomic

from .class_function import ClassFunction, hermitian_sum

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class InducedModuleSpec:
    """Ind from character.domain to ambient of a one-dimensional character."""

    ambient: MatrixGroup
    character: LinearCharacter

    @property
    def subgroup(self) -> MatrixGroup:
        """Return the inducing subgroup."""
        return self.character.domain

    @property
    def dimension(self) -> int:
        """Return [ambient : subgroup]."""
        return self.ambient.order // self.subgroup.order

    @property
    def label(self) -> str:
        """Return a short description."""
        return f"Ind_{self.subgroup.name}^{self.ambient.name} {self.character.label}"

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {
            "subgroup": self.subgroup.name,
            "character": self.character.label,
            "dimension": self.dimension,
        }


def class_counts(classes: ConjugacyClasses, character: LinearCharacter) -> np.ndarray:
    """Return counts[c, e] = #{h in H : h in class c, character(h) = zeta_E^e}."""
    domain = character.domain
    class_index = classes.classify(domain.elements)
    if np.any(class_index < 0):
        raise NotASubgroup(domain.name, f"not contained in {classes.group.name}")
    counts = np.zeros((classes.count, character.conductor), dtype=np.int64)
    np.add.at(counts, (class_index, character.table), 1)
    return counts


def induced_char(classes: ConjugacyClasses, spec: InducedModuleSpec) -> ClassFunction:
    """Return the character of Ind_H^G(phi) on the classes of G."""
    group = classes.group
    if group.order != spec.ambient.order:
        expected = f"classes of {spec.ambient.name} expected"
        raise BadParam("classes", group.name, expected)
    if not group.materialized:
        what = f"induced character on {group.name}"
        raise BudgetExceeded(what, group.order, getattr(group, "budget", 0))
    subgroup = spec.subgroup
    conductor = spec.character.conductor
    with log_duration(LOGGER, f"Character of {spec.label}"):
        counts = class_counts(classes, spec.character)
        # Ind(g) = |C_G(g)| / |H| * sum of phi over H cap class(g)
        centralizer_orders = group.order // classes.sizes
        weighted = counts * centralizer_orders[:, None]
        canonical = reduce_mod_cyclotomic(weighted, conductor)
        if np.any(canonical % subgroup.order):
            what = f"character of {spec.label}"
            raise InexactResult(what, "non-integral coefficients")
    result = ClassFunction.from_canonical(
        classes, canonical // subgroup.order, conductor, spec.label
    )
    if result.degree != spec.dimension:
        raise InexactResult(f"degree of {spec.label}", result.degree)
    return result


def inner(first: ClassFunction, second: ClassFunction) -> Fraction:
    """Return (1/|G|) sum_g first(g) conj(second(g)) exactly."""
    if first.classes is not second.classes:
        raise BadParam("second", second.label, "class function of a different group")
    total = hermitian_sum(first.values, second.values, first.classes.sizes)
    return total / first.group.order


def restricted_inner(character: LinearCharacter, rho: ClassFunction) -> Fraction:
    """Return <character, Res rho> on the domain of character."""
    counts = class_counts(rho.classes, character)
    weights = np.ones(rho.classes.count, dtype=np.int64)
    return hermitian_sum(counts, rho.values, weights) / character.domain.order
