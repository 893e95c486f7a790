"""Character tables, induction of class functions and the types of irreducibles."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from sympy import FiniteField

from whittaker.components.characters import unit_characters
from whittaker.components.constructions import has_central_character
from whittaker.components.group_core import (
    ConjugacyClasses,
    MatrixGroup,
    classify_codes,
    conjugacy_classes,
    matrix_ops,
)
from whittaker.components.mackey import ClassFunction, kernel_constituents
from whittaker.const import (
    DEFAULT_CHARTAB_MAX_CLASSES,
    DEFAULT_CHARTAB_MAX_ORDER,
    MATRIX_TYPES,
    TYPE_CUSPIDAL,
    TYPE_NON_REGULAR,
    TYPE_SNS,
    TYPE_SS,
)
from whittaker.exceptions import BadParam, BudgetExceeded, InexactResult, NoSolution
from whittaker.helpers import log_duration
from whittaker.helpers.cyclotomic import reduce_mod_cyclotomic

from .const import KEY_CENTRAL, KEY_DIM, KEY_TYPE
from .dixon import (
    ClassAlgebra,
    common_eigenvectors,
    dixon_prime,
    gram_numerators,
    lift_values,
    normalize,
)

LOGGER = logging.getLogger(__name__)


def stack_values(characters: list[ClassFunction]) -> np.ndarray:
    """Return the coefficient rows of characters as one (n, classes, E) array."""
    return np.stack([character.values for character in characters])


def exact_multiplicities(numerators: np.ndarray, order: int, what: str) -> np.ndarray:
    """Return numerators / order, which must be non-negative integers."""
    if np.any(numerators % order) or np.any(numerators < 0):
        raise InexactResult(what, "not a non-negative integer")
    return numerators // order


@dataclass
class CharacterTable:
    """Every irreducible character of a group; row 0 is the trivial character."""

    classes: ConjugacyClasses
    irreducibles: list[ClassFunction]
    prime: int = 0

    @property
    def group(self) -> MatrixGroup:
        """Return the group."""
        return self.classes.group

    @property
    def count(self) -> int:
        """Return the number of irreducibles."""
        return len(self.irreducibles)

    @cached_property
    def degrees(self) -> list[int]:
        """Return the degrees in table order."""
        return [character.degree for character in self.irreducibles]

    @cached_property
    def values(self) -> np.ndarray:
        """Return the stacked coefficient rows."""
        return stack_values(self.irreducibles)

    def multiplicities(self, characters: list[ClassFunction]) -> np.ndarray:
        """Return m[a, b] = <characters[a], irreducibles[b]>."""
        rows = stack_values(characters)
        numerators = gram_numerators(rows, self.values, self.classes.sizes)
        return exact_multiplicities(
            numerators, self.group.order, f"multiplicities in {self.group.name}"
        )

    def decompose(self, character: ClassFunction) -> dict[int, int]:
        """Return {irreducible index: multiplicity} for a character."""
        row = self.multiplicities([character])[0]
        found = {int(b): int(m) for b, m in enumerate(row) if m}
        total = sum(m * self.degrees[b] for b, m in found.items())
        if total != character.degree:
            raise InexactResult(f"decomposition of {character.label}", total)
        return found

    def check(self) -> None:
        """Raise InexactResult unless the rows are orthonormal and complete."""
        order = self.group.order
        if self.count != self.classes.count:
            raise InexactResult(f"irreducibles of {self.group.name}", self.count)
        gram = gram_numerators(self.values, self.values, self.classes.sizes)
        if not np.array_equal(gram, order * np.eye(self.count, dtype=np.int64)):
            raise InexactResult(f"row orthogonality of {self.group.name}", "fails")
        if sum(d * d for d in self.degrees) != order:
            what = f"sum of squared degrees of {self.group.name}"
            raise InexactResult(what, self.degrees)

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {
            "group": self.group.name,
            "order": self.group.order,
            "classes": self.classes.count,
            "degrees": dict(sorted(Counter(self.degrees).items())),
            "prime": self.prime,
        }


def _sort_key(character: ClassFunction) -> tuple:
    values = character.values
    trivial = bool(np.all(values[:, 0] == 1)) and not np.any(values[:, 1:])
    return character.degree, not trivial, character.canonical.tobytes()


def character_table(
    group: MatrixGroup | ConjugacyClasses,
    max_order: int = DEFAULT_CHARTAB_MAX_ORDER,
    max_classes: int = DEFAULT_CHARTAB_MAX_CLASSES,
) -> CharacterTable:
    """Return the character table of a materialized group."""
    classes = group if isinstance(group, ConjugacyClasses) else None
    if classes is not None:
        group = classes.group
    if group.order > max_order:
        raise BudgetExceeded(f"character table of {group.name}", group.order, max_order)
    if classes is None:
        classes = conjugacy_classes(group)
    if classes.count > max_classes:
        raise BudgetExceeded(f"classes of {group.name}", classes.count, max_classes)
    conductor = group.ring.conductor
    if conductor % classes.exponent:
        raise BadParam("group", group.name, f"exponent does not divide {conductor}")

    with log_duration(LOGGER, f"Character table of {group.name}"):
        prime = dixon_prime(group.order, conductor)
        LOGGER.debug("Splitting %s over F_%d", group.name, prime)
        vectors = common_eigenvectors(ClassAlgebra(classes), FiniteField(prime))
        modular = normalize(vectors, classes, prime)
        values = lift_values(modular, classes, prime, conductor)
        characters = sorted(
            (ClassFunction(classes, row) for row in values),
            key=_sort_key,
        )
        for index, character in enumerate(characters):
            character.label = f"rho[{index}]"
        table = CharacterTable(classes, characters, prime)
        table.check()
    LOGGER.debug("%s has degrees %s", group.name, table.as_dict()["degrees"])
    return table


def induce_class_functions(
    characters: list[ClassFunction], classes: ConjugacyClasses
) -> list[ClassFunction]:
    """Return Ind_H^G of class functions of a subgroup H onto the classes of G.

    Ind theta(g) = |C_G(g)| / |H| * sum of theta over H cap class(g).
    """
    if not characters:
        return []
    lower = characters[0].classes
    group, subgroup = classes.group, lower.group
    landing = classes.classify(lower.reps)
    if np.any(landing < 0):
        raise BadParam("characters", subgroup.name, f"not a subgroup of {group.name}")
    conductor = characters[0].conductor
    weighted = stack_values(characters) * lower.sizes[None, :, None]
    incidence = np.zeros((lower.count, classes.count), dtype=np.int64)
    incidence[np.arange(lower.count), landing] = 1
    sums = np.einsum("nce,cg->nge", weighted, incidence)
    centralizer_orders = group.order // classes.sizes
    scaled = sums * centralizer_orders[None, :, None]
    canonical = reduce_mod_cyclotomic(scaled, conductor)
    if np.any(canonical % subgroup.order):
        what = f"induction from {subgroup.name}"
        raise InexactResult(what, "non-integral coefficients")
    return [
        ClassFunction.from_canonical(
            classes, rows, conductor, f"Ind_{subgroup.name}^{group.name} {theta.label}"
        )
        for rows, theta in zip(canonical // subgroup.order, characters)
    ]


@dataclass
class IrrepRecord:
    """An irreducible of GL2(o_ell) with its type and central character."""

    character: ClassFunction
    index: int
    dim: int
    kind: str
    central: int
    orbit: list[int] = field(default_factory=list)

    @property
    def regular(self) -> bool:
        """Return True for cuspidal, ss and sns irreducibles."""
        return self.kind != TYPE_NON_REGULAR

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {
            "index": self.index,
            KEY_DIM: self.dim,
            KEY_TYPE: self.kind,
            KEY_CENTRAL: self.central,
        }


def central_character_index(character: ClassFunction) -> int:
    """Return the index of the unit character the centre acts through."""
    for chi in unit_characters(character.group.ring):
        if has_central_character(character, chi.index):
            return chi.index
    raise NoSolution(f"central character of {character.label}")


def _type_by_dimension(dim: int, q: int) -> str:
    """Return the type of an irreducible of GL2(F_q) from its degree."""
    kinds = {1: TYPE_NON_REGULAR, q - 1: TYPE_CUSPIDAL, q: TYPE_SNS, q + 1: TYPE_SS}
    if dim not in kinds:
        raise BadParam("dim", dim, f"no irreducible of GL2(F_{q}) has this degree")
    return kinds[dim]


def irreducible_type(character: ClassFunction) -> tuple[str, list[int]]:
    """Return the type and the psi_x orbit of the restriction to K(ell - 1).

    The orbit keys are codes of matrices over the residue field.
    """
    ring = character.group.ring
    if ring.ell == 1:
        return _type_by_dimension(character.degree, ring.q), []
    orbit = sorted(kernel_constituents(character, ring.ell - 1))
    kinds = np.unique(classify_codes(matrix_ops(ring.truncate(1)), np.array(orbit)))
    if len(kinds) != 1:
        found = [MATRIX_TYPES[k] for k in kinds]
        raise InexactResult(f"type of {character.label}", found)
    return MATRIX_TYPES[int(kinds[0])], orbit


def classify_all(table: CharacterTable) -> list[IrrepRecord]:
    """Return the type and central character of every irreducible of GL2(o_ell)."""
    records = []
    with log_duration(LOGGER, f"Types of the irreducibles of {table.group.name}"):
        for index, character in enumerate(table.irreducibles):
            kind, orbit = irreducible_type(character)
            records.append(
                IrrepRecord(
                    character=character,
                    index=index,
                    dim=table.degrees[index],
                    kind=kind,
                    central=central_character_index(character),
                    orbit=orbit,
                )
            )
            character.metadata[KEY_TYPE] = kind
    counts = dict(Counter(record.kind for record in records))
    LOGGER.debug("Types of %s: %s", table.group.name, counts)
    return records


def type_summary(records: list[IrrepRecord]) -> dict[str, dict]:
    """Return {type: {"count": n, "dims": sorted degrees}}."""
    summary: dict[str, dict] = {}
    for kind in MATRIX_TYPES:
        dims = sorted({record.dim for record in records if record.kind == kind})
        count = sum(record.kind == kind for record in records)
        summary[kind] = {"count": count, "dims": dims}
    return summary
