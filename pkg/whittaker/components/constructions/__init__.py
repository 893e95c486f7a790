"""Regular irreducible characters of GL2(o_ell) built as induced characters."""
from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator

import numpy as np

from whittaker.components.characters import (
    BorelPair,
    NamedExtension,
    PsiX,
    UnitCharacter,
    delta_extensions,
    enumerate_extensions,
    is_injective_char,
    psi_a_double_primes,
)
from whittaker.components.group_core import (
    ConjugacyClasses,
    GroupHandle,
    Mat2,
    build_subgroup,
    classify_matrix,
    product,
)
from whittaker.components.group_core.const import KIND_B, KIND_K, KIND_SA, KIND_UA
from whittaker.components.local_ring import units
from whittaker.components.local_ring.multiplicative import unit_group
from whittaker.components.mackey import (
    ClassFunction,
    InducedModuleSpec,
    double_coset_data,
    induced_char,
    mackey_hom,
)
from whittaker.const import TYPE_NON_REGULAR, TYPE_SNS, TYPE_SS
from whittaker.exceptions import (
    BadParam,
    BadShape,
    InexactResult,
    NotInjectivePair,
    NotRegular,
)
from whittaker.helpers.cyclotomic import reduce_mod_cyclotomic

from .const import COMPONENT, REGULAR_KINDS, regular_count, regular_dimension

LOGGER = logging.getLogger(__name__)


def _check_irreducible(character: ClassFunction, kind: str) -> ClassFunction:
    ring = character.group.ring
    expected = regular_dimension(kind, ring.q, ring.ell)
    if character.degree != expected:
        raise InexactResult(f"dimension of {character.label}", character.degree)
    if character.norm() != 1:
        raise InexactResult(f"norm of {character.label}", character.norm())
    character.metadata["type"] = kind
    return character


def ss_from_borel(classes: ConjugacyClasses, first: int, second: int) -> ClassFunction:
    """Return Ind_B^G (first, second) for a pair with injective quotient."""
    G = classes.group
    quotient = UnitCharacter(G.ring, first) * UnitCharacter(G.ring, second).inverse()
    if not is_injective_char(quotient):
        raise NotInjectivePair(first, second)
    borel = build_subgroup(G, KIND_B)
    spec = InducedModuleSpec(G, BorelPair(borel, first, second))
    character = induced_char(classes, spec)
    character.metadata["pair"] = [first, second]
    return _check_irreducible(character, TYPE_SS)


def sns_from_ncA(  # pylint: disable=invalid-name
    classes: ConjugacyClasses, A: Mat2, ext: int = 0, mu_ext: int = 0
) -> ClassFunction:
    """Return Ind_{N C(A)}^G psi_A'' for A = (alpha 1; pi^j beta alpha), ell odd."""
    G = classes.group
    ring = G.ring
    if ring.ell % 2 == 0:
        raise BadParam("ell", ring.ell, "sns construction through N C(A) needs ell odd")
    if ring.ell == 1:
        raise BadParam("ell", ring.ell, "needs ell >= 3")
    extensions = psi_a_double_primes(G, A, mu_ext)
    if not 0 <= ext < len(extensions):
        raise BadParam("ext", ext, f"must be in [0, {len(extensions)})")
    character = induced_char(classes, InducedModuleSpec(G, extensions[ext]))
    character.metadata["A"] = str(A)
    character.metadata["ext"] = ext
    return _check_irreducible(character, TYPE_SNS)


def _lift(G: GroupHandle, x: Mat2 | list) -> Mat2:
    if not isinstance(x, Mat2):
        return Mat2.of(G.ring, x)
    if x.ring != G.ring:
        return Mat2.of(G.ring, x.rows())
    return x


def regular_even_from_SA(  # pylint: disable=invalid-name
    classes: ConjugacyClasses, x: Mat2 | list, ext: int = 0
) -> ClassFunction:
    """Return Ind_{S_x}^G of extension ext of psi_x from K(ell/2), ell even."""
    G = classes.group
    ring = G.ring
    if ring.ell % 2:
        raise BadParam("ell", ring.ell, "S_x construction needs ell even")
    x = _lift(G, x)
    kind = classify_matrix(x)
    if kind == TYPE_NON_REGULAR:
        raise NotRegular(str(x))
    half = ring.ell // 2
    kernel = build_subgroup(G, KIND_K, i=half)
    inertia = build_subgroup(G, KIND_SA, A=x)
    base = PsiX(kernel, x, half)
    family = enumerate_extensions(base, inertia)
    if not 0 <= ext < family.count:
        raise BadParam("ext", ext, f"must be in [0, {family.count})")
    extension = NamedExtension(inertia, family.exponents(ext), base, ext)
    character = induced_char(classes, InducedModuleSpec(G, extension))
    character.metadata["x"] = str(x)
    character.metadata["ext"] = ext
    return _check_irreducible(character, kind)


def check_mult_free_restriction(
    G: GroupHandle, t: int, i: int, a: int = 0, d: int = 1, ext: int = 0
) -> int:
    """Return <Ind phi, Ind phi> from U_A K(ell2) to U_A K(ell1).

    A = (a b; pi^(ell-t) a + pi^i d) over o_ell1 with b = 1 for t < ell and b = pi
    for t = ell, and phi is extension ext of psi_A to U_A K(ell2). The value equals
    q when the induced module is multiplicity free. InexactResult is raised when it
    falls outside [q, q^2].
    """
    ring = G.ring
    ell1, ell2 = ring.ell1, ring.ell2
    if ring.ell % 2 == 0 or ring.ell < 3:
        raise BadParam("ell", ring.ell, "needs ell odd and at least 3")
    if not ell2 <= t <= ring.ell:
        raise BadParam("t", t, f"must be in [{ell2}, {ring.ell}]")
    if not 1 <= i <= ell1:
        raise BadParam("i", i, f"must be in [1, {ell1}]")
    tables = ring.tables
    b = 1 if t < ring.ell else ring.p
    corner = ring.p ** (ring.ell - t) % ring.size
    lower_right = tables.add[a % ring.size, (ring.p**i * d) % ring.size]
    A = Mat2.of(ring, [[a, b], [corner, int(lower_right)]])
    if classify_matrix(A) != TYPE_SNS:
        raise BadShape(str(A), "split non-semisimple modulo pi")

    upper = build_subgroup(G, KIND_UA, A=A)
    small = product(upper, build_subgroup(G, KIND_K, i=ell2))
    large = product(upper, build_subgroup(G, KIND_K, i=ell1))
    base = PsiX(build_subgroup(G, KIND_K, i=ell2), A, ell2)
    family = enumerate_extensions(base, small)
    if not 0 <= ext < family.count:
        raise BadParam("ext", ext, f"must be in [0, {family.count})")
    phi = NamedExtension(small, family.exponents(ext), base, ext)
    spec = InducedModuleSpec(large, phi)
    data = double_coset_data(large, small, small)
    value = mackey_hom(spec, spec, data.cosets)
    q = ring.q
    if not q <= value <= q * q:
        raise InexactResult(f"intertwiner for {A} outside [{q}, {q * q}]", value)
    LOGGER.debug(
        "Ind from %s to %s of %s: %d double cosets, intertwiner %d",
        small.name,
        large.name,
        phi.label,
        data.count,
        value,
    )
    return value


def distinct_characters(characters: Iterable[ClassFunction]) -> list[ClassFunction]:
    """Return the characters with pairwise different values, first occurrence kept."""
    seen: dict[bytes, ClassFunction] = {}
    for character in characters:
        key = np.ascontiguousarray(character.canonical).tobytes()
        seen.setdefault(key, character)
    return list(seen.values())


def injective_pairs(ring) -> Iterator[tuple[int, int]]:
    """Yield (chi1, chi2) with chi1 / chi2 injective and chi1 <= chi2."""
    count = unit_group(ring).character_count
    for first in range(count):
        for second in range(first, count):
            inverse = UnitCharacter(ring, second).inverse()
            quotient = UnitCharacter(ring, first) * inverse
            if is_injective_char(quotient):
                yield first, second


def ss_characters(classes: ConjugacyClasses) -> list[ClassFunction]:
    """Return every split semisimple regular irreducible, one per unordered pair."""
    result = distinct_characters(
        ss_from_borel(classes, first, second)
        for first, second in injective_pairs(classes.group.ring)
    )
    LOGGER.debug("Found %d ss characters of %s", len(result), classes.group.name)
    return result


def sns_shapes(ring) -> Iterator[Mat2]:
    """Yield A = (alpha 1; pi^j beta alpha) over o_ell1, beta a unit or j = ell1."""
    ell1 = ring.ell1
    base = ring.truncate(ell1)
    for j in range(1, ell1 + 1):
        betas = units(ring.truncate(ell1 - j)) if j < ell1 else np.array([0])
        for alpha in range(base.size):
            for beta in betas:
                lower = (ring.p**j * int(beta)) % base.size
                yield Mat2.of(ring, [[alpha, 1], [lower, alpha]])


def sns_characters(
    classes: ConjugacyClasses, central_index: int | None = None
) -> list[ClassFunction]:
    """Return every sns irreducible reached through N C(A), ell odd.

    With central_index only characters with that central character are kept.
    """
    G = classes.group
    ring = G.ring
    found = []
    for A in sns_shapes(ring):
        for mu_ext in range(len(delta_extensions(ring, A.a.rep))):
            extensions = psi_a_double_primes(G, A, mu_ext)
            for ext in range(len(extensions)):
                character = sns_from_ncA(classes, A, ext, mu_ext)
                if central_index is None or has_central_character(
                    character, central_index
                ):
                    found.append(character)
    result = distinct_characters(found)
    LOGGER.debug("Found %d sns characters of %s", len(result), G.name)
    return result


def has_central_character(character: ClassFunction, chi_index: int) -> bool:
    """Return True if the centre acts on character through chi_index."""
    G = character.group
    reps = units(G.ring)
    class_index = character.classes.classify(G.ops.encode(reps, 0, 0, reps))
    exponents = UnitCharacter(G.ring, chi_index).exponents(reps)
    degree = character.degree
    expected = np.zeros((len(class_index), character.conductor), dtype=np.int64)
    expected[np.arange(len(class_index)), exponents] = degree
    observed = character.canonical[class_index]
    expected = reduce_mod_cyclotomic(expected, character.conductor)
    return bool(np.array_equal(observed, expected))


__all__ = [
    "COMPONENT",
    "REGULAR_KINDS",
    "check_mult_free_restriction",
    "distinct_characters",
    "has_central_character",
    "injective_pairs",
    "regular_count",
    "regular_dimension",
    "regular_even_from_SA",
    "sns_characters",
    "sns_from_ncA",
    "sns_shapes",
    "ss_characters",
    "ss_from_borel",
]
