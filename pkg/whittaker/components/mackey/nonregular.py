"""Non-regular parts of induced characters and their restrictions to K(i)."""
from __future__ import annotations

import logging

import numpy as np

from whittaker.components.characters import TensorZU, UnitCharacter, lambda_of
from whittaker.components.group_core import (
    ConjugacyClasses,
    GroupHandle,
    build_subgroup,
    enumerate_gl2,
)
from whittaker.components.group_core.const import KIND_ZU
from whittaker.components.group_core.subgroups import (
    congruence_elements,
    psi_matrix_exponents,
)
from whittaker.components.local_ring import units
from whittaker.components.local_ring.multiplicative import unit_group
from whittaker.exceptions import BadParam, InexactResult
from whittaker.helpers.cyclotomic import reduce_mod_cyclotomic

from .class_function import ClassFunction
from .induction import InducedModuleSpec, induced_char

LOGGER = logging.getLogger(__name__)


def _exact_quotient(
    numerators: np.ndarray, conductor: int, divisor: int, what: str
) -> np.ndarray:
    canonical = reduce_mod_cyclotomic(numerators, conductor)
    if np.any(canonical % divisor):
        raise InexactResult(what, "non-integral coefficients")
    return canonical // divisor


def scalar_trace_kernel(G: GroupHandle) -> np.ndarray:
    """Return {I + pi^(ell-1) y : tr(y) = 0 mod pi}."""
    ring, ops = G.ring, G.ops
    r = np.arange(ring.p)
    a, b, c = (x.ravel() for x in np.meshgrid(r, r, r, indexing="ij"))
    shift = ring.ell - 1
    add, neg = ring.tables.add, ring.tables.neg
    a_high = ops.uniformizer_power(shift, a)
    return ops.encode(
        add[1, a_high],
        ops.uniformizer_power(shift, b),
        ops.uniformizer_power(shift, c),
        add[1, neg[a_high]],
    )


def nonregular_part(character: ClassFunction) -> ClassFunction:
    """Return the character of the sum of the non-regular constituents.

    The projection onto the psi_x-isotypic parts of K(ell-1) with x scalar is the
    average over the elements I + pi^(ell-1) y of K(ell-1) with tr(y) = 0.
    """
    G = character.group
    if G.ring.ell < 2:
        raise BadParam("ell", G.ring.ell, "needs ell >= 2")
    kernel = scalar_trace_kernel(G)
    reps = character.classes.reps
    class_index = character.classes.classify(G.ops.mul(reps[:, None], kernel[None, :]))
    sums = character.values[class_index].sum(axis=1)
    values = _exact_quotient(
        sums, character.conductor, len(kernel), f"non-regular part of {character.label}"
    )
    return ClassFunction.from_canonical(
        character.classes, values, character.conductor, f"nonreg({character.label})"
    )


def inflate(lower: ClassFunction, classes: ConjugacyClasses) -> ClassFunction:
    """Return the inflation of a class function of G_(ell-k) to the classes of G_ell."""
    upper_group = classes.group
    level = lower.group.ring.ell
    projected = upper_group.ops.project(classes.reps, level)
    lower_index = lower.classes.classify(projected)
    conductor = upper_group.ring.conductor
    step = conductor // lower.conductor
    values = np.zeros((classes.count, conductor), dtype=np.int64)
    values[:, ::step] = lower.values[lower_index]
    return ClassFunction(classes, values, f"infl({lower.label})")


def twist(
    character: ClassFunction, exponents: np.ndarray, label: str = ""
) -> ClassFunction:
    """Return the product of character with the linear character zeta_E^exponents."""
    conductor = character.conductor
    offsets = np.asarray(exponents)[:, None]
    columns = (np.arange(conductor)[None, :] - offsets) % conductor
    values = np.take_along_axis(character.values, columns, axis=1)
    return ClassFunction(character.classes, values, label or character.label)


def check_nonregular_identity(
    classes: ConjugacyClasses, lower_classes: ConjugacyClasses, chi_index: int, t: int
) -> list[tuple[int, int]]:
    """Return the pairs (chi_bar, delta) that twist an inflation onto nonreg(V^t_chi).

    A pair matches when nonreg(V^t_chi) = (delta o det) infl(V^t_chi_bar).

    chi_bar runs over the characters of the units of o_(ell-1) and delta over those
    of o_ell. The identity holds when the returned list is not empty.
    """
    G = classes.group
    ring = G.ring
    if ring.ell < 2:
        raise BadParam("ell", ring.ell, "needs ell >= 2")
    if not 0 <= t <= ring.ell - 1:
        raise BadParam("t", t, f"must be in [0, {ring.ell - 1}]")
    lower_G = lower_classes.group
    lower_ring = lower_G.ring
    if lower_ring.ell != ring.ell - 1:
        expected = f"classes over o_{ring.ell - 1} expected"
        raise BadParam("lower_classes", lower_G.name, expected)

    inducing = TensorZU(build_subgroup(G, KIND_ZU), chi_index, t)
    upper = induced_char(classes, InducedModuleSpec(G, inducing))
    part = nonregular_part(upper)
    lower_zu = build_subgroup(lower_G, KIND_ZU)

    conductor = ring.conductor
    step = conductor // lower_ring.conductor
    unit_reps = units(ring)
    chi = UnitCharacter(ring, chi_index)
    chi_values = chi.exponents(unit_reps)
    unit_count = unit_group(ring).character_count
    lower_count = unit_group(lower_ring).character_count
    det_classes = G.ops.det(classes.reps)

    matches = []
    for lower_index in range(lower_count):
        # Central characters: chi(x) = delta(x)^2 chi_bar(x mod pi^(ell-1))
        lower_chi = UnitCharacter(lower_ring, lower_index)
        bar = lower_chi.exponents(unit_reps % lower_ring.size)
        target = (chi_values - bar * step) % conductor
        deltas = [
            delta
            for delta in range(unit_count)
            if np.array_equal(
                2 * UnitCharacter(ring, delta).exponents(unit_reps) % conductor, target
            )
        ]
        if not deltas:
            continue
        inflated = inflate(
            induced_char(
                lower_classes,
                InducedModuleSpec(lower_G, TensorZU(lower_zu, lower_index, t)),
            ),
            classes,
        )
        for delta in deltas:
            twisted = twist(inflated, UnitCharacter(ring, delta).exponents(det_classes))
            if twisted == part:
                matches.append((lower_index, delta))
    LOGGER.debug(
        "Non-regular part of V^%d_chi[%d] matches %d twisted inflations",
        t,
        chi_index,
        len(matches),
    )
    return matches


def kernel_constituents(character: ClassFunction, i: int) -> dict[int, int]:
    """Return {x: multiplicity of psi_x} for the restriction to the abelian group K(i).

    Keys are codes of matrices over o_(ell - i).
    """
    G = character.group
    ring, ops = G.ring, G.ops
    if not 1 <= i <= ring.ell or 2 * i < ring.ell:
        bounds = f"K(i) is abelian for {ring.ell} <= 2i <= {2 * ring.ell}"
        raise BadParam("i", i, bounds)
    kernel = congruence_elements(ring, ops, i)
    rows = character.at(kernel)
    conductor = character.conductor
    lower_ring = ring.truncate(ring.ell - i) if i < ring.ell else None
    lower_size = lower_ring.size if lower_ring else 1
    scale = conductor // ring.size
    columns = np.arange(conductor)
    constituents: dict[int, int] = {}
    total = 0
    for x_code in range(lower_size**4):
        entries = [(x_code // lower_size**power) % lower_size for power in (3, 2, 1, 0)]
        x_matrix = int(ops.encode(*entries))
        exponents = psi_matrix_exponents(ring, ops, x_matrix, kernel) * scale
        # multiply by conj(psi_x(k)) and sum over k
        shifted = np.take_along_axis(
            rows, (columns[None, :] + exponents[:, None]) % conductor, axis=1
        )
        what = f"multiplicity of psi_x on K({i})"
        summed = shifted.sum(axis=0)
        multiplicity = _exact_quotient(summed, conductor, len(kernel), what)
        if np.any(multiplicity[1:]) or multiplicity[0] < 0:
            raise InexactResult(what, multiplicity.tolist())
        if multiplicity[0]:
            constituents[x_code] = int(multiplicity[0])
            total += int(multiplicity[0])
    if total != character.degree:
        raise InexactResult(f"restriction of {character.label} to K({i})", total)
    return constituents


def check_support_shape(character: ClassFunction, chi_index: int, t: int) -> bool:
    """Return True if every psi_X in the restriction to K(ell2) has the DGG shape.

    X must be conjugate to (a b; pi^(ell-t) lambda-a) over o_ell1 where lambda is the
    trace determined by the central character.
    """
    ring = character.group.ring
    if ring.ell1 < 1:
        raise BadParam("ell", ring.ell, "needs ell >= 2")
    lower_ring = ring.truncate(ring.ell1)
    lower_G = enumerate_gl2(lower_ring)
    lam = lambda_of(UnitCharacter(ring, chi_index)).rep % lower_ring.size
    corner = 0
    if ring.ell - t < ring.ell1:
        corner = ring.p ** (ring.ell - t) % lower_ring.size
    r = np.arange(lower_ring.size)
    a, b = (x.ravel() for x in np.meshgrid(r, r, indexing="ij"))
    tables = lower_ring.tables
    shapes = lower_G.ops.encode(a, b, corner, tables.add[lam, tables.neg[a]])
    orbit = np.unique(lower_G.ops.conj(lower_G.elements[:, None], shapes[None, :]))
    found = np.array(sorted(kernel_constituents(character, ring.ell2)), dtype=np.int64)
    outside = np.setdiff1d(found, orbit)
    if len(outside):
        LOGGER.error(
            "%d constituent(s) of %s on K(%d) lie outside the DGG shape",
            len(outside),
            character.label,
            ring.ell2,
        )
    return not len(outside)
