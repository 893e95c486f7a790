"""Character tables of small groups and the checks that need every irreducible."""
from __future__ import annotations

import logging
from collections import Counter
from typing import Any, Final

import numpy as np
import voluptuous as vol

from whittaker.components.characters import (
    BorelPair,
    LinearCharacter,
    TensorZU,
    TripleZtU,
    UnitCharacter,
    gamma_character_indices,
    unit_characters,
)
from whittaker.components.constructions import (
    REGULAR_KINDS,
    injective_pairs,
    regular_count,
    regular_dimension,
)
from whittaker.components.group_core import GroupHandle, Subgroup, build_subgroup
from whittaker.components.group_core.const import KIND_B, KIND_P2, KIND_ZTU, KIND_ZU
from whittaker.components.hecke import (
    WedderburnSignature,
    chi_parity_of,
    dgg_module,
    module_signature,
    predicted_signature,
    sns_part,
)
from whittaker.components.hecke.predictions import MAX_PREDICTED_ELL
from whittaker.components.hecke.spectrum import blocks_as_list
from whittaker.components.mackey import (
    DEFAULT_FROBENIUS_TRIPLES,
    InducedModuleSpec,
    frobenius_crosscheck,
    induced_char,
    inflate,
    inner,
    mackey_hom,
    twist,
)
from whittaker.const import (
    DEFAULT_CHARTAB_MAX_CLASSES,
    DEFAULT_CHARTAB_MAX_ORDER,
    DEFAULT_SEED,
    TYPE_CUSPIDAL,
    TYPE_NON_REGULAR,
    TYPE_SNS,
    TYPE_SS,
)
from whittaker.exceptions import BadParam, InexactResult

from .const import (
    COMPONENT,
    CONFIG_MAX_CLASSES,
    CONFIG_MAX_ORDER,
    DESC_COMPONENT,
    DESC_MAX_CLASSES,
    DESC_MAX_ORDER,
    KEY_COUNT,
    KEY_DIM,
    KEY_MULT,
    KEY_TYPE,
)
from .table import (
    CharacterTable,
    IrrepRecord,
    central_character_index,
    character_table,
    classify_all,
    induce_class_functions,
    irreducible_type,
    type_summary,
)

LOGGER = logging.getLogger(__name__)

CONFIG_SCHEMA: Final = vol.Schema(
    {
        vol.Optional(COMPONENT, default={}, description=DESC_COMPONENT): vol.Schema(
            {
                vol.Optional(
                    CONFIG_MAX_ORDER,
                    default=DEFAULT_CHARTAB_MAX_ORDER,
                    description=DESC_MAX_ORDER,
                ): vol.All(vol.Coerce(int), vol.Range(min=1)),
                vol.Optional(
                    CONFIG_MAX_CLASSES,
                    default=DEFAULT_CHARTAB_MAX_CLASSES,
                    description=DESC_MAX_CLASSES,
                ): vol.All(vol.Coerce(int), vol.Range(min=1)),
            }
        )
    },
    extra=vol.ALLOW_EXTRA,
)

CHARTAB_DEFAULTS: Final = CONFIG_SCHEMA({})[COMPONENT]

# Mackey is compared with <Ind, Ind> on every n-th reciprocity triple
MACKEY_EVERY: Final = 25


def table_of(group, config: dict[str, Any] | None = None) -> CharacterTable:
    """Return the character table of a group within the configured budget."""
    config = {**CHARTAB_DEFAULTS, **(config or {})}
    return character_table(group, config[CONFIG_MAX_ORDER], config[CONFIG_MAX_CLASSES])


def table1_expected(q: int, ell: int) -> list[dict[str, Any]]:
    """Return the number and dimension of the regular irreducibles of each type."""
    return [
        {
            KEY_TYPE: kind,
            KEY_COUNT: regular_count(kind, q, ell),
            KEY_DIM: regular_dimension(kind, q, ell),
        }
        for kind in REGULAR_KINDS
    ]


def table1_report(records: list[IrrepRecord]) -> dict[str, Any]:
    """Compare the types found in a character table with the closed forms."""
    ring = records[0].character.group.ring
    summary = type_summary(records)
    rows = []
    for expected in table1_expected(ring.q, ring.ell):
        found = summary[expected[KEY_TYPE]]
        rows.append(
            {
                **expected,
                "computed_count": found["count"],
                "computed_dims": found["dims"],
                "match": found["count"] == expected[KEY_COUNT]
                and found["dims"] == [expected[KEY_DIM]],
            }
        )
    return {
        "rows": rows,
        "non_regular": summary[TYPE_NON_REGULAR]["count"],
        "paper_match": all(row["match"] for row in rows),
    }


def dgg_decompose(
    table: CharacterTable, records: list[IrrepRecord], t: int, chi_index: int
) -> list[tuple[IrrepRecord, int]]:
    """Return the constituents of V^t_chi with their multiplicities."""
    G = table.group
    if not 0 <= t <= G.ring.ell:
        raise BadParam("t", t, f"must be in [0, {G.ring.ell}]")
    character = induced_char(table.classes, dgg_module(G, chi_index, t))
    return [(records[b], m) for b, m in table.decompose(character).items()]


def regular_multiplicity_checks(
    records: list[IrrepRecord],
    decomposition: list[tuple[IrrepRecord, int]],
    t: int,
    chi_index: int,
) -> dict[str, bool]:
    """Check the cuspidal and ss multiplicities of V^t_chi.

    Cuspidals with central character chi occur once in the Gelfand-Graev module
    and not at all for t < ell. The ss ones occur once for t = ell and twice below.
    """
    ell = records[0].character.group.ring.ell
    found = {record.index: m for record, m in decomposition}
    own = [record for record in records if record.central == chi_index]
    cuspidal = 1 if t == ell else 0
    split = 1 if t == ell else 2
    return {
        "cuspidal": all(
            found.get(r.index, 0) == cuspidal for r in own if r.kind == TYPE_CUSPIDAL
        ),
        "ss": all(found.get(r.index, 0) == split for r in own if r.kind == TYPE_SS),
    }


def regular_counts(q: int, ell: int) -> dict[str, int]:
    """Return n_ss and n_sns, constituents of V^t_chi for t < ell with multiplicity."""
    return {TYPE_SS: (q - 1) ** 2 * q ** (ell - 2), TYPE_SNS: q ** (ell - 2) * (q - 1)}


def dgg_report(
    table: CharacterTable, records: list[IrrepRecord], t: int, chi_index: int
) -> dict[str, Any]:
    """Return the decomposition of V^t_chi with every check that applies."""
    G = table.group
    q, ell = G.ring.q, G.ring.ell
    decomposition = dgg_decompose(table, records, t, chi_index)
    multiplicities = Counter(m for _, m in decomposition)
    checks = regular_multiplicity_checks(records, decomposition, t, chi_index)
    if ell <= MAX_PREDICTED_ELL:
        predicted = predicted_signature(q, ell, t, chi_parity_of(G, chi_index))
        checks["signature"] = dict(sorted(multiplicities.items())) == predicted
    counts: dict[str, int] = {}
    if 2 <= ell and t < ell:
        for kind, expected in regular_counts(q, ell).items():
            counts[kind] = sum(m for record, m in decomposition if record.kind == kind)
            checks[f"n_{kind}"] = counts[kind] == expected
        if ell <= MAX_PREDICTED_ELL:
            sns = Counter(m for record, m in decomposition if record.kind == TYPE_SNS)
            checks["sns_table"] = dict(sorted(sns.items())) == sns_part(q, ell, t)
    if not all(checks.values()):
        LOGGER.error("V^%d_chi[%d] over %s fails %s", t, chi_index, G.name, checks)
    return {
        "t": t,
        "chi": chi_index,
        "constituents": [
            {
                "index": record.index,
                KEY_TYPE: record.kind,
                KEY_DIM: record.dim,
                KEY_MULT: m,
            }
            for record, m in sorted(decomposition, key=lambda item: item[0].index)
        ],
        "dimension": sum(record.dim * m for record, m in decomposition),
        "max_mult": max(multiplicities, default=0),
        "multiplicities": blocks_as_list(multiplicities),
        "counts": counts,
        "checks": checks,
        "paper_match": all(checks.values()),
    }


def regular_counts_mackey(G: GroupHandle, t: int, chi_index: int) -> dict[str, Any]:
    """Return n_ss and n_sns of V^t_chi without a character table.

    n_ss is summed over the principal series Ind_B (chi1, chi2) with chi1 chi2 = chi
    by the Mackey formula. n_sns follows from the dimension of V^t_chi once the
    non-regular part (dimension of V^t one level down) and the ss part are removed.
    """
    ring = G.ring
    q, ell = ring.q, ring.ell
    if ell < 2 or not 0 <= t < ell:
        raise BadParam("t", t, f"needs ell >= 2 and t in [0, {ell - 1}]")
    module = dgg_module(G, chi_index, t)
    borel = build_subgroup(G, KIND_B)
    n_ss = 0
    for first, second in injective_pairs(ring):
        central = UnitCharacter(ring, first) * UnitCharacter(ring, second)
        if central.index != chi_index:
            continue
        pair = BorelPair(borel, first, second)
        n_ss += mackey_hom(module, InducedModuleSpec(G, pair))
    nonregular = q ** (2 * ell - 4) * (q * q - 1)
    ss_dim = regular_dimension(TYPE_SS, q, ell)
    remainder = module.dimension - nonregular - n_ss * ss_dim
    sns_dim = regular_dimension(TYPE_SNS, q, ell)
    if remainder % sns_dim:
        raise InexactResult("sns part of V^t_chi", remainder)
    expected = regular_counts(q, ell)
    counts = {TYPE_SS: n_ss, TYPE_SNS: remainder // sns_dim}
    return {
        "t": t,
        "chi": chi_index,
        "counts": counts,
        "expected": expected,
        "sns_method": "dimension",
        "paper_match": counts == expected,
    }


def strong_gelfand(
    table: CharacterTable, sub_table: CharacterTable
) -> tuple[int, list[tuple[int, int, int]]]:
    """Return max <Ind theta, rho> over Irr(H) x Irr(G) and every pair above 1."""
    induced = induce_class_functions(sub_table.irreducibles, table.classes)
    multiplicities = table.multiplicities(induced)
    index = table.group.order // sub_table.group.order
    if not np.array_equal(
        multiplicities @ np.array(table.degrees), index * np.array(sub_table.degrees)
    ):
        what = f"induction from {sub_table.group.name}"
        raise InexactResult(what, "dimensions do not add up")
    witnesses = [
        (int(a), int(b), int(multiplicities[a, b]))
        for a, b in zip(*np.nonzero(multiplicities > 1))
    ]
    return int(multiplicities.max()), witnesses


def strong_gelfand_report(
    table: CharacterTable, kind: str = KIND_B, config: dict[str, Any] | None = None
) -> dict[str, Any]:
    """Return the strong Gelfand check for (G, B) or the mirabolic (G, P2)."""
    if kind not in (KIND_B, KIND_P2):
        raise BadParam("kind", kind, f"must be {KIND_B} or {KIND_P2}")
    subgroup = build_subgroup(table.group, kind)
    sub_table = table_of(subgroup, config)
    maximum, witnesses = strong_gelfand(table, sub_table)
    return {
        "subgroup": subgroup.name,
        "irreducibles": [sub_table.count, table.count],
        "max": maximum,
        "witnesses": witnesses,
        "paper_match": maximum == 1,
    }


def w_module_check(
    G: GroupHandle,
    t: int,
    chi_index: int,
    prime_index: int,
    config: dict[str, Any] | None = None,
    table: CharacterTable | None = None,
) -> tuple[bool, WedderburnSignature]:
    """Return True if Ind from Z^t U of (chi, chi', psi_t) is multiplicity free.

    With a character table the decomposition is checked as well.
    """
    ztu = build_subgroup(G, KIND_ZTU, t=t)
    spec = InducedModuleSpec(G, TripleZtU(ztu, chi_index, prime_index, t))
    signature = module_signature(spec, config)[1]
    free = set(signature.blocks) == {1}
    if table is not None:
        found = table.decompose(induced_char(table.classes, spec))
        if max(found.values()) > 1 or len(found) != signature.block_count:
            LOGGER.error(
                "Decomposition of %s disagrees with %s", spec.label, signature.blocks
            )
            free = False
    return free, signature


def w_module_sweep(
    G: GroupHandle,
    t: int,
    config: dict[str, Any] | None = None,
    chis: list[int] | None = None,
    table: CharacterTable | None = None,
) -> dict[str, Any]:
    """Run w_module_check over chi and every restriction chi' to 1 + pi^t o."""
    ring = G.ring
    if chis is None:
        chis = [chi.index for chi in unit_characters(ring)]
    results = []
    for chi_index in chis:
        for prime_index in gamma_character_indices(ring, t):
            free, signature = w_module_check(
                G, t, chi_index, prime_index, config, table
            )
            results.append(
                {
                    "chi": chi_index,
                    "chi_prime": prime_index,
                    "dim": signature.dim,
                    "free": free,
                }
            )
    return {"t": t, "results": results, "paper_match": all(r["free"] for r in results)}


def check_twisted_inflations(
    records: list[IrrepRecord], lower_table: CharacterTable
) -> dict[str, Any]:
    """Check that every non-regular irreducible is (delta o det) infl(sigma).

    sigma runs over the irreducibles one level down and delta over the characters
    of the units.
    """
    classes = records[0].character.classes
    G = classes.group
    if lower_table.group.ring.ell != G.ring.ell - 1:
        raise BadParam("lower_table", lower_table.group.name, "one level down expected")
    det = G.ops.det(classes.reps)
    candidates: dict[bytes, tuple[int, int]] = {}
    for sigma_index, sigma in enumerate(lower_table.irreducibles):
        lifted = inflate(sigma, classes)
        for delta in unit_characters(G.ring):
            twisted = twist(lifted, delta.exponents(det))
            key = twisted.canonical.tobytes()
            candidates.setdefault(key, (sigma_index, delta.index))
    nonregular = [record for record in records if record.kind == TYPE_NON_REGULAR]
    matches = {
        record.index: candidates.get(record.character.canonical.tobytes())
        for record in nonregular
    }
    missing = [index for index, match in matches.items() if match is None]
    return {
        "non_regular": len(nonregular),
        "matches": {index: list(match) for index, match in matches.items() if match},
        "missing": missing,
        "paper_match": not missing,
    }


def _random_character(
    rng: np.random.Generator, G: GroupHandle, subgroups: dict[Any, Subgroup]
) -> LinearCharacter:
    ring = G.ring
    count = len(unit_characters(ring))
    chi, other = (int(v) for v in rng.integers(count, size=2))
    t = int(rng.integers(ring.ell + 1))
    family = int(rng.integers(3))
    if family == 0:
        return BorelPair(subgroups[KIND_B], chi, other)
    if family == 1:
        return TensorZU(subgroups[KIND_ZU], chi, t)
    primes = gamma_character_indices(ring, t)
    return TripleZtU(subgroups[t], chi, primes[int(rng.integers(len(primes)))], t)


def frobenius_sweep(
    table: CharacterTable,
    triples: int = DEFAULT_FROBENIUS_TRIPLES,
    seed: int = DEFAULT_SEED,
) -> dict[str, Any]:
    """Check Frobenius reciprocity on random (H, phi, rho), Mackey on some of them."""
    G = table.group
    rng = np.random.default_rng(seed)
    subgroups: dict[Any, Subgroup] = {
        KIND_B: build_subgroup(G, KIND_B),
        KIND_ZU: build_subgroup(G, KIND_ZU),
    }
    for t in range(G.ring.ell + 1):
        subgroups[t] = build_subgroup(G, KIND_ZTU, t=t)
    frobenius_failures = 0
    mackey_failures = 0
    for k in range(triples):
        spec = InducedModuleSpec(G, _random_character(rng, G, subgroups))
        rho = table.irreducibles[int(rng.integers(table.count))]
        frobenius_failures += not frobenius_crosscheck(table.classes, spec, rho)
        if k % MACKEY_EVERY == 0:
            induced = induced_char(table.classes, spec)
            if mackey_hom(spec, spec) != inner(induced, induced):
                LOGGER.error("Mackey and <Ind, Ind> disagree for %s", spec.label)
                mackey_failures += 1
    return {
        "triples": triples,
        "frobenius_failures": frobenius_failures,
        "mackey_checked": (triples + MACKEY_EVERY - 1) // MACKEY_EVERY,
        "mackey_failures": mackey_failures,
        "paper_match": not frobenius_failures and not mackey_failures,
    }


__all__ = [
    "CHARTAB_DEFAULTS",
    "CONFIG_SCHEMA",
    "CharacterTable",
    "IrrepRecord",
    "central_character_index",
    "character_table",
    "check_twisted_inflations",
    "classify_all",
    "regular_counts_mackey",
    "dgg_decompose",
    "dgg_report",
    "frobenius_sweep",
    "induce_class_functions",
    "irreducible_type",
    "regular_counts",
    "regular_multiplicity_checks",
    "strong_gelfand",
    "strong_gelfand_report",
    "table1_expected",
    "table1_report",
    "table_of",
    "type_summary",
    "w_module_check",
    "w_module_sweep",
]
