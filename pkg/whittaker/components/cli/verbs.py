"""One function per command, each returning the result payload of a report."""
from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Final

from whittaker.components.characters import count_C, is_injective_char, unit_characters
from whittaker.components.chartab import (
    CharacterTable,
    IrrepRecord,
    central_character_index,
    check_twisted_inflations,
    classify_all,
    regular_counts_mackey,
    dgg_report,
    frobenius_sweep,
    strong_gelfand_report,
    table1_report,
    table_of,
    w_module_sweep,
)
from whittaker.components.chartab.const import COMPONENT as CHARTAB
from whittaker.components.constructions import (
    regular_count,
    regular_dimension,
    sns_characters,
    ss_characters,
)
from whittaker.components.group_core import (
    ConjugacyClasses,
    GroupHandle,
    conjugacy_classes,
    enumerate_gl2,
    gl2_order,
)
from whittaker.components.group_core.const import KIND_B, KIND_P2
from whittaker.components.hecke import (
    a_report,
    chi_parity_of,
    dgg_module,
    dgg_signature,
    endo_report,
    parity_representatives,
    predicted_signature,
    predicted_total,
    sns_table_report,
    total_signature,
)
from whittaker.components.hecke.const import COMPONENT as HECKE
from whittaker.components.hecke.predictions import MAX_PREDICTED_ELL
from whittaker.components.hecke.spectrum import blocks_as_list
from whittaker.components.local_ring import RingSpec, make_ring
from whittaker.components.local_ring.multiplicative import unit_group
from whittaker.components.mackey import check_nonregular_identity, mackey_hom
from whittaker.const import TYPE_SNS, TYPE_SS
from whittaker.exceptions import BadParam, BudgetExceeded

from .const import (
    DEFAULT_SWEEP_MAX_ELL,
    DEFAULT_FORMAT,
    PAPER_MATCH,
    VERB_A_BOUND,
    VERB_CHECK,
    VERB_CONSTRUCT_SNS,
    VERB_CONSTRUCT_SS,
    VERB_COR16,
    VERB_DGG,
    VERB_DGG_HOM,
    VERB_ENDO,
    VERB_GG_FREE,
    VERB_HOM,
    VERB_RING_INFO,
    VERB_SNS_TABLE,
    VERB_STRONG_GELFAND,
    VERB_TABLE1,
    VERB_W_CHECK,
)

LOGGER = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """Everything one command needs, after validation."""

    verb: str
    p: int
    ell: int
    flavor: str
    t: int | None = None
    t2: int | None = None
    chi: int | None = None
    max_ell: int | None = None
    seed: int = 0
    budget_elements: int = 0
    output_format: str = DEFAULT_FORMAT
    config: dict[str, Any] = field(default_factory=dict, repr=False)

    @cached_property
    def ring(self) -> RingSpec:
        """Return the ring."""
        return make_ring(self.p, self.ell, self.flavor)

    @cached_property
    def group(self) -> GroupHandle:
        """Return GL2 over the ring."""
        return enumerate_gl2(self.ring, self.budget_elements)

    def group_at(self, ell: int) -> GroupHandle:
        """Return GL2 over the ring of length ell with the same residue field."""
        if ell == self.ell:
            return self.group
        return enumerate_gl2(make_ring(self.p, ell, self.flavor), self.budget_elements)

    @property
    def hecke(self) -> dict[str, Any]:
        """Return the hecke section of the configuration."""
        return self.config.get(HECKE, {})

    @property
    def chartab(self) -> dict[str, Any]:
        """Return the chartab section of the configuration."""
        return self.config.get(CHARTAB, {})

    def validate(self) -> None:
        """Raise BadParam unless the verb arguments fit the ring."""
        for name, value in (("t", self.t), ("t2", self.t2)):
            if value is not None and not 0 <= value <= self.ell:
                raise BadParam(name, value, f"must be in [0, {self.ell}]")
        count = unit_group(self.ring).character_count
        if self.chi is not None and not 0 <= self.chi < count:
            raise BadParam("chi", self.chi, f"must be in [0, {count})")
        if self.max_ell is not None and self.max_ell < 2:
            raise BadParam("max_ell", self.max_ell, "must be at least 2")

    def echo(self) -> dict[str, Any]:
        """Return the verb arguments for the report."""
        return {"t": self.t, "t2": self.t2, "chi": self.chi, "max_ell": self.max_ell}

    def ring_summary(self) -> dict[str, Any]:
        """Return the ring block of the report."""
        ring = self.ring
        return {
            "name": str(ring),
            "p": ring.p,
            "ell": ring.ell,
            "q": ring.q,
            "flavor": ring.flavor,
        }

    def ts(self, below_ell: bool = False) -> list[int]:
        """Return [t] or every level, without ell itself when below_ell is set."""
        top = self.ell - 1 if below_ell else self.ell
        if self.t is not None:
            if self.t > top:
                raise BadParam("t", self.t, f"must be in [0, {top}]")
            return [self.t]
        return list(range(top + 1))

    def chis(self) -> list[int]:
        """Return [chi] or every unit character."""
        if self.chi is not None:
            return [self.chi]
        return [chi.index for chi in unit_characters(self.ring)]

    def parity_chis(self) -> list[int]:
        """Return [chi] or one unit character of each parity."""
        if self.chi is not None:
            return [self.chi]
        return sorted(parity_representatives(self.group).values())


@dataclass
class TableData:
    """A character table with its classified irreducibles."""

    table: CharacterTable
    records: list[IrrepRecord]


def _table(cfg: RunConfig) -> TableData:
    table = table_of(cfg.group, cfg.chartab)
    return TableData(table, classify_all(table))


def _classes(cfg: RunConfig) -> ConjugacyClasses:
    return conjugacy_classes(cfg.group)


def ring_info(cfg: RunConfig) -> dict[str, Any]:
    """Return the ring, its unit characters and the order of GL2."""
    ring = cfg.ring
    G = cfg.group
    formula = gl2_order(ring.q, ring.ell)
    group: dict[str, Any] = {"order": formula, "materialized": G.materialized}
    if G.materialized:
        group["enumerated"] = len(G.elements)
        group[PAPER_MATCH] = group["enumerated"] == formula
    parities = [chi_parity_of(G, chi.index) for chi in unit_characters(ring)]
    return {
        "size": ring.size,
        "units": ring.unit_count,
        "conductor": ring.conductor,
        "unit_characters": {
            "count": len(parities),
            "injective": sum(is_injective_char(chi) for chi in unit_characters(ring)),
            "even": parities.count(1),
            "odd": parities.count(-1),
        },
        "injective_pairs": count_C(ring),
        "group": group,
    }


def table1(cfg: RunConfig) -> dict[str, Any]:
    """Return the number and dimension of the regular irreducibles of each type."""
    data = _table(cfg)
    return {"table": data.table.as_dict(), **table1_report(data.records)}


def construct_ss(cfg: RunConfig) -> dict[str, Any]:
    """Return every ss irreducible built from the Borel subgroup."""
    ring = cfg.ring
    characters = ss_characters(_classes(cfg))
    expected = regular_count(TYPE_SS, ring.q, ring.ell)
    dims = sorted({character.degree for character in characters})
    return {
        "count": len(characters),
        "expected": expected,
        "dims": dims,
        "pairs": [character.metadata["pair"] for character in characters],
        PAPER_MATCH: len(characters) == expected
        and dims == [regular_dimension(TYPE_SS, ring.q, ring.ell)],
    }


def construct_sns(cfg: RunConfig) -> dict[str, Any]:
    """Return the sns irreducibles built through N C(A), ell odd."""
    ring = cfg.ring
    if ring.ell % 2 == 0 or ring.ell < 3:
        raise BadParam("ell", ring.ell, "construct-sns needs ell odd and at least 3")
    characters = sns_characters(_classes(cfg), cfg.chi)
    dims = sorted({character.degree for character in characters})
    result: dict[str, Any] = {
        "count": len(characters),
        "dims": dims,
        "central": sorted({central_character_index(c) for c in characters}),
    }
    if cfg.chi is None:
        result["expected"] = regular_count(TYPE_SNS, ring.q, ring.ell)
        result[PAPER_MATCH] = result["expected"] == len(characters) and dims == [
            regular_dimension(TYPE_SNS, ring.q, ring.ell)
        ]
    return result


def hom(cfg: RunConfig) -> dict[str, Any]:
    """Return dim Hom(V^t_chi, V^t2_chi) by the Mackey formula."""
    G = cfg.group
    ring = cfg.ring
    rows = []
    for chi_index in cfg.chis():
        for t in cfg.ts():
            other = t if cfg.t2 is None else cfg.t2
            left = dgg_module(G, chi_index, t)
            value = mackey_hom(left, dgg_module(G, chi_index, other))
            row: dict[str, Any] = {"chi": chi_index, "t": t, "t2": other, "hom": value}
            if other == t and ring.ell <= MAX_PREDICTED_ELL:
                parity = chi_parity_of(G, chi_index)
                blocks = predicted_signature(ring.q, ring.ell, t, parity)
                row["predicted"] = sum(count * m * m for m, count in blocks.items())
                row[PAPER_MATCH] = row["predicted"] == value
            rows.append(row)
    return {"rows": rows}


def dgg_hom(cfg: RunConfig) -> dict[str, Any]:
    """Return n_ss and n_sns of V^t_chi without a character table."""
    if cfg.ell < 2:
        raise BadParam("ell", cfg.ell, "dgg-hom needs ell >= 2")
    return {
        "reports": [
            regular_counts_mackey(cfg.group, t, chi_index)
            for chi_index in cfg.chis()
            for t in cfg.ts(below_ell=True)
        ]
    }


def dgg(cfg: RunConfig) -> dict[str, Any]:
    """Return the decomposition of V^t_chi read off the character table."""
    data = _table(cfg)
    return {
        "reports": [
            dgg_report(data.table, data.records, t, chi_index)
            for chi_index in cfg.chis()
            for t in cfg.ts()
        ]
    }


def endo(cfg: RunConfig) -> dict[str, Any]:
    """Return the block signature of End(V^t_chi) next to the prediction."""
    return {
        "reports": [
            endo_report(cfg.group, t, chi_index, cfg.hecke)
            for chi_index in cfg.parity_chis()
            for t in cfg.ts()
        ]
    }


def _a_row(G: GroupHandle, t: int, config: dict[str, Any]) -> dict[str, Any]:
    row = a_report(G, t, config)
    row["disputed"] = row.get("printed_agrees") is False
    if row["disputed"]:
        LOGGER.warning(
            "a(%d, %d) = %d over %s, the printed value is %d",
            t,
            G.ring.ell,
            row["a"],
            G.name,
            row["printed"],
        )
    return row


def a_bound(cfg: RunConfig) -> dict[str, Any]:
    """Return a(t, ell) for the ring."""
    return {"rows": [_a_row(cfg.group, t, cfg.hecke) for t in cfg.ts()]}


def a_sweep(cfg: RunConfig) -> dict[str, Any]:
    """Return a(t, ell) for every t < ell and every ell from 2 up to max_ell."""
    top = cfg.max_ell or DEFAULT_SWEEP_MAX_ELL
    rows = []
    for ell in range(2, top + 1):
        G = cfg.group_at(ell)
        rows.extend(_a_row(G, t, cfg.hecke) for t in range(ell))
    return {
        "q": cfg.ring.q,
        "rows": rows,
        "disputed": [[row["t"], row["ell"]] for row in rows if row["disputed"]],
    }


def sns_table(cfg: RunConfig) -> dict[str, Any]:
    """Return the sns multiplicities of V^t_chi for t < ell."""
    return {
        "reports": [
            sns_table_report(cfg.group, t, chi_index, cfg.hecke)
            for chi_index in cfg.parity_chis()
            for t in cfg.ts(below_ell=True)
        ]
    }


def _strong_gelfand_reports(cfg: RunConfig, table: CharacterTable) -> dict[str, Any]:
    kinds = (KIND_B, KIND_P2)
    reports = [strong_gelfand_report(table, kind, cfg.chartab) for kind in kinds]
    return {"reports": reports}


def strong_gelfand(cfg: RunConfig) -> dict[str, Any]:
    """Return the strong Gelfand checks for the Borel and the mirabolic subgroup."""
    return _strong_gelfand_reports(cfg, table_of(cfg.group, cfg.chartab))


def _optional_table(cfg: RunConfig) -> CharacterTable | None:
    try:
        return table_of(cfg.group, cfg.chartab)
    except BudgetExceeded as error:
        LOGGER.info("Checking W-modules from Hecke signatures only: %s", error)
        return None


def w_check(cfg: RunConfig) -> dict[str, Any]:
    """Return the multiplicity-freeness of Ind from Z^t U of (chi, chi', psi_t)."""
    table = _optional_table(cfg)
    chis = cfg.chis() if table is not None else cfg.parity_chis()
    return {
        "reports": [
            w_module_sweep(cfg.group, t, cfg.hecke, chis, table) for t in cfg.ts()
        ]
    }


def gg_free(cfg: RunConfig) -> dict[str, Any]:
    """Return the signatures of End(V^ell_chi) and their sum over chi."""
    G = cfg.group
    ring = cfg.ring
    signatures = []
    for chi_index in cfg.chis():
        algebra, signature = dgg_signature(G, chi_index, ring.ell, cfg.hecke)
        signatures.append(
            {
                "chi": chi_index,
                "dim": algebra.dim,
                "blocks": blocks_as_list(signature.blocks),
                "free": set(signature.blocks) == {1},
            }
        )
    free = all(row["free"] for row in signatures)
    result: dict[str, Any] = {"multiplicity_free": free, "signatures": signatures}
    if cfg.chi is None:
        total = total_signature(G, ring.ell, cfg.hecke)
        result["total"] = blocks_as_list(total)
        predicted = predicted_total(ring.q, ring.ell, ring.ell)
        result[PAPER_MATCH] = free and total == predicted
        shown = total
    else:
        result[PAPER_MATCH] = free
        shown = Counter()
        for row in signatures:
            shown.update({block["m"]: block["count"] for block in row["blocks"]})
    blocks = ", ".join(f"{m}x{count}" for m, count in sorted(shown.items()))
    result["summary"] = f"multiplicity-free: {str(free).lower()}, blocks ({blocks})"
    return result


def _non_regular_identity(cfg: RunConfig) -> dict[str, Any]:
    G = cfg.group
    classes = _classes(cfg)
    lower = conjugacy_classes(cfg.group_at(cfg.ell - 1))
    rows = []
    for chi_index in cfg.chis():
        for t in cfg.ts(below_ell=True):
            matches = check_nonregular_identity(classes, lower, chi_index, t)
            row = {"chi": chi_index, "t": t, "matches": matches}
            rows.append({**row, PAPER_MATCH: bool(matches)})
    LOGGER.debug("Non-regular identity checked on %d modules of %s", len(rows), G.name)
    return {"rows": rows}


def check(cfg: RunConfig) -> dict[str, Any]:
    """Run every check that fits the budget at (p, ell)."""
    sections: dict[str, Any] = {VERB_RING_INFO: ring_info(cfg)}
    table = _optional_table(cfg)
    if table is not None:
        data = TableData(table, classify_all(table))
        sections[VERB_TABLE1] = table1_report(data.records)
        sections[VERB_DGG] = {
            "reports": [
                dgg_report(table, data.records, t, chi_index)
                for chi_index in cfg.chis()
                for t in cfg.ts()
            ]
        }
        sections[VERB_STRONG_GELFAND] = _strong_gelfand_reports(cfg, table)
        sections["frobenius"] = frobenius_sweep(table, seed=cfg.seed)
        if cfg.ell >= 2:
            lower = table_of(cfg.group_at(cfg.ell - 1), cfg.chartab)
            twisted = check_twisted_inflations(data.records, lower)
            sections["twisted_inflations"] = twisted
    if cfg.ell >= 2:
        sections["non_regular_identity"] = _non_regular_identity(cfg)
        sections[VERB_DGG_HOM] = dgg_hom(cfg)
        sections[VERB_SNS_TABLE] = sns_table(cfg)
    sections[VERB_ENDO] = endo(cfg)
    sections[VERB_GG_FREE] = gg_free(cfg)
    return sections


Verb = Callable[[RunConfig], dict[str, Any]]


@dataclass(frozen=True)
class VerbSpec:
    """A command, what it computes and which arguments it reads."""

    run: Verb
    help: str
    uses: tuple[str, ...] = ()


VERBS: Final[dict[str, VerbSpec]] = {
    VERB_RING_INFO: VerbSpec(ring_info, "Ring, unit characters and |GL2(o_ell)|."),
    VERB_TABLE1: VerbSpec(
        table1, "Numbers and dimensions of the regular irreducibles."
    ),
    VERB_CONSTRUCT_SS: VerbSpec(construct_ss, "Split semisimple irreducibles from B."),
    VERB_CONSTRUCT_SNS: VerbSpec(
        construct_sns, "Split non-semisimple irreducibles, ell odd.", ("chi",)
    ),
    VERB_HOM: VerbSpec(
        hom, "dim Hom(V^t_chi, V^t2_chi) by Mackey.", ("t", "t2", "chi")
    ),
    VERB_DGG_HOM: VerbSpec(
        dgg_hom, "n_ss and n_sns of V^t_chi by Mackey.", ("t", "chi")
    ),
    VERB_DGG: VerbSpec(dgg, "Decomposition of V^t_chi from the table.", ("t", "chi")),
    VERB_ENDO: VerbSpec(endo, "Block signature of End(V^t_chi).", ("t", "chi")),
    VERB_A_BOUND: VerbSpec(a_bound, "Multiplicity bound a(t, ell).", ("t",)),
    VERB_SNS_TABLE: VerbSpec(sns_table, "sns multiplicities of V^t_chi.", ("t", "chi")),
    VERB_STRONG_GELFAND: VerbSpec(strong_gelfand, "Strong Gelfand check for B and P2."),
    VERB_W_CHECK: VerbSpec(
        w_check, "Multiplicity freeness of the W-modules.", ("t", "chi")
    ),
    VERB_GG_FREE: VerbSpec(gg_free, "Multiplicity freeness of V^ell_chi.", ("chi",)),
    VERB_COR16: VerbSpec(
        a_sweep, "a(t, ell) for every t < ell <= max_ell.", ("max_ell",)
    ),
    VERB_CHECK: VerbSpec(check, "Every check that fits the budget.", ("chi",)),
}

__all__ = ["VERBS", "RunConfig", "VerbSpec"]
