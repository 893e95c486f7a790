"""Endomorphism algebras of the degenerate Gelfand-Graev modules V^t_chi."""
from __future__ import annotations

import logging
from collections import Counter
from typing import Any, Final

import voluptuous as vol

from whittaker.components.characters import TensorZU, chi_parity, unit_characters
from whittaker.components.group_core import GroupHandle, build_subgroup
from whittaker.components.group_core.const import KIND_ZU
from whittaker.components.mackey import InducedModuleSpec
from whittaker.const import (
    DEFAULT_CLUSTER_TOLERANCE,
    DEFAULT_DENSE_LIMIT,
    DEFAULT_SEED,
    DEFAULT_SPARSE_LIMIT,
    DEFAULT_SPECTRAL_ATTEMPTS,
)
from whittaker.exceptions import BadParam

from .algebra import HeckeAlgebra, hecke_build
from .const import (
    COMPONENT,
    CONFIG_DENSE_LIMIT,
    CONFIG_EXACT_LIMIT,
    CONFIG_MAX_ATTEMPTS,
    CONFIG_SEED,
    CONFIG_SPARSE_LIMIT,
    CONFIG_TOLERANCE,
    DEFAULT_EXACT_LIMIT,
    DESC_COMPONENT,
    DESC_DENSE_LIMIT,
    DESC_EXACT_LIMIT,
    DESC_MAX_ATTEMPTS,
    DESC_SEED,
    DESC_SPARSE_LIMIT,
    DESC_TOLERANCE,
)
from .predictions import (
    MAX_PREDICTED_ELL,
    PRINTED_A,
    predicted_a,
    predicted_signature,
    predicted_total,
    residual_sns_blocks,
    sns_part,
)
from .spectrum import WedderburnSignature, blocks_as_list, wedderburn_signature

LOGGER = logging.getLogger(__name__)

CONFIG_SCHEMA: Final = vol.Schema(
    {
        vol.Optional(COMPONENT, default={}, description=DESC_COMPONENT): vol.Schema(
            {
                vol.Optional(
                    CONFIG_DENSE_LIMIT,
                    default=DEFAULT_DENSE_LIMIT,
                    description=DESC_DENSE_LIMIT,
                ): vol.All(vol.Coerce(int), vol.Range(min=1)),
                vol.Optional(
                    CONFIG_SPARSE_LIMIT,
                    default=DEFAULT_SPARSE_LIMIT,
                    description=DESC_SPARSE_LIMIT,
                ): vol.All(vol.Coerce(int), vol.Range(min=1)),
                vol.Optional(
                    CONFIG_TOLERANCE,
                    default=DEFAULT_CLUSTER_TOLERANCE,
                    description=DESC_TOLERANCE,
                ): vol.All(vol.Coerce(float), vol.Range(min=0, min_included=False)),
                vol.Optional(
                    CONFIG_SEED, default=DEFAULT_SEED, description=DESC_SEED
                ): vol.All(vol.Coerce(int), vol.Range(min=0)),
                vol.Optional(
                    CONFIG_MAX_ATTEMPTS,
                    default=DEFAULT_SPECTRAL_ATTEMPTS,
                    description=DESC_MAX_ATTEMPTS,
                ): vol.All(vol.Coerce(int), vol.Range(min=1)),
                vol.Optional(
                    CONFIG_EXACT_LIMIT,
                    default=DEFAULT_EXACT_LIMIT,
                    description=DESC_EXACT_LIMIT,
                ): vol.All(vol.Coerce(int), vol.Range(min=0)),
            }
        )
    },
    extra=vol.ALLOW_EXTRA,
)

HECKE_DEFAULTS: Final = CONFIG_SCHEMA({})[COMPONENT]


def dgg_module(G: GroupHandle, chi_index: int, t: int) -> InducedModuleSpec:
    """Return V^t_chi = Ind_{ZU}^G (chi x psi_t)."""
    zu = build_subgroup(G, KIND_ZU)
    return InducedModuleSpec(G, TensorZU(zu, chi_index, t))


def module_signature(
    spec: InducedModuleSpec, config: dict[str, Any] | None = None
) -> tuple[HeckeAlgebra, WedderburnSignature]:
    """Return the algebra End(Ind spec) and its block signature."""
    config = {**HECKE_DEFAULTS, **(config or {})}
    algebra = hecke_build(spec, config[CONFIG_SPARSE_LIMIT])
    signature = wedderburn_signature(
        algebra,
        seed=config[CONFIG_SEED],
        tolerance=config[CONFIG_TOLERANCE],
        max_attempts=config[CONFIG_MAX_ATTEMPTS],
        dense_limit=config[CONFIG_DENSE_LIMIT],
        exact_limit=config[CONFIG_EXACT_LIMIT],
    )
    return algebra, signature


def dgg_signature(
    G: GroupHandle, chi_index: int, t: int, config: dict[str, Any] | None = None
) -> tuple[HeckeAlgebra, WedderburnSignature]:
    """Return the algebra End(V^t_chi) and its block signature."""
    algebra, signature = module_signature(dgg_module(G, chi_index, t), config)
    parity = chi_parity_of(G, chi_index)
    signature.metadata.update({"t": t, "chi": chi_index, "parity": parity})
    return algebra, signature


def chi_parity_of(G: GroupHandle, chi_index: int) -> int:
    """Return chi(-1) for a unit character index."""
    return chi_parity(unit_characters(G.ring)[chi_index])


def parity_representatives(G: GroupHandle) -> dict[int, int]:
    """Return {parity: least chi index with that parity}."""
    found: dict[int, int] = {}
    for chi in unit_characters(G.ring):
        found.setdefault(chi_parity(chi), chi.index)
    return found


def parity_counts(G: GroupHandle) -> Counter[int]:
    """Return the number of unit characters of each parity."""
    return Counter(chi_parity(chi) for chi in unit_characters(G.ring))


def a_bound(G: GroupHandle, t: int, config: dict[str, Any] | None = None) -> int:
    """Return a(t, ell), the largest multiplicity in V^t, one chi per parity.

    End(V^t_chi) depends on chi only through chi(-1).
    """
    if not 0 <= t <= G.ring.ell:
        raise BadParam("t", t, f"must be in [0, {G.ring.ell}]")
    sizes = [
        dgg_signature(G, chi_index, t, config)[1].max_block
        for chi_index in parity_representatives(G).values()
    ]
    LOGGER.debug("a(%d, %d) = %d over %s", t, G.ring.ell, max(sizes), G.name)
    return max(sizes)


def total_signature(
    G: GroupHandle, t: int, config: dict[str, Any] | None = None
) -> dict[int, int]:
    """Return the blocks of End(V^t) summed over every central character."""
    counts = parity_counts(G)
    total: Counter[int] = Counter()
    for parity, chi_index in parity_representatives(G).items():
        blocks = dgg_signature(G, chi_index, t, config)[1].blocks
        total.update({m: counts[parity] * count for m, count in blocks.items()})
    return dict(sorted(total.items()))


def endo_report(
    G: GroupHandle, t: int, chi_index: int, config: dict[str, Any] | None = None
) -> dict[str, Any]:
    """Return the signature of End(V^t_chi) next to the closed-form prediction."""
    ring = G.ring
    algebra, signature = dgg_signature(G, chi_index, t, config)
    parity = signature.metadata["parity"]
    report: dict[str, Any] = {
        "t": t,
        "chi": chi_index,
        "parity": parity,
        "dim": algebra.dim,
        "module_dimension": algebra.module_dimension,
        "blocks": blocks_as_list(signature.blocks),
        "exact": signature.exact,
        "seed": signature.seed,
    }
    if ring.ell > MAX_PREDICTED_ELL:
        report["paper_match"] = "n/a"
        return report
    predicted = predicted_signature(ring.q, ring.ell, t, parity)
    sizes = sorted(set(predicted) | set(signature.blocks))
    report["predicted"] = blocks_as_list(predicted)
    report["block_match"] = [
        {
            "m": m,
            "computed": signature.blocks.get(m, 0),
            "predicted": predicted.get(m, 0),
            "match": signature.blocks.get(m, 0) == predicted.get(m, 0),
        }
        for m in sizes
    ]
    report["paper_match"] = predicted == signature.blocks
    report["predicted_total"] = blocks_as_list(predicted_total(ring.q, ring.ell, t))
    if not report["paper_match"]:
        LOGGER.error(
            "End(V^%d_chi[%d]) over %s has blocks %s, predicted %s",
            t,
            chi_index,
            G.name,
            signature.blocks,
            predicted,
        )
    return report


def a_report(
    G: GroupHandle, t: int, config: dict[str, Any] | None = None
) -> dict[str, Any]:
    """Return a(t, ell) with the closed-form and printed values."""
    ring = G.ring
    value = a_bound(G, t, config)
    report: dict[str, Any] = {"t": t, "ell": ring.ell, "q": ring.q, "a": value}
    if t == ring.ell or ring.ell <= MAX_PREDICTED_ELL:
        report["predicted"] = predicted_a(ring.q, ring.ell, t)
    printed = PRINTED_A.get((t, ring.ell))
    if printed is not None:
        report["printed"] = printed(ring.q)
        report["printed_agrees"] = printed(ring.q) == value
    if "predicted" in report:
        report["paper_match"] = report["predicted"] == value
    else:
        report["paper_match"] = "n/a"
    return report


def sns_table_report(
    G: GroupHandle, t: int, chi_index: int, config: dict[str, Any] | None = None
) -> dict[str, Any]:
    """Return the sns multiplicities of V^t_chi read off the block signature."""
    ring = G.ring
    signature = dgg_signature(G, chi_index, t, config)[1]
    parity = signature.metadata["parity"]
    computed = residual_sns_blocks(signature.blocks, ring.q, ring.ell, t, parity)
    expected = sns_part(ring.q, ring.ell, t)
    return {
        "t": t,
        "chi": chi_index,
        "sns": blocks_as_list(computed),
        "expected": blocks_as_list(expected),
        # sum of m^2 over the sns blocks
        "sns_dim": sum(count * m * m for m, count in computed.items()),
        "paper_match": computed == expected,
    }


__all__ = [
    "CONFIG_SCHEMA",
    "HECKE_DEFAULTS",
    "HeckeAlgebra",
    "WedderburnSignature",
    "a_bound",
    "a_report",
    "chi_parity_of",
    "dgg_module",
    "dgg_signature",
    "endo_report",
    "hecke_build",
    "module_signature",
    "parity_counts",
    "parity_representatives",
    "predicted_a",
    "predicted_signature",
    "predicted_total",
    "residual_sns_blocks",
    "sns_part",
    "sns_table_report",
    "total_signature",
    "wedderburn_signature",
]
