"""Closed-form block signatures of End(V^t_chi) for ell <= 4."""
from __future__ import annotations

from collections import Counter
from typing import Final

from whittaker.exceptions import BadParam

# Largest ell with a closed form for the split non-semisimple part
MAX_PREDICTED_ELL: Final = 4


def _merge(*parts: dict[int, int]) -> dict[int, int]:
    total: Counter[int] = Counter()
    for part in parts:
        total.update({m: count for m, count in part.items() if count})
    return dict(sorted(total.items()))


def sns_part(q: int, ell: int, t: int) -> dict[int, int]:
    """Return the blocks of End(V^t_chi) coming from sns constituents at level ell."""
    if not 2 <= ell <= MAX_PREDICTED_ELL:
        reason = f"closed form known for 2 <= ell <= {MAX_PREDICTED_ELL}"
        raise BadParam("ell", ell, reason)
    if not 0 <= t < ell:
        raise BadParam("t", t, f"must be in [0, {ell - 1}]")
    table: dict[tuple[int, int], dict[int, int]] = {
        (2, 0): {q - 1: 1},
        (2, 1): {1: q - 1},
        (3, 0): {q - 1: 1, 2 * (q - 1): (q - 1) // 2},
        (3, 1): {q - 2: (q - 1) // 2, q - 1: 1, q: (q - 1) // 2},
        (3, 2): {1: q * (q - 1)},
        (4, 0): {2 * (q - 1): q * (q - 1) // 2, q * q - q: 1},
        (4, 1): {q: q - 1, 2 * (q - 1): q * (q - 1) // 2},
        (4, 2): {q - 1: q, q - 2: q * (q - 1) // 2, q: q * (q - 1) // 2},
        (4, 3): {1: q * q * (q - 1)},
    }
    return _merge(table[(ell, t)])


def ss_part(q: int, ell: int) -> dict[int, int]:
    """Return the blocks from ss constituents not inflated from level ell - 1."""
    return {2: (q - 1) ** 2 * q ** (ell - 2) // 2}


def predicted_signature(q: int, ell: int, t: int, parity: int) -> dict[int, int]:
    """Return {m: count} for End(V^t_chi) where parity = chi(-1).

    For t < ell the non-regular part is End(V^t) one level down, with a twisted
    central character of the same parity.
    """
    if parity not in (1, -1):
        raise BadParam("parity", parity, "must be 1 or -1")
    if not 0 <= t <= ell:
        raise BadParam("t", t, f"must be in [0, {ell}]")
    if t == ell:
        return {1: q**ell}
    if ell == 1:
        if parity == 1:
            return _merge({2: (q - 3) // 2, 1: 4})
        return {2: (q - 1) // 2}
    return _merge(
        predicted_signature(q, ell - 1, t, parity), ss_part(q, ell), sns_part(q, ell, t)
    )


def predicted_total(q: int, ell: int, t: int) -> dict[int, int]:
    """Return the blocks of End(V^t) summed over every central character."""
    half = (q - 1) * q ** (ell - 1) // 2
    even = predicted_signature(q, ell, t, 1)
    odd = predicted_signature(q, ell, t, -1)
    return _merge(
        {m: half * count for m, count in even.items()},
        {m: half * count for m, count in odd.items()},
    )


def predicted_a(q: int, ell: int, t: int) -> int:
    """Return the largest block size over both parities."""
    return max(
        max(predicted_signature(q, ell, t, parity), default=0) for parity in (1, -1)
    )


# a(t, ell) closed forms as originally published, keyed by (t, ell)
PRINTED_A: Final = {
    (0, 2): lambda q: q - 1,
    (1, 2): lambda q: 2,
    (0, 3): lambda q: 2 * (q - 1),
    (1, 3): lambda q: q,
    (2, 3): lambda q: q * q - q,
    (0, 4): lambda q: 2,
    (1, 4): lambda q: 2 * (q - 1),
    (2, 4): lambda q: q,
    (3, 4): lambda q: 2,
}


def residual_sns_blocks(
    blocks: dict[int, int], q: int, ell: int, t: int, parity: int
) -> dict[int, int]:
    """Return blocks minus those of the non-regular and ss constituents.

    Negative counts are kept so that a missing block shows up.
    """
    if not 2 <= ell <= MAX_PREDICTED_ELL or not 0 <= t < ell:
        reason = f"needs 0 <= t < ell and 2 <= ell <= {MAX_PREDICTED_ELL}"
        raise BadParam("t", t, reason)
    residual = Counter(blocks)
    residual.subtract(predicted_signature(q, ell - 1, t, parity))
    residual.subtract(ss_part(q, ell))
    return {m: count for m, count in sorted(residual.items()) if count}
