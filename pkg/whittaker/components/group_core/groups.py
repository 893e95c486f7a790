"""Finite matrix groups stored as sorted arrays of matrix codes."""
from __future__ import annotations

import logging
from collections.abc import Iterator
from functools import cached_property

import numpy as np

from whittaker.components.local_ring import RingSpec, units
from whittaker.components.local_ring.multiplicative import unit_group
from whittaker.const import DEFAULT_BUDGET_ELEMENTS
from whittaker.exceptions import BudgetExceeded, NotASubgroup
from whittaker.helpers import log_duration

from .matrices import Codes, MatrixOps, matrix_ops

LOGGER = logging.getLogger(__name__)


def gl2_order(q: int, ell: int) -> int:
    """Return |GL2(o_ell)|."""
    return q ** (4 * ell - 3) * (q - 1) ** 2 * (q + 1)


class MatrixGroup:
    """A materialized group of invertible matrices."""

    def __init__(
        self,
        ring: RingSpec,
        elements: Codes,
        name: str = "",
        generators: Codes | None = None,
    ) -> None:
        self.ring = ring
        self.ops: MatrixOps = matrix_ops(ring)
        self.elements = np.unique(np.asarray(elements, dtype=np.int64))
        self.name = name
        if generators is not None:
            self.generators = np.asarray(generators, dtype=np.int64)

    @property
    def order(self) -> int:
        """Return the number of elements."""
        return len(self.elements)

    @property
    def materialized(self) -> bool:
        """Return True if the elements are stored."""
        return True

    def index(self, codes: Codes) -> np.ndarray:
        """Return positions of codes in the sorted elements, -1 if absent."""
        codes = np.asarray(codes, dtype=np.int64)
        pos = np.searchsorted(self.elements, codes)
        pos = np.minimum(pos, len(self.elements) - 1)
        return np.where(self.elements[pos] == codes, pos, -1)

    def contains(self, codes: Codes) -> np.ndarray:
        """Return a membership mask."""
        return self.index(codes) >= 0

    def closure(self, generators: Codes, start: Codes | None = None) -> Codes:
        """Return the subgroup generated by generators (and start)."""
        generators = np.asarray(generators, dtype=np.int64)
        span = np.array([self.ops.identity], dtype=np.int64)
        if start is not None:
            span = np.union1d(span, start)
        frontier = span
        while len(frontier):
            products = self.ops.mul(frontier[:, None], generators[None, :]).ravel()
            products = np.unique(products)
            new = np.setdiff1d(products, span, assume_unique=True)
            if not np.all(self.contains(new)):
                raise NotASubgroup(self.name, "products leave the element list")
            span = np.union1d(span, new)
            frontier = new
        return span

    @cached_property
    def generators(self) -> Codes:
        """Return a small generating set, chosen greedily in a seeded order."""
        rng = np.random.default_rng(self.order)
        span = np.array([self.ops.identity], dtype=np.int64)
        generators: list[int] = []
        for code in rng.permutation(self.elements):
            if len(span) == self.order:
                break
            pos = np.searchsorted(span, code)
            if pos < len(span) and span[pos] == code:
                continue
            generators.append(int(code))
            span = self.closure(np.array(generators), start=span)
        self.check_generated(span)
        return np.array(generators, dtype=np.int64)

    def check_generated(self, span: Codes) -> None:
        """Raise NotASubgroup unless span equals the element list."""
        if len(span) != self.order or not np.array_equal(span, self.elements):
            reason = f"generated subgroup has order {len(span)}, expected {self.order}"
            raise NotASubgroup(self.name, reason)

    def check_closed(self) -> None:
        """Verify that the element list is the group spanned by the generators."""
        if not self.contains(np.array([self.ops.identity]))[0]:
            raise NotASubgroup(self.name, "identity missing")
        if not np.all(self.contains(self.generators)):
            raise NotASubgroup(self.name, "generators outside the element list")
        self.check_generated(self.closure(self.generators))

    def is_abelian(self) -> bool:
        """Return True if the generators commute."""
        gens = self.generators
        left = self.ops.mul(gens[:, None], gens[None, :])
        right = self.ops.mul(gens[None, :], gens[:, None])
        return bool(np.array_equal(left, right))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        kind = type(self).__name__
        return f"<{kind} {self.name} of order {self.order} over {self.ring}>"


class GroupHandle(MatrixGroup):
    """GL2(o_ell), materialized when it fits in the element budget.

    A lazy handle keeps no element list and iterates the group as the cosets of
    K(1), one block per element of GL2(F_q).
    """

    # pylint: disable=super-init-not-called
    def __init__(self, ring: RingSpec, budget: int = DEFAULT_BUDGET_ELEMENTS) -> None:
        self.ring = ring
        self.ops = matrix_ops(ring)
        self.name = f"GL2({ring})"
        self.budget = budget
        self._order = gl2_order(ring.q, ring.ell)
        self._elements: Codes | None = None
        if self._order <= budget:
            with log_duration(LOGGER, f"Elements of {self.name}"):
                self._elements = np.sort(np.concatenate(list(self.iter_blocks())))
            if len(self._elements) != self._order:
                reason = "enumeration does not match the order formula"
                raise NotASubgroup(self.name, reason)
        else:
            LOGGER.info(
                "%s has %d elements, above the budget of %d. Using a lazy handle",
                self.name,
                self._order,
                budget,
            )

    @property
    def order(self) -> int:
        """Return |G|."""
        return self._order

    @property
    def materialized(self) -> bool:
        """Return True if the elements are stored."""
        return self._elements is not None

    @property
    def elements(self) -> Codes:  # type: ignore[override]
        """Return the sorted element codes."""
        if self._elements is None:
            what = f"element list of {self.name}"
            raise BudgetExceeded(what, self._order, self.budget)
        return self._elements

    def residue_elements(self) -> Codes:
        """Return GL2(F_q) as rows (a, b, c, d) of residues."""
        p = self.ring.p
        entries = np.arange(p**4, dtype=np.int64)
        a, b = entries // p**3, (entries // p**2) % p
        c, d = (entries // p) % p, entries % p
        keep = (a * d - b * c) % p != 0
        return np.stack([a[keep], b[keep], c[keep], d[keep]], axis=1)

    def iter_blocks(self) -> Iterator[Codes]:
        """Yield the element codes one K(1)-coset block at a time."""
        p, n = self.ring.p, self.ring.size
        high = np.arange(n // p, dtype=np.int64) * p
        mesh = np.meshgrid(high, high, high, high, indexing="ij")
        grid = np.stack(mesh, axis=-1).reshape(-1, 4)
        for residue in self.residue_elements():
            yield self.ops.encode(*(grid + np.asarray(residue)).T)

    def index(self, codes: Codes) -> np.ndarray:
        """Return positions of codes in the sorted elements, -1 if absent."""
        if self._elements is None:
            what = f"element index of {self.name}"
            raise BudgetExceeded(what, self._order, self.budget)
        return super().index(codes)

    def contains(self, codes: Codes) -> np.ndarray:
        """Return a mask of invertible matrices."""
        return self.ops.is_invertible(codes)

    @cached_property
    def generators(self) -> Codes:
        """Return elementary matrices and diagonal unit generators."""
        ops = self.ops
        gens = [ops.encode(1, 1, 0, 1), ops.encode(1, 0, 1, 1)]
        for generator in unit_group(self.ring).generators:
            gens.append(ops.encode(generator, 0, 0, 1))
        return np.array([int(g) for g in gens], dtype=np.int64)

    def random_elements(self, count: int, seed: int = 0) -> Codes:
        """Return count uniformly random elements."""
        rng = np.random.default_rng(seed)
        if self._elements is not None:
            return rng.choice(self._elements, size=count)
        found: list[np.ndarray] = []
        total = 0
        while total < count:
            entries = rng.integers(0, self.ring.size, size=(2 * count, 4))
            codes = self.ops.encode(*entries.T)
            codes = codes[self.ops.is_invertible(codes)]
            found.append(codes)
            total += len(codes)
        return np.concatenate(found)[:count]

    def unit_reps(self) -> np.ndarray:
        """Return the unit representatives of the ring."""
        return units(self.ring)


def enumerate_gl2(ring: RingSpec, budget: int = DEFAULT_BUDGET_ELEMENTS) -> GroupHandle:
    """Return GL2(ring), materialized when |G| <= budget."""
    return GroupHandle(ring, budget)
