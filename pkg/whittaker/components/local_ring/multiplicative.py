"""Structure of the unit group of o_ell as a product of cyclic groups."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

import numpy as np
from sympy import primitive_root

from whittaker.const import FLAVOR_ZMOD
from whittaker.exceptions import BadParam, NoSolution

from . import RingSpec

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnitGroup:
    """o_ell^x written as a direct product of cyclic groups.

    log[u] holds the exponent vector of the unit u with respect to generators, and
    is -1 on non-units.
    """

    ring: RingSpec
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    log: np.ndarray

    @property
    def exponent(self) -> int:
        """Return the exponent of the group."""
        return lcm(*self.orders) if self.orders else 1

    @property
    def character_count(self) -> int:
        """Return the number of linear characters."""
        return int(np.prod(self.orders, dtype=np.int64))

    def index_to_vector(self, index: int) -> tuple[int, ...]:
        """Return the exponent vector of the character with the given index."""
        if not 0 <= index < self.character_count:
            bound = f"must be below {self.character_count}"
            raise BadParam("character index", index, bound)
        vector = []
        for order in reversed(self.orders):
            vector.append(index % order)
            index //= order
        return tuple(reversed(vector))

    def vector_to_index(self, vector: tuple[int, ...] | np.ndarray) -> int:
        """Return the index of the character with the given exponent vector."""
        index = 0
        for k, order in zip(vector, self.orders):
            index = index * order + int(k) % order
        return index

    def character_exponents(self, index: int, reps: np.ndarray) -> np.ndarray:
        """Return exponents modulo the ring conductor of character index on reps."""
        reps = np.asarray(reps, dtype=np.int64)
        logs = self.log[reps]
        if np.any(logs < 0):
            bad = reps[np.any(logs < 0, axis=-1)].tolist()
            raise BadParam("reps", bad, "not units")
        conductor = self.ring.conductor
        scale = np.array(
            [
                k * (conductor // order)
                for k, order in zip(self.index_to_vector(index), self.orders)
            ],
            dtype=np.int64,
        )
        return (logs @ scale) % conductor

    def character_table(self) -> np.ndarray:
        """Return the exponent matrix characters x units, columns in unit order."""
        unit_reps = np.nonzero(self.log[:, 0] >= 0)[0] if self.orders else np.array([1])
        count = self.character_count
        return np.stack([self.character_exponents(i, unit_reps) for i in range(count)])

    def inverse_index(self, index: int) -> int:
        """Return the index of the inverse character."""
        return self.vector_to_index(tuple(-k for k in self.index_to_vector(index)))

    def product_index(self, first: int, second: int) -> int:
        """Return the index of the product character."""
        pairs = zip(self.index_to_vector(first), self.index_to_vector(second))
        return self.vector_to_index(tuple(a + b for a, b in pairs))


def _generators(ring: RingSpec) -> list[tuple[int, int]]:
    """Return (generator, order) pairs for the unit group."""
    p, ell = ring.p, ring.ell
    root = int(primitive_root(p))
    if ring.flavor == FLAVOR_ZMOD:
        # Teichmuller representative of the primitive root
        generators = [(pow(root, p ** (ell - 1), ring.size), p - 1)]
        if ell > 1:
            generators.append((1 + p, p ** (ell - 1)))
        return generators
    generators = [(root, p - 1)]
    for k in range(1, ell):
        if k % p == 0:
            continue
        order = 1
        while k * order < ell:
            order *= p
        generators.append((1 + p**k, order))
    return generators


@lru_cache(maxsize=32)
def unit_group(ring: RingSpec) -> UnitGroup:
    """Return the cyclic decomposition of the units of ring."""
    mul = ring.tables.mul
    generators = _generators(ring)
    current = np.array([1], dtype=np.int64)
    exponents = np.zeros((1, 0), dtype=np.int64)
    for generator, order in generators:
        powers = [1]
        for _ in range(order - 1):
            powers.append(int(mul[powers[-1], generator]))
        products = mul[current[:, None], np.array(powers)[None, :]].reshape(-1)
        exponents = np.concatenate(
            [
                np.repeat(exponents, order, axis=0),
                np.tile(np.arange(order), len(current))[:, None],
            ],
            axis=1,
        )
        current = products

    if len(np.unique(current)) != ring.unit_count or np.any(current % ring.p == 0):
        raise NoSolution(f"a cyclic decomposition of the units of {ring}")

    log = np.full((ring.size, len(generators)), -1, dtype=np.int64)
    log[current] = exponents
    LOGGER.debug(
        "Unit group of %s has generators %s with orders %s",
        ring,
        [g for g, _ in generators],
        [o for _, o in generators],
    )
    return UnitGroup(
        ring=ring,
        generators=tuple(g for g, _ in generators),
        orders=tuple(o for _, o in generators),
        log=log,
    )
