"""Linear extensions of a character of a normal subgroup N to M, M/N abelian."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from whittaker.components.group_core import MatrixGroup
from whittaker.exceptions import NoSolution

if TYPE_CHECKING:
    from . import LinearCharacter

LOGGER = logging.getLogger(__name__)


@dataclass
class ExtensionFamily:
    """Every extension of base to target, indexed lexicographically by generator values.

    Elements of target are written m = n g_1^k_1 ... g_r^k_r with n in the base domain.
    relations[i] records g_i^orders[i] = n_i g_1^r_1 ... g_(i-1)^r_(i-1).
    """

    base: LinearCharacter
    target: MatrixGroup
    generators: np.ndarray
    orders: np.ndarray
    element_base: np.ndarray
    element_powers: np.ndarray
    relation_base: np.ndarray
    relation_powers: np.ndarray

    @property
    def count(self) -> int:
        """Return the number of extensions."""
        return int(np.prod(self.orders, dtype=np.int64))

    @property
    def conductor(self) -> int:
        """Return E."""
        return self.base.conductor

    def generator_values(self, index: int) -> np.ndarray:
        """Return the exponents at g_1, ..., g_r of extension index."""
        if not 0 <= index < self.count:
            raise NoSolution(f"extension {index} of {self.base.label}")
        conductor = self.conductor
        choice = []
        for order in reversed(self.orders):
            choice.append(index % order)
            index //= order
        choice.reverse()
        base_table = self.base.table
        values = np.zeros(len(self.orders), dtype=np.int64)
        for i, order in enumerate(self.orders):
            earlier = int(self.relation_powers[i, :i] @ values[:i])
            rhs = (base_table[self.relation_base[i]] + earlier) % conductor
            if conductor % order or rhs % order:
                what = f"{order}-th root of exponent {rhs} modulo {conductor}"
                raise NoSolution(what)
            values[i] = (rhs // order + choice[i] * (conductor // order)) % conductor
        return values

    def exponents(self, index: int) -> np.ndarray:
        """Return the exponents of extension index on the sorted target elements."""
        values = self.generator_values(index)
        table = self.base.table[self.element_base] + self.element_powers @ values
        table %= self.conductor
        self._verify(table)
        return table

    def _verify(self, table: np.ndarray) -> None:
        ops = self.target.ops
        generators = self.target.generators
        products = ops.mul(self.target.elements[:, None], generators[None, :])
        left = table[self.target.index(products)]
        on_generators = table[self.target.index(generators)]
        right = (table[:, None] + on_generators[None, :]) % self.conductor
        if not np.array_equal(left, right):
            raise NoSolution(f"a multiplicative extension of {self.base.label}")


def enumerate_extensions(base: LinearCharacter, target: MatrixGroup) -> ExtensionFamily:
    """Return the family of extensions of base from its domain to target."""
    ops = target.ops
    normal = base.domain
    if not np.all(target.contains(normal.elements)):
        raise NoSolution(f"{normal.name} is not contained in {target.name}")

    codes = normal.elements
    element_base = np.arange(normal.order)
    powers = np.zeros((normal.order, 0), dtype=np.int64)
    generators: list[int] = []
    orders: list[int] = []
    relation_base: list[int] = []
    relation_powers: list[np.ndarray] = []

    for generator in target.generators:
        order_key = np.argsort(codes)
        sorted_codes = codes[order_key]

        def position(code: int) -> int:
            pos = int(np.searchsorted(sorted_codes, code))
            if pos < len(sorted_codes) and sorted_codes[pos] == code:
                return int(order_key[pos])
            return -1

        if position(int(generator)) >= 0:
            continue
        order, power = 1, int(generator)
        while position(power) < 0:
            power = int(ops.mul(np.int64(power), generator))
            order += 1
        found = position(power)
        relation_base.append(int(element_base[found]))
        relation_powers.append(powers[found].copy())

        blocks, bases, new_powers = [], [], []
        step = np.full(len(codes), ops.identity, dtype=np.int64)
        for k in range(order):
            blocks.append(ops.mul(codes, step))
            bases.append(element_base)
            column = np.full((len(codes), 1), k, dtype=np.int64)
            new_powers.append(np.hstack([powers, column]))
            step = ops.mul(step, generator)
        codes = np.concatenate(blocks)
        element_base = np.concatenate(bases)
        powers = np.vstack(new_powers)
        generators.append(int(generator))
        orders.append(order)

    if len(codes) != target.order:
        raise NoSolution(f"a decomposition of {target.name} over {normal.name}")
    arrange = np.argsort(codes)
    rank = len(orders)
    relations = np.zeros((rank, rank), dtype=np.int64)
    for i, row in enumerate(relation_powers):
        relations[i, : len(row)] = row
    family = ExtensionFamily(
        base=base,
        target=target,
        generators=np.array(generators, dtype=np.int64),
        orders=np.array(orders, dtype=np.int64),
        element_base=element_base[arrange],
        element_powers=powers[arrange],
        relation_base=np.array(relation_base, dtype=np.int64),
        relation_powers=relations,
    )
    LOGGER.debug(
        "%s extends to %s in %d ways (orders %s)",
        base.label,
        target.name,
        family.count,
        orders,
    )
    return family
