"""Exact arithmetic in the finite local rings Z/p^ell and F_p[t]/t^ell.

Elements are stored as integers in [0, p^ell). For the ``tpoly`` flavor the base-p
digits of the integer are the polynomial coefficients, lowest degree first, so the
valuation is the p-adic valuation of the integer in both flavors and projection to
o_i is reduction modulo p^i.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Final

import numpy as np
import voluptuous as vol
from sympy import isprime

from whittaker.const import FLAVOR_TPOLY, FLAVOR_ZMOD, FLAVORS
from whittaker.exceptions import BadIndex, BadParam, BudgetExceeded, NonUnit
from whittaker.helpers.cyclotomic import Cyclotomic
from whittaker.helpers.validators import OddPrime

from .const import (
    COMPONENT,
    CONFIG_ELL,
    CONFIG_FLAVOR,
    CONFIG_P,
    DEFAULT_ELL,
    DEFAULT_FLAVOR,
    DEFAULT_P,
    DESC_COMPONENT,
    DESC_ELL,
    DESC_FLAVOR,
    DESC_P,
    MAX_TABLE_SIZE,
    OP_ADD,
    OP_INV,
    OP_MUL,
    OP_NEG,
    OP_SUB,
    OPS,
)

CONFIG_SCHEMA: Final = vol.Schema(
    {
        vol.Optional(COMPONENT, default={}, description=DESC_COMPONENT): vol.Schema(
            {
                vol.Optional(
                    CONFIG_P, default=DEFAULT_P, description=DESC_P
                ): OddPrime(),
                vol.Optional(
                    CONFIG_ELL, default=DEFAULT_ELL, description=DESC_ELL
                ): vol.All(vol.Coerce(int), vol.Range(min=1)),
                vol.Optional(
                    CONFIG_FLAVOR, default=DEFAULT_FLAVOR, description=DESC_FLAVOR
                ): vol.All(vol.Lower, vol.In(FLAVORS)),
            }
        )
    },
    extra=vol.ALLOW_EXTRA,
)


@dataclass(frozen=True)
class RingSpec:
    """The ring o_ell with residue field F_p."""

    p: int
    ell: int
    flavor: str = FLAVOR_ZMOD

    @property
    def q(self) -> int:
        """Return the size of the residue field."""
        return self.p

    @property
    def ell1(self) -> int:
        """Return floor(ell / 2)."""
        return self.ell // 2

    @property
    def ell2(self) -> int:
        """Return ceil(ell / 2)."""
        return self.ell - self.ell // 2

    @property
    def size(self) -> int:
        """Return the number of elements."""
        return self.p**self.ell

    @property
    def unit_count(self) -> int:
        """Return the number of units."""
        return self.p ** (self.ell - 1) * (self.p - 1)

    @property
    def conductor(self) -> int:
        """Return the modulus all character exponents are taken in.

        Every element of GL2(o_ell) has order dividing (q^2 - 1) p^ell, so every
        linear character of every subgroup takes values in these roots of unity.
        """
        return (self.q**2 - 1) * self.size

    def truncate(self, i: int) -> RingSpec:
        """Return o_i with the same flavor."""
        if not 1 <= i <= self.ell:
            raise BadIndex(i, self.ell)
        return RingSpec(self.p, i, self.flavor)

    def elem(self, rep: int) -> RingElem:
        """Return the element with canonical representative rep."""
        return RingElem(self, int(rep) % self.size)

    @property
    def uniformizer(self) -> int:
        """Return the representative of the uniformizer (p or t)."""
        return self.p % self.size

    def from_coefficients(self, coeffs: list[int] | tuple[int, ...]) -> RingElem:
        """Return the element with the given digits or polynomial coefficients."""
        digits = enumerate(coeffs[: self.ell])
        rep = sum((int(c) % self.p) * self.p**i for i, c in digits)
        return RingElem(self, rep)

    @cached_property
    def tables(self) -> RingTables:
        """Return the dense arithmetic tables."""
        return ring_tables(self)

    def __str__(self) -> str:
        """Return string representation."""
        if self.flavor == FLAVOR_TPOLY:
            return f"F_{self.p}[t]/t^{self.ell}"
        return f"Z/{self.p}^{self.ell}"


@dataclass(frozen=True)
class RingElem:
    """An element of o_ell in canonical form."""

    ring: RingSpec
    rep: int

    def _check(self, other: RingElem | int) -> int:
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise BadParam("other", other, f"not an element of {self.ring}")
            return other.rep
        return _embed_integer(self.ring, int(other))

    def __add__(self, other: RingElem | int) -> RingElem:
        tables = self.ring.tables
        return RingElem(self.ring, int(tables.add[self.rep, self._check(other)]))

    __radd__ = __add__

    def __sub__(self, other: RingElem | int) -> RingElem:
        tables = self.ring.tables
        return RingElem(
            self.ring, int(tables.add[self.rep, tables.neg[self._check(other)]])
        )

    def __mul__(self, other: RingElem | int) -> RingElem:
        tables = self.ring.tables
        return RingElem(self.ring, int(tables.mul[self.rep, self._check(other)]))

    __rmul__ = __mul__

    def __neg__(self) -> RingElem:
        return RingElem(self.ring, int(self.ring.tables.neg[self.rep]))

    def inverse(self) -> RingElem:
        """Return the multiplicative inverse."""
        inv = int(self.ring.tables.inv[self.rep])
        if inv < 0:
            raise NonUnit(self)
        return RingElem(self.ring, inv)

    def is_unit(self) -> bool:
        """Return True if the element is a unit."""
        return self.rep % self.ring.p != 0

    def coefficients(self) -> tuple[int, ...]:
        """Return the base-p digits, lowest first."""
        p = self.ring.p
        return tuple((self.rep // p**i) % p for i in range(self.ring.ell))

    def __str__(self) -> str:
        """Return string representation."""
        if self.ring.flavor == FLAVOR_TPOLY:
            terms = [
                f"{c}" if i == 0 else f"{c}t^{i}"
                for i, c in enumerate(self.coefficients())
                if c
            ]
            return " + ".join(terms) or "0"
        return str(self.rep)


def _embed_integer(ring: RingSpec, value: int) -> int:
    """Return the image of the rational integer value in o_ell."""
    if ring.flavor == FLAVOR_ZMOD:
        return value % ring.size
    # Z maps onto the constants of F_p[t]
    return value % ring.p


@dataclass(frozen=True)
class RingTables:
    """Dense operation tables indexed by canonical representatives."""

    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    val: np.ndarray
    psi: np.ndarray
    digits: np.ndarray


@lru_cache(maxsize=32)
def ring_tables(ring: RingSpec) -> RingTables:
    """Build the arithmetic tables of ring."""
    n = ring.size
    if n > MAX_TABLE_SIZE:
        raise BudgetExceeded("ring table", n, MAX_TABLE_SIZE)
    p, ell = ring.p, ring.ell
    reps = np.arange(n, dtype=np.int64)
    digits = np.stack([(reps // p**i) % p for i in range(ell)], axis=1)
    weights = p ** np.arange(ell, dtype=np.int64)

    if ring.flavor == FLAVOR_ZMOD:
        add = (reps[:, None] + reps[None, :]) % n
        mul = (reps[:, None] * reps[None, :]) % n
        psi = reps.copy()
    else:
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        product = np.zeros((n, n, ell), dtype=np.int64)
        for i in range(ell):
            for j in range(ell - i):
                product[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
        mul = (product % p) @ weights
        psi = digits[:, ell - 1] * p ** (ell - 1)

    neg = (add == 0).argmax(axis=1)
    is_unit = reps % p != 0
    inv = np.where(is_unit, (mul == 1).argmax(axis=1), -1)

    val = np.zeros(n, dtype=np.int64)
    for v in range(1, ell + 1):
        val[reps % p**v == 0] = v

    return RingTables(
        add=add.astype(np.int64),
        mul=mul.astype(np.int64),
        neg=neg.astype(np.int64),
        inv=inv.astype(np.int64),
        val=val,
        psi=psi.astype(np.int64),
        digits=digits,
    )


def make_ring(p: int, ell: int, flavor: str = FLAVOR_ZMOD) -> RingSpec:
    """Return a validated ring."""
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise BadParam("p", p, "must be an odd prime")
    if not isinstance(ell, int) or ell < 1:
        raise BadParam("ell", ell, "must be a positive integer")
    if flavor not in FLAVORS:
        raise BadParam("flavor", flavor, f"must be one of {', '.join(FLAVORS)}")
    return RingSpec(p, ell, flavor)


def ring_arith(x: RingElem, y: RingElem | None, op: str) -> RingElem:
    """Apply op to x (and y for binary operations)."""
    if op not in OPS:
        raise BadParam("op", op, f"must be one of {', '.join(OPS)}")
    if op == OP_INV:
        return x.inverse()
    if op == OP_NEG:
        return -x
    if y is None:
        raise BadParam("y", y, f"operation {op} needs two operands")
    if op == OP_ADD:
        return x + y
    if op == OP_SUB:
        return x - y
    assert op == OP_MUL
    return x * y


def val(x: RingElem) -> int:
    """Return the valuation of x, ell for zero."""
    return int(x.ring.tables.val[x.rep])


def project(x: RingElem, i: int) -> RingElem:
    """Return the image of x in o_i."""
    target = x.ring.truncate(i)
    return RingElem(target, x.rep % target.size)


def lift(x: RingElem, ell: int) -> RingElem:
    """Return the canonical lift of x to o_ell."""
    if ell < x.ring.ell:
        raise BadIndex(ell, x.ring.ell)
    return RingElem(RingSpec(x.ring.p, ell, x.ring.flavor), x.rep)


def psi_exponent(ring: RingSpec, reps: np.ndarray | int) -> np.ndarray:
    """Return k with psi(x) = exp(2 pi i k / p^ell) for each representative."""
    return ring.tables.psi[np.asarray(reps, dtype=np.int64)]


def psi_eval(x: RingElem) -> Cyclotomic:
    """Return the value of the fixed primitive additive character at x."""
    return Cyclotomic.root_of_unity(int(psi_exponent(x.ring, x.rep)), x.ring.size)


def elements(ring: RingSpec) -> list[RingElem]:
    """Return every element of ring in canonical order."""
    return [RingElem(ring, rep) for rep in range(ring.size)]


def units(ring: RingSpec) -> np.ndarray:
    """Return the sorted representatives of the units."""
    reps = np.arange(ring.size, dtype=np.int64)
    return reps[reps % ring.p != 0]
