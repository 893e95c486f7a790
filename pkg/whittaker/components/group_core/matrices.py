"""Vectorized 2x2 matrix arithmetic over o_ell.

A matrix (a b; c d) is encoded as the integer ((a*n + b)*n + c)*n + d with n = |o_ell|,
so integer order on codes is lexicographic order on canonical entries.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from whittaker.components.local_ring import RingElem, RingSpec
from whittaker.exceptions import BadIndex, BadParam, NonUnit

Codes = np.ndarray


class MatrixOps:
    """Batch operations on encoded matrices of one ring."""

    def __init__(self, ring: RingSpec) -> None:
        self.ring = ring
        self.n = ring.size
        tables = ring.tables
        self._add = tables.add
        self._mul = tables.mul
        self._neg = tables.neg
        self._inv = tables.inv

    @cached_property
    def identity(self) -> int:
        """Return the code of the identity matrix."""
        return int(self.encode(1, 0, 0, 1))

    def encode(self, a, b, c, d) -> Codes:
        """Return codes of the matrices with the given entries."""
        n = self.n
        return ((np.asarray(a, dtype=np.int64) * n + b) * n + c) * n + d

    def decode(
        self, codes: Codes
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Return entry arrays a, b, c, d."""
        codes = np.asarray(codes, dtype=np.int64)
        n = self.n
        d = codes % n
        c = (codes // n) % n
        b = (codes // (n * n)) % n
        a = codes // (n * n * n)
        return a, b, c, d

    def add(self, x, y):
        """Return x + y entrywise on representatives."""
        return self._add[x, y]

    def sub(self, x, y):
        """Return x - y entrywise on representatives."""
        return self._add[x, self._neg[y]]

    def times(self, x, y):
        """Return x * y entrywise on representatives."""
        return self._mul[x, y]

    def mul(self, x: Codes, y: Codes) -> Codes:
        """Return the codes of the products x @ y (broadcasting)."""
        a1, b1, c1, d1 = self.decode(x)
        a2, b2, c2, d2 = self.decode(y)
        add, mul = self._add, self._mul
        return self.encode(
            add[mul[a1, a2], mul[b1, c2]],
            add[mul[a1, b2], mul[b1, d2]],
            add[mul[c1, a2], mul[d1, c2]],
            add[mul[c1, b2], mul[d1, d2]],
        )

    def det(self, codes: Codes) -> np.ndarray:
        """Return determinants."""
        a, b, c, d = self.decode(codes)
        return self._add[self._mul[a, d], self._neg[self._mul[b, c]]]

    def trace(self, codes: Codes) -> np.ndarray:
        """Return traces."""
        a, _, _, d = self.decode(codes)
        return self._add[a, d]

    def is_invertible(self, codes: Codes) -> np.ndarray:
        """Return a mask of invertible matrices."""
        return self.det(codes) % self.ring.p != 0

    def inv(self, codes: Codes) -> Codes:
        """Return inverses, raising NonUnit for singular matrices."""
        a, b, c, d = self.decode(codes)
        det_inv = self._inv[self.det(codes)]
        if np.any(det_inv < 0):
            raise NonUnit("determinant of a singular matrix")
        mul, neg = self._mul, self._neg
        return self.encode(
            mul[d, det_inv], mul[neg[b], det_inv], mul[neg[c], det_inv], mul[a, det_inv]
        )

    def minus_identity(self, codes: Codes) -> Codes:
        """Return g - I as codes of (possibly singular) matrices."""
        a, b, c, d = self.decode(codes)
        neg_one = self._neg[1]
        return self.encode(self._add[a, neg_one], b, c, self._add[d, neg_one])

    def equal_mod(self, x: Codes, y: Codes, i: int) -> np.ndarray:
        """Return a mask of x == y modulo pi^i entrywise."""
        if i <= 0:
            return np.ones(np.broadcast(x, y).shape, dtype=bool)
        return self.project(x, i) == self.project(y, i)

    def conj(self, g: Codes, x: Codes) -> Codes:
        """Return g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def power(self, codes: Codes, exponent: int) -> Codes:
        """Return codes ** exponent by repeated squaring."""
        codes = np.asarray(codes, dtype=np.int64)
        result = np.full(codes.shape, self.identity, dtype=np.int64)
        base = codes
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def scale(self, codes: Codes, scalars) -> Codes:
        """Return scalar multiples."""
        a, b, c, d = self.decode(codes)
        mul = self._mul
        return self.encode(*(mul[entry, scalars] for entry in (a, b, c, d)))

    def project(self, codes: Codes, i: int) -> Codes:
        """Return the codes of the images in GL2(o_i)."""
        if not 1 <= i <= self.ring.ell:
            raise BadIndex(i, self.ring.ell)
        m = self.ring.p**i
        a, b, c, d = self.decode(codes)
        return (((a % m) * m + b % m) * m + c % m) * m + d % m

    def lift_from(self, codes: Codes, i: int) -> Codes:
        """Return canonical lifts of codes over o_i."""
        m = self.ring.p**i
        codes = np.asarray(codes, dtype=np.int64)
        d = codes % m
        c = (codes // m) % m
        b = (codes // (m * m)) % m
        a = codes // (m * m * m)
        return self.encode(a, b, c, d)

    def uniformizer_power(self, k: int, x) -> np.ndarray:
        """Return pi^k * x on representatives."""
        if k >= self.ring.ell:
            return np.zeros_like(np.asarray(x, dtype=np.int64))
        return (np.asarray(x, dtype=np.int64) * self.ring.p**k) % self.n


@lru_cache(maxsize=32)
def matrix_ops(ring: RingSpec) -> MatrixOps:
    """Return the shared MatrixOps of ring."""
    return MatrixOps(ring)


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix over o_ell."""

    a: RingElem
    b: RingElem
    c: RingElem
    d: RingElem

    @classmethod
    def of(
        cls, ring: RingSpec, rows: tuple[tuple[int, int], tuple[int, int]] | list
    ) -> Mat2:
        """Return the matrix with integer entries (reduced into ring)."""
        try:
            (a, b), (c, d) = rows
        except (TypeError, ValueError) as error:
            raise BadParam("rows", rows, "expected a 2x2 nested sequence") from error
        return cls(ring.elem(a), ring.elem(b), ring.elem(c), ring.elem(d))

    @classmethod
    def from_code(cls, ring: RingSpec, code: int) -> Mat2:
        """Return the matrix with the given code."""
        entries = matrix_ops(ring).decode(np.int64(code))
        return cls(*(ring.elem(int(entry)) for entry in entries))

    @property
    def ring(self) -> RingSpec:
        """Return the ring of the entries."""
        return self.a.ring

    @property
    def code(self) -> int:
        """Return the integer code."""
        reps = (self.a.rep, self.b.rep, self.c.rep, self.d.rep)
        return int(matrix_ops(self.ring).encode(*reps))

    def det(self) -> RingElem:
        """Return the determinant."""
        return self.a * self.d - self.b * self.c

    def trace(self) -> RingElem:
        """Return the trace."""
        return self.a + self.d

    def is_invertible(self) -> bool:
        """Return True if the determinant is a unit."""
        return self.det().is_unit()

    def __matmul__(self, other: Mat2) -> Mat2:
        product = matrix_ops(self.ring).mul(np.int64(self.code), np.int64(other.code))
        return Mat2.from_code(self.ring, int(product))

    def project(self, i: int) -> Mat2:
        """Return the image over o_i."""
        target = self.ring.truncate(i)
        image = matrix_ops(self.ring).project(np.int64(self.code), i)
        return Mat2.from_code(target, int(image))

    def lift(self, ell: int) -> Mat2:
        """Return the canonical lift over o_ell."""
        ring = RingSpec(self.ring.p, ell, self.ring.flavor)
        entries = (self.a, self.b, self.c, self.d)
        return Mat2(*(ring.elem(entry.rep) for entry in entries))

    def rows(self) -> list[list[int]]:
        """Return the entries as nested lists of representatives."""
        return [[self.a.rep, self.b.rep], [self.c.rep, self.d.rep]]

    def as_dict(self) -> dict:
        """Return a serializable view."""
        return {"rows": self.rows(), "ring": str(self.ring)}

    def __str__(self) -> str:
        """Return string representation."""
        return f"({self.a} {self.b}; {self.c} {self.d})"
