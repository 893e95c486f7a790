"""Exact arithmetic in cyclotomic integers.

A value is stored as an integer vector c of length n meaning sum(c[k] * z**k) with
z = exp(2*pi*i/n). The vector is a representative in Z[x]/(x**n - 1); equality and
rationality are decided on the reduction modulo the n-th cyclotomic polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np
from sympy import Poly, Symbol, cyclotomic_poly

_X = Symbol("x")


@lru_cache(maxsize=64)
def cyclotomic_coefficients(n: int) -> np.ndarray:
    """Return the coefficients of the n-th cyclotomic polynomial, lowest first."""
    coeffs = Poly(cyclotomic_poly(n, _X), _X).all_coeffs()
    return np.array([int(c) for c in reversed(coeffs)], dtype=np.int64)


def reduce_mod_cyclotomic(coeffs: np.ndarray, n: int) -> np.ndarray:
    """Return the remainder of coeffs modulo the n-th cyclotomic polynomial.

    coeffs may be a batch, the polynomial runs along the last axis.
    """
    phi = cyclotomic_coefficients(n)
    degree = len(phi) - 1
    coeffs = np.asarray(coeffs)
    work = coeffs.astype(object if coeffs.dtype == object else np.int64)
    for k in range(work.shape[-1] - 1, degree - 1, -1):
        lead = work[..., k]
        if np.any(lead):
            work[..., k - degree : k + 1] -= lead[..., None] * phi
    return work[..., :degree]


class Cyclotomic:
    """Element of Z[zeta_n]."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: np.ndarray | None = None) -> None:
        self.n = n
        if coeffs is None:
            coeffs = np.zeros(n, dtype=np.int64)
        self.coeffs = np.asarray(coeffs, dtype=np.int64)
        if self.coeffs.shape != (n,):
            raise ValueError(f"Expected {n} coefficients, got {self.coeffs.shape}")

    @classmethod
    def integer(cls, value: int, n: int = 1) -> Cyclotomic:
        """Return the rational integer value."""
        coeffs = np.zeros(n, dtype=np.int64)
        coeffs[0] = value
        return cls(n, coeffs)

    @classmethod
    def root_of_unity(cls, exponent: int, n: int) -> Cyclotomic:
        """Return zeta_n ** exponent."""
        coeffs = np.zeros(n, dtype=np.int64)
        coeffs[exponent % n] = 1
        return cls(n, coeffs)

    @classmethod
    def from_exponent_counts(cls, counts: np.ndarray) -> Cyclotomic:
        """Return sum(counts[k] * zeta**k) where n = len(counts)."""
        return cls(len(counts), np.asarray(counts, dtype=np.int64).copy())

    @classmethod
    def from_exponents(cls, exponents: np.ndarray, n: int) -> Cyclotomic:
        """Return the sum of zeta_n ** e over the given exponents."""
        counts = np.bincount(np.asarray(exponents, dtype=np.int64) % n, minlength=n)
        return cls(n, counts)

    def lift(self, m: int) -> Cyclotomic:
        """Return the same value with conductor m, a multiple of n."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"{m} is not a multiple of {self.n}")
        coeffs = np.zeros(m, dtype=np.int64)
        coeffs[:: m // self.n] = self.coeffs
        return Cyclotomic(m, coeffs)

    def _common(self, other: Cyclotomic | int) -> tuple[Cyclotomic, Cyclotomic]:
        if isinstance(other, (int, np.integer)):
            other = Cyclotomic.integer(int(other), self.n)
        if other.n == self.n:
            return self, other
        m = self.n * other.n // gcd(self.n, other.n)
        return self.lift(m), other.lift(m)

    def __add__(self, other: Cyclotomic | int) -> Cyclotomic:
        a, b = self._common(other)
        return Cyclotomic(a.n, a.coeffs + b.coeffs)

    __radd__ = __add__

    def __sub__(self, other: Cyclotomic | int) -> Cyclotomic:
        a, b = self._common(other)
        return Cyclotomic(a.n, a.coeffs - b.coeffs)

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.n, -self.coeffs)

    def __mul__(self, other: Cyclotomic | int) -> Cyclotomic:
        if isinstance(other, (int, np.integer)):
            return Cyclotomic(self.n, self.coeffs * other)
        a, b = self._common(other)
        full = np.convolve(a.coeffs, b.coeffs)
        folded = full[: a.n].copy()
        folded[: len(full) - a.n] += full[a.n :]
        return Cyclotomic(a.n, folded)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Cyclotomic:
        result = Cyclotomic.integer(1, self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> Cyclotomic:
        """Return the complex conjugate."""
        return Cyclotomic(self.n, np.roll(self.coeffs[::-1], 1))

    def galois(self, k: int) -> Cyclotomic:
        """Apply zeta -> zeta**k for k coprime to n."""
        coeffs = np.zeros(self.n, dtype=np.int64)
        np.add.at(coeffs, (np.arange(self.n) * k) % self.n, self.coeffs)
        return Cyclotomic(self.n, coeffs)

    def canonical(self) -> np.ndarray:
        """Return the reduction modulo the cyclotomic polynomial."""
        return reduce_mod_cyclotomic(self.coeffs, self.n)

    def is_zero(self) -> bool:
        """Return True if the value is zero."""
        return not np.any(self.canonical())

    def to_rational(self) -> Fraction | None:
        """Return the value as an integer Fraction, or None if irrational."""
        canonical = self.canonical()
        if np.any(canonical[1:]):
            return None
        return Fraction(int(canonical[0])) if len(canonical) else Fraction(0)

    def to_complex(self) -> complex:
        """Return a floating point approximation."""
        angles = np.exp(2j * np.pi * np.arange(self.n) / self.n)
        return complex(np.dot(self.coeffs, angles))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)):
            other = Cyclotomic.integer(int(other), self.n)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return not np.any(reduce_mod_cyclotomic(a.coeffs - b.coeffs, a.n))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        rational = self.to_rational()
        if rational is not None:
            return f"Cyclotomic({rational})"
        terms = [f"{c}*z{self.n}^{k}" for k, c in enumerate(self.coeffs) if c]
        return "Cyclotomic(" + " + ".join(terms) + ")"

    def as_dict(self) -> dict:
        """Return a serializable view."""
        rational = self.to_rational()
        if rational is not None:
            return {"rational": int(rational)}
        return {"n": self.n, "canonical": self.canonical().tolist()}
