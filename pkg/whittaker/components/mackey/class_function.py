"""Class functions with exact cyclotomic values."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from whittaker.components.group_core import ConjugacyClasses
from whittaker.components.group_core.matrices import Codes
from whittaker.exceptions import BadParam, InexactResult
from whittaker.helpers.cyclotomic import Cyclotomic, reduce_mod_cyclotomic


@dataclass(eq=False)
class ClassFunction:
    """A function on the conjugacy classes of a group.

    Row c of values holds integer coefficients k -> values[c, k] of zeta_E^k, so the
    value on class c is sum(values[c, k] * zeta_E**k) with E = conductor.
    """

    classes: ConjugacyClasses
    values: np.ndarray
    label: str = ""
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=np.int64)
        if self.values.shape[0] != self.classes.count:
            raise BadParam(
                "values", self.values.shape, f"expected {self.classes.count} class rows"
            )

    @classmethod
    def from_class_exponents(
        cls,
        classes: ConjugacyClasses,
        exponents: np.ndarray,
        conductor: int,
        label: str = "",
    ) -> ClassFunction:
        """Return the class function with value zeta_E^exponents[c] on class c."""
        values = np.zeros((classes.count, conductor), dtype=np.int64)
        values[np.arange(classes.count), np.asarray(exponents) % conductor] = 1
        return cls(classes, values, label)

    @classmethod
    def from_canonical(
        cls,
        classes: ConjugacyClasses,
        canonical: np.ndarray,
        conductor: int,
        label: str = "",
    ) -> ClassFunction:
        """Return the class function from coefficient rows reduced modulo Phi_E."""
        values = np.zeros((classes.count, conductor), dtype=np.int64)
        values[:, : canonical.shape[1]] = canonical
        return cls(classes, values, label)

    @property
    def group(self):
        """Return the underlying group."""
        return self.classes.group

    @property
    def conductor(self) -> int:
        """Return E."""
        return self.values.shape[1]

    @cached_property
    def canonical(self) -> np.ndarray:
        """Return the coefficient rows reduced modulo the E-th cyclotomic polynomial."""
        return reduce_mod_cyclotomic(self.values, self.conductor)

    def value(self, class_index: int) -> Cyclotomic:
        """Return the exact value on a class."""
        return Cyclotomic(self.conductor, self.values[class_index].copy())

    def at(self, codes: Codes) -> np.ndarray:
        """Return coefficient rows at the given group elements."""
        class_index = self.classes.classify(codes)
        if np.any(class_index < 0):
            missing = int(np.count_nonzero(class_index < 0))
            raise BadParam("codes", missing, "not in the group")
        return self.values[class_index]

    @property
    def degree(self) -> int:
        """Return the value at the identity."""
        value = self.value(0).to_rational()
        if value is None or value.denominator != 1:
            raise InexactResult(f"degree of {self.label}", value)
        return int(value)

    def conjugate(self) -> ClassFunction:
        """Return the complex conjugate class function."""
        flip = (-np.arange(self.conductor)) % self.conductor
        return ClassFunction(self.classes, self.values[:, flip], f"conj({self.label})")

    def _aligned(self, other: ClassFunction) -> None:
        if other.classes is not self.classes:
            raise BadParam("other", other.label, "class function of a different group")
        if other.conductor != self.conductor:
            reason = f"conductor differs from {self.conductor}"
            raise BadParam("other", other.conductor, reason)

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._aligned(other)
        label = f"{self.label}+{other.label}"
        return ClassFunction(self.classes, self.values + other.values, label)

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._aligned(other)
        label = f"{self.label}-{other.label}"
        return ClassFunction(self.classes, self.values - other.values, label)

    def __mul__(self, scalar: int) -> ClassFunction:
        return ClassFunction(self.classes, self.values * int(scalar), self.label)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        self._aligned(other)
        return bool(np.array_equal(self.canonical, other.canonical))

    __hash__ = None  # type: ignore[assignment]

    def norm(self) -> Fraction:
        """Return <self, self>."""
        total = hermitian_sum(self.values, self.values, self.classes.sizes)
        return total / self.group.order

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {"label": self.label, "degree": self.degree, **self.metadata}


def hermitian_sum(left: np.ndarray, right: np.ndarray, weights: np.ndarray) -> Fraction:
    """Return sum_c weights[c] * left[c] * conj(right[c]) as an exact rational."""
    conductor = left.shape[1]
    flip = (-np.arange(conductor)) % conductor
    weighted = left * np.asarray(weights, dtype=np.int64)[:, None]
    conjugated = right[:, flip]
    bound = int(np.abs(weighted).sum()) * int(np.abs(conjugated).max(initial=0))
    if bound >= 2**62:
        weighted = weighted.astype(object)
        conjugated = conjugated.astype(object)
    pairs = weighted.T @ conjugated
    index = np.add.outer(np.arange(conductor), np.arange(conductor)) % conductor
    total = np.zeros(conductor, dtype=pairs.dtype)
    np.add.at(total, index.ravel(), pairs.ravel())
    exact = np.array([int(v) for v in total], dtype=object)
    canonical = reduce_mod_cyclotomic(exact, conductor)
    if any(canonical[1:]):
        raise InexactResult("Hermitian product", canonical.tolist())
    return Fraction(int(canonical[0])) if len(canonical) else Fraction(0)
