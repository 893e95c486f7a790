"""One-dimensional characters of GL2(o_ell) and its subgroups.

Every character is stored as an exponent function: the value at g is
exp(2 pi i k / E) where k = exponents(g) and E = ring.conductor.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from whittaker.components.group_core import (
    GroupHandle,
    Mat2,
    MatrixGroup,
    build_subgroup,
)
from whittaker.components.group_core.const import KIND_N, KIND_NCA, KIND_Z
from whittaker.components.group_core.subgroups import gamma, psi_matrix_exponents
from whittaker.components.local_ring import RingElem, RingSpec, psi_exponent, units
from whittaker.components.local_ring.multiplicative import unit_group
from whittaker.exceptions import BadParam, NoSolution, OutOfDomain
from whittaker.helpers.cyclotomic import Cyclotomic

from .const import (
    VARIANT_BOREL_PAIR,
    VARIANT_CHI_UNITS,
    VARIANT_CHI_Z,
    VARIANT_MU_ALPHA,
    VARIANT_NAMED_EXTENSION,
    VARIANT_PSI_A_DOUBLE_PRIME,
    VARIANT_PSI_A_PRIME,
    VARIANT_PSI_T,
    VARIANT_PSI_X,
    VARIANT_TENSOR_ZU,
    VARIANT_TRIPLE_ZTU,
)
from .extensions import ExtensionFamily, enumerate_extensions

LOGGER = logging.getLogger(__name__)


def additive_exponents(ring: RingSpec, reps: np.ndarray) -> np.ndarray:
    """Return psi(x) exponents modulo the ring conductor."""
    return psi_exponent(ring, reps) * (ring.conductor // ring.size)


@dataclass(frozen=True)
class UnitCharacter:
    """A character of o_ell^x, indexed in mixed radix over the unit generators."""

    ring: RingSpec
    index: int

    variant = VARIANT_CHI_UNITS

    def __post_init__(self) -> None:
        count = unit_group(self.ring).character_count
        if not 0 <= self.index < count:
            raise BadParam("chi", self.index, f"must be in [0, {count})")

    def exponents(self, reps: np.ndarray) -> np.ndarray:
        """Return exponents modulo the ring conductor at unit representatives."""
        return unit_group(self.ring).character_exponents(self.index, reps)

    def __call__(self, x: RingElem) -> Cyclotomic:
        return Cyclotomic.root_of_unity(
            int(self.exponents(np.array([x.rep]))[0]), self.ring.conductor
        )

    def __mul__(self, other: UnitCharacter) -> UnitCharacter:
        index = unit_group(self.ring).product_index(self.index, other.index)
        return UnitCharacter(self.ring, index)

    def inverse(self) -> UnitCharacter:
        """Return the inverse character."""
        return UnitCharacter(self.ring, unit_group(self.ring).inverse_index(self.index))

    def __str__(self) -> str:
        return f"chi[{self.index}]"


def unit_characters(ring: RingSpec) -> list[UnitCharacter]:
    """Return every character of o_ell^x in index order."""
    return [UnitCharacter(ring, i) for i in range(unit_group(ring).character_count)]


class LinearCharacter:
    """A one-dimensional character of a materialized (or membership-testable) group."""

    variant = ""

    def __init__(self, domain: MatrixGroup) -> None:
        self.domain = domain
        self.ring = domain.ring
        self.ops = domain.ops

    @property
    def conductor(self) -> int:
        """Return E, the modulus of the exponents."""
        return self.ring.conductor

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def exponents(self, codes: np.ndarray, check: bool = True) -> np.ndarray:
        """Return exponents modulo E of the character at each element."""
        codes = np.asarray(codes, dtype=np.int64)
        if check:
            outside = ~self.domain.contains(codes)
            if np.any(outside):
                raise OutOfDomain(self.label, int(np.count_nonzero(outside)))
        return np.asarray(self._exponents(codes), dtype=np.int64) % self.conductor

    @cached_property
    def table(self) -> np.ndarray:
        """Return exponents on the sorted domain elements."""
        return self.exponents(self.domain.elements, check=False)

    def __call__(self, g: Mat2) -> Cyclotomic:
        return char_eval(self, g)

    @property
    def label(self) -> str:
        """Return a short description."""
        return f"{self.variant} on {self.domain.name}"

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {
            "variant": self.variant,
            "label": self.label,
            "domain": self.domain.name,
        }

    def __str__(self) -> str:
        return self.label


def char_eval(character: LinearCharacter, g: Mat2) -> Cyclotomic:
    """Return the exact value of character at g."""
    exponent = int(character.exponents(np.array([g.code]))[0])
    return Cyclotomic.root_of_unity(exponent, character.conductor)


class PsiT(LinearCharacter):
    """psi_t(1 u; 0 1) = psi(pi^(ell - t) u) on U."""

    variant = VARIANT_PSI_T

    def __init__(self, domain: MatrixGroup, t: int) -> None:
        super().__init__(domain)
        if not 0 <= t <= self.ring.ell:
            raise BadParam("t", t, f"must be in [0, {self.ring.ell}]")
        self.t = t

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        _, b, _, _ = self.ops.decode(codes)
        scaled = self.ops.uniformizer_power(self.ring.ell - self.t, b)
        return additive_exponents(self.ring, scaled)

    @property
    def label(self) -> str:
        return f"psi_{self.t}"


class PsiX(LinearCharacter):
    """psi_x(g) = psi(tr(x (g - I))) on K(i), for x in gl2(o_(ell - i))."""

    variant = VARIANT_PSI_X

    def __init__(self, domain: MatrixGroup, x: Mat2, i: int) -> None:
        super().__init__(domain)
        if not 1 <= i <= self.ring.ell:
            raise BadParam("i", i, f"must be in [1, {self.ring.ell}]")
        self.i = i
        modulus = self.ring.p ** (self.ring.ell - i)
        entries = [entry.rep % modulus for entry in (x.a, x.b, x.c, x.d)]
        self.x_code = int(self.ops.encode(*entries))
        self.x = Mat2.from_code(self.ring, self.x_code)

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        return psi_matrix_exponents(self.ring, self.ops, self.x_code, codes) * (
            self.conductor // self.ring.size
        )

    @property
    def label(self) -> str:
        return f"psi_x[x={self.x}, i={self.i}]"


class ChiZ(LinearCharacter):
    """chi(diag(x, x)) = chi(x) on the centre."""

    variant = VARIANT_CHI_Z

    def __init__(self, domain: MatrixGroup, index: int) -> None:
        super().__init__(domain)
        self.chi = UnitCharacter(self.ring, index)

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        a, _, _, _ = self.ops.decode(codes)
        return self.chi.exponents(a)

    @property
    def label(self) -> str:
        return f"chi_Z[{self.chi.index}]"


class TensorZU(LinearCharacter):
    """(chi x psi_t)(x b; 0 x) = chi(x) psi(pi^(ell - t) b / x) on ZU."""

    variant = VARIANT_TENSOR_ZU

    def __init__(self, domain: MatrixGroup, index: int, t: int) -> None:
        super().__init__(domain)
        if not 0 <= t <= self.ring.ell:
            raise BadParam("t", t, f"must be in [0, {self.ring.ell}]")
        self.chi = UnitCharacter(self.ring, index)
        self.t = t

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        tables = self.ring.tables
        a, b, _, _ = self.ops.decode(codes)
        ratio = tables.mul[b, tables.inv[a]]
        u = self.ops.uniformizer_power(self.ring.ell - self.t, ratio)
        return self.chi.exponents(a) + additive_exponents(self.ring, u)

    @property
    def label(self) -> str:
        return f"chi[{self.chi.index}] x psi_{self.t}"


def gamma_character_indices(ring: RingSpec, t: int) -> list[int]:
    """Return the least unit character index of each restriction to 1 + pi^t o."""
    table = unit_group(ring).character_table()
    columns = np.searchsorted(units(ring), gamma(ring, t))
    _, first = np.unique(table[:, columns], axis=0, return_index=True)
    return sorted(int(i) for i in first)


class TripleZtU(LinearCharacter):
    """The character of Z^t U built from chi, chi' and psi_t.

    (chi, chi', psi_t)(x b; 0 x') = chi(x) chi'(x'/x) psi(pi^(ell - t) b / x).
    """

    variant = VARIANT_TRIPLE_ZTU

    def __init__(
        self, domain: MatrixGroup, index: int, prime_index: int, t: int
    ) -> None:
        super().__init__(domain)
        if not 0 <= t <= self.ring.ell:
            raise BadParam("t", t, f"must be in [0, {self.ring.ell}]")
        self.chi = UnitCharacter(self.ring, index)
        self.chi_prime = UnitCharacter(self.ring, prime_index)
        self.t = t

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        tables = self.ring.tables
        a, b, _, d = self.ops.decode(codes)
        a_inv = tables.inv[a]
        u = self.ops.uniformizer_power(self.ring.ell - self.t, tables.mul[b, a_inv])
        return (
            self.chi.exponents(a)
            + self.chi_prime.exponents(tables.mul[d, a_inv])
            + additive_exponents(self.ring, u)
        )

    @property
    def label(self) -> str:
        return f"(chi[{self.chi.index}], chi'[{self.chi_prime.index}], psi_{self.t})"


class BorelPair(LinearCharacter):
    """(chi1, chi2)(x z; 0 y) = chi1(x) chi2(y) on B."""

    variant = VARIANT_BOREL_PAIR

    def __init__(self, domain: MatrixGroup, first: int, second: int) -> None:
        super().__init__(domain)
        self.first = UnitCharacter(self.ring, first)
        self.second = UnitCharacter(self.ring, second)

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        a, _, _, d = self.ops.decode(codes)
        return self.first.exponents(a) + self.second.exponents(d)

    @property
    def label(self) -> str:
        return f"({self.first}, {self.second})"


def delta_extensions(ring: RingSpec, alpha: int) -> list[UnitCharacter]:
    """Return the unit characters extending delta_alpha.

    delta_alpha(1 + pi^l2 x) = psi(pi^l2 alpha x).
    """
    modulus = ring.p**ring.ell1
    target = alpha % modulus
    return [chi for chi in unit_characters(ring) if lambda_of(chi).rep == target]


class MuAlpha(LinearCharacter):
    """mu_alpha = (extension of delta_alpha) o det on G."""

    variant = VARIANT_MU_ALPHA

    def __init__(self, domain: MatrixGroup, alpha: int, ext: int = 0) -> None:
        super().__init__(domain)
        extensions = delta_extensions(self.ring, alpha)
        if not 0 <= ext < len(extensions):
            raise BadParam("ext", ext, f"must be in [0, {len(extensions)})")
        self.alpha = alpha % self.ring.p**self.ring.ell1
        self.ext = ext
        self.delta = extensions[ext]

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        return self.delta.exponents(self.ops.det(codes))

    @property
    def label(self) -> str:
        return f"mu_{self.alpha}[{self.ext}]"


class PsiAPrime(LinearCharacter):
    """psi_A'(g) = psi(c + pi^j beta b) mu_alpha(g) on N.

    Here A = (alpha 1; pi^j beta alpha).
    """

    variant = VARIANT_PSI_A_PRIME

    def __init__(self, domain: MatrixGroup, A: Mat2, mu_ext: int = 0) -> None:
        super().__init__(domain)
        self.A = A
        self.mu = MuAlpha(domain, A.a.rep, mu_ext)
        self.lower = A.c.rep % self.ring.size

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        tables = self.ring.tables
        _, b, c, _ = self.ops.decode(codes)
        shifted = tables.add[c, tables.mul[self.lower, b]]
        return additive_exponents(self.ring, shifted) + self.mu._exponents(codes)

    @property
    def label(self) -> str:
        return f"psi_A'[A={self.A}, mu={self.mu.ext}]"


class NamedExtension(LinearCharacter):
    """A character given by its exponent table on a materialized domain."""

    variant = VARIANT_NAMED_EXTENSION

    def __init__(
        self, domain: MatrixGroup, table: np.ndarray, base: LinearCharacter, index: int
    ) -> None:
        super().__init__(domain)
        self.__dict__["table"] = np.asarray(table, dtype=np.int64) % self.conductor
        self.base = base
        self.index = index

    def _exponents(self, codes: np.ndarray) -> np.ndarray:
        positions = self.domain.index(codes)
        return self.table[positions]

    @property
    def label(self) -> str:
        return f"ext[{self.index}] of {self.base.label} to {self.domain.name}"


class PsiADoublePrime(NamedExtension):
    """An extension of psi_A' from N to N C(A)."""

    variant = VARIANT_PSI_A_DOUBLE_PRIME

    @property
    def label(self) -> str:
        return f"psi_A''[{self.index}] of {self.base.label}"


def psi_a_double_primes(
    G: GroupHandle, A: Mat2, mu_ext: int = 0
) -> list[PsiADoublePrime]:
    """Return every extension of psi_A' to N C(A), in canonical order."""
    normal = build_subgroup(G, KIND_N, A=A)
    target = build_subgroup(G, KIND_NCA, A=A)
    base = PsiAPrime(normal, Mat2.of(G.ring, A.rows()), mu_ext)
    family = enumerate_extensions(base, target)
    return [
        PsiADoublePrime(target, family.exponents(k), base, k)
        for k in range(family.count)
    ]


def list_central_chars(G: GroupHandle) -> list[ChiZ]:
    """Return every character of the centre Z, in index order."""
    centre = build_subgroup(G, KIND_Z)
    return [ChiZ(centre, i) for i in range(unit_group(G.ring).character_count)]


def lambda_of(chi: UnitCharacter | ChiZ) -> RingElem:
    """Return the least lambda with chi(1 + pi^l2 x) = psi(pi^l2 lambda x)."""
    unit_char = chi.chi if isinstance(chi, ChiZ) else chi
    ring = unit_char.ring
    ell1, ell2 = ring.ell1, ring.ell2
    if ell1 == 0:
        return ring.elem(0)
    tables = ring.tables
    x = np.arange(ring.size)
    shifted = ring.tables.add[1, (x * ring.p**ell2) % ring.size]
    target = unit_char.exponents(shifted)
    for lam in range(ring.p**ell1):
        candidate = additive_exponents(
            ring, (tables.mul[lam, x] * ring.p**ell2) % ring.size
        )
        if np.array_equal(candidate, target):
            return ring.elem(lam)
    raise NoSolution(f"lambda for {unit_char}")


def is_injective_char(chi: UnitCharacter) -> bool:
    """Return True if chi is nontrivial on 1 + pi^(ell - 1) o."""
    ring = chi.ring
    return bool(np.any(chi.exponents(gamma(ring, ring.ell - 1)) != 0))


def count_C(ring: RingSpec) -> int:  # pylint: disable=invalid-name
    """Return the number of pairs (chi1, chi2) with chi1 / chi2 injective."""
    injective = sum(is_injective_char(chi) for chi in unit_characters(ring))
    return unit_group(ring).character_count * injective


def chi_parity(chi: UnitCharacter | ChiZ) -> int:
    """Return chi(-1) as +1 or -1."""
    unit_char = chi.chi if isinstance(chi, ChiZ) else chi
    ring = unit_char.ring
    exponent = int(unit_char.exponents(np.array([ring.tables.neg[1]]))[0])
    return 1 if exponent == 0 else -1


def check_multiplicative(character: LinearCharacter) -> bool:
    """Return True if the exponent table is a homomorphism on the domain."""
    domain = character.domain
    ops = domain.ops
    generators = domain.generators
    table = character.table
    products = ops.mul(domain.elements[:, None], generators[None, :])
    left = character.exponents(products, check=False)
    on_generators = character.exponents(generators, check=False)
    right = (table[:, None] + on_generators[None, :]) % character.conductor
    identity = character.exponents(np.array([ops.identity]), check=False)[0]
    return bool(identity == 0 and np.array_equal(left, right))


__all__ = [
    "BorelPair",
    "ChiZ",
    "ExtensionFamily",
    "LinearCharacter",
    "MuAlpha",
    "NamedExtension",
    "PsiADoublePrime",
    "PsiAPrime",
    "PsiT",
    "PsiX",
    "TensorZU",
    "TripleZtU",
    "UnitCharacter",
    "additive_exponents",
    "char_eval",
    "check_multiplicative",
    "chi_parity",
    "count_C",
    "delta_extensions",
    "enumerate_extensions",
    "gamma_character_indices",
    "is_injective_char",
    "lambda_of",
    "list_central_chars",
    "psi_a_double_primes",
    "unit_characters",
]
