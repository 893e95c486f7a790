"""Irreducible characters from common eigenvectors of the class multiplication matrices.

The class sums span the centre of the group algebra. For an irreducible chi the
central character omega(C_s) = |C_s| chi(g_s) / chi(1) is a common eigenvector of
the matrices of multiplication by C_j. Over F_P with P = 1 mod E these split into
lines; the values mod P are then lifted to Z[zeta_E] through the power maps.
"""
from __future__ import annotations

import logging
from functools import cached_property

import numpy as np
from sympy import FiniteField, Poly, Symbol, nextprime, primitive_root, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from whittaker.components.group_core import ConjugacyClasses
from whittaker.exceptions import BudgetExceeded, InexactResult, NoSolution
from whittaker.helpers.cyclotomic import reduce_mod_cyclotomic
from whittaker.helpers.modular import (
    matmul_mod,
    nullspace_mod,
    rref_mod,
    symmetric_residue,
)

from .const import EXACT_FLOAT_BOUND, EXACT_INT_BOUND

LOGGER = logging.getLogger(__name__)

# helpers.modular keeps products of two residues in int64
MAX_PRIME = 2**31


class ClassAlgebra:
    """Structure constants of the class sums, one class at a time.

    matrix(j)[r, s] = #{x in C_j : x^-1 g_s in C_r},
    so C_j C_r = sum_s matrix(j)[r, s] C_s.
    """

    def __init__(self, classes: ConjugacyClasses) -> None:
        self.classes = classes
        self._matrices: dict[int, np.ndarray] = {}

    @cached_property
    def members(self) -> list[np.ndarray]:
        """Return the elements of each class."""
        classes = self.classes
        order = np.argsort(classes.class_of, kind="stable")
        return np.split(classes.group.elements[order], np.cumsum(classes.sizes)[:-1])

    def matrix(self, j: int) -> np.ndarray:
        """Return the matrix of multiplication by the class sum of C_j."""
        if j not in self._matrices:
            classes = self.classes
            ops = classes.group.ops
            count = classes.count
            inverses = ops.inv(self.members[j])
            products = ops.mul(inverses[:, None], classes.reps[None, :])
            landing = classes.classify(products)
            columns = np.broadcast_to(np.arange(count), landing.shape)
            cells = (landing * count + columns).ravel()
            flat = np.bincount(cells, minlength=count * count)
            self._matrices[j] = flat.reshape(count, count)
        return self._matrices[j]


def dixon_prime(order: int, conductor: int) -> int:
    """Return the least prime P > 2 sqrt(order) with P = 1 mod conductor."""
    prime = 2 * int(np.sqrt(order))
    while True:
        prime = int(nextprime(prime))
        if prime % conductor == 1:
            break
    if prime >= MAX_PRIME:
        raise BudgetExceeded("Dixon prime", prime, MAX_PRIME)
    return prime


def eigenspaces(matrix: np.ndarray, field: FiniteField) -> list[np.ndarray]:
    """Return reduced echelon row bases of the eigenspaces of matrix over F_P."""
    prime = field.mod
    size = matrix.shape[0]
    rows = [[field(int(v)) for v in row] for row in matrix % prime]
    coefficients = DomainMatrix(rows, (size, size), field).charpoly()
    charpoly = Poly(coefficients, Symbol("x"), domain=field)
    spaces = []
    for root in charpoly.ground_roots():
        value = int(field(root)) % prime
        shifted = (matrix - value * np.eye(size, dtype=np.int64)) % prime
        basis = nullspace_mod(shifted, prime)
        spaces.append(rref_mod(basis, prime)[0])
    if sum(len(space) for space in spaces) != size:
        raise NoSolution(f"eigenbasis over F_{prime} of a class multiplication matrix")
    return spaces


def _pivots(basis: np.ndarray) -> np.ndarray:
    return np.argmax(basis != 0, axis=1)


def refine_spaces(
    spaces: list[np.ndarray], matrix: np.ndarray, field: FiniteField
) -> list[np.ndarray]:
    """Split every space of dimension above 1 into eigenspaces of matrix."""
    prime = field.mod
    refined = []
    for basis in spaces:
        if len(basis) == 1:
            refined.append(basis)
            continue
        # basis.T restricted to the pivot rows is the identity
        restricted = matmul_mod(matrix, basis.T, prime)[_pivots(basis)]
        for sub in eigenspaces(restricted, field):
            refined.append(rref_mod(matmul_mod(sub, basis, prime), prime)[0])
    return refined


def common_eigenvectors(algebra: ClassAlgebra, field: FiniteField) -> list[np.ndarray]:
    """Return one common eigenvector of every class matrix per irreducible."""
    count = algebra.classes.count
    spaces = [np.eye(count, dtype=np.int64)]
    for j in range(1, count):
        if len(spaces) == count:
            break
        spaces = refine_spaces(spaces, algebra.matrix(j), field)
        LOGGER.debug("Class %d splits the centre into %d spaces", j, len(spaces))
    if len(spaces) != count:
        name = algebra.classes.group.name
        raise NoSolution(f"common eigenvectors of the class sums of {name}")
    return [basis[0] for basis in spaces]


def normalize(
    vectors: list[np.ndarray], classes: ConjugacyClasses, prime: int
) -> np.ndarray:
    """Return chi(g_s) mod P for each central character vector."""
    order = classes.group.order
    sizes = classes.sizes % prime
    inverse_sizes = np.array([pow(int(s), -1, prime) for s in sizes], dtype=np.int64)
    inverse = classes.inverse_class
    rows = []
    for omega in vectors:
        omega = omega * pow(int(omega[0]), -1, prime) % prime
        theta = omega * inverse_sizes % prime
        # chi(1)^2 sum |C_s| theta_s theta_(s^-1) = |G|
        dot = int((sizes * theta % prime * theta[inverse] % prime).sum() % prime)
        square = order * pow(dot, -1, prime) % prime
        roots = sqrt_mod(square, prime, all_roots=True)
        if not roots:
            raise NoSolution(f"square root of {square} modulo {prime}")
        degree = int(min(roots))
        if order % degree:
            raise InexactResult("degree of an irreducible", degree)
        rows.append(theta * degree % prime)
    return np.array(rows, dtype=np.int64)


def lift_values(
    modular: np.ndarray, classes: ConjugacyClasses, prime: int, conductor: int
) -> np.ndarray:
    """Return values[a, c, k], the multiplicity of zeta_E^k in rho_a(g_c).

    With o the order of g_c and w of order o in F_P, the multiplicity of w^j is
    (1/o) sum_i chi(g^i) w^(-ij).
    """
    root = pow(int(primitive_root(prime)), (prime - 1) // conductor, prime)
    orders = classes.element_orders
    power = classes.power_map(classes.exponent)
    values = np.zeros((len(modular), classes.count, conductor), dtype=np.int64)
    for c in range(classes.count):
        o = int(orders[c])
        step = conductor // o
        w = pow(root, step, prime)
        powers = np.array([pow(w, e, prime) for e in range(o)], dtype=np.int64)
        grid = np.arange(o)
        kernel = powers[(-np.outer(grid, grid)) % o]
        samples = modular[:, power[c, :o]]
        counts = matmul_mod(samples, kernel, prime) * pow(o, -1, prime) % prime
        counts = symmetric_residue(counts, prime)
        if np.any(counts < 0):
            raise InexactResult(f"eigenvalue multiplicities on class {c}", counts.min())
        values[:, c, ::step] = counts
    return values


def gram_numerators(
    first: np.ndarray, second: np.ndarray, weights: np.ndarray
) -> np.ndarray:
    """Return sum_c weights[c] first[a, c] conj(second[b, c]) as integers.

    first and second hold coefficient rows over zeta_E along the last axis. Each
    coefficient of the products is an exact integer dot product, done in float64
    while the bound allows it.
    """
    conductor = first.shape[-1]
    weighted = first * np.asarray(weights, dtype=np.int64)[None, :, None]
    bound = int(np.abs(weighted).sum(axis=(1, 2)).max(initial=0)) * int(
        np.abs(second).max(initial=0)
    )
    if bound < EXACT_FLOAT_BOUND:
        dtype = np.float64
    elif bound < EXACT_INT_BOUND:
        dtype = np.int64
    else:
        raise BudgetExceeded("inner product coefficients", bound, EXACT_INT_BOUND)
    left = weighted.reshape(len(first), -1).astype(dtype)
    numerators = np.empty((len(first), len(second), conductor), dtype=np.int64)
    for s in range(conductor):
        # shifted[..., k] = second[..., k - s]
        shifted = np.roll(second, s, axis=-1).reshape(len(second), -1).astype(dtype)
        numerators[:, :, s] = np.rint(left @ shifted.T).astype(np.int64)
    canonical = reduce_mod_cyclotomic(numerators, conductor)
    if np.any(canonical[..., 1:]):
        raise InexactResult("Hermitian products", "not rational")
    return canonical[..., 0]
