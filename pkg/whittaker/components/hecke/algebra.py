"""The Hecke algebra End_G(Ind_H^G phi) on the supported double cosets."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix

from whittaker.components.group_core import DoubleCosetSet, double_cosets
from whittaker.components.group_core.const import CHUNK_SIZE
from whittaker.components.mackey import InducedModuleSpec, supported_double_cosets
from whittaker.const import DEFAULT_SPARSE_LIMIT
from whittaker.exceptions import BudgetExceeded, NotASubgroup
from whittaker.helpers import chunked, log_duration

from .const import DEFAULT_CLOSURE_SAMPLES

LOGGER = logging.getLogger(__name__)


def _transporters(cosets: DoubleCosetSet) -> np.ndarray:
    """Return h(i) in H with h(i) r_a H = r_i H.

    r_a is the first coset of the orbit of i.
    """
    space = cosets.cosets
    ops = space.ops
    moved = np.full(space.count, -1, dtype=np.int64)
    frontier = np.asarray(cosets.rep_cosets, dtype=np.int64)
    moved[frontier] = ops.identity
    generators = cosets.left.generators
    while len(frontier):
        found = []
        for generator in generators:
            image, _ = space.locate(ops.mul(generator, space.reps[frontier]))
            new = moved[image] < 0
            targets, first = np.unique(image[new], return_index=True)
            moved[targets] = ops.mul(generator, moved[frontier[new][first]])
            found.append(targets)
        frontier = np.unique(np.concatenate(found))
    if np.any(moved < 0):
        reason = "generators do not reach every coset of an orbit"
        raise NotASubgroup(cosets.left.name, reason)
    return moved


@dataclass
class HeckeAlgebra:
    """Functions D on G with D(h g h') = phi(h) D(g) phi(h') under convolution.

    Basis element T_b is supported on the double coset H r_b H with T_b(r_b) = 1.
    The structure is stored as the flat list of nonzero terms of
    (y * x)(r_c) = sum_i y(r_i) x(r_i^-1 r_c):
    term k contributes T_left[k](r_i) T_col[k](r_i^-1 r_c) = zeta^phase[k] at row c.
    """

    spec: InducedModuleSpec
    cosets: DoubleCosetSet
    basis: np.ndarray
    coset_basis: np.ndarray
    coset_phase: np.ndarray
    term_row: np.ndarray
    term_col: np.ndarray
    term_left: np.ndarray
    term_phase: np.ndarray

    @property
    def dim(self) -> int:
        """Return the number of basis elements."""
        return len(self.basis)

    @property
    def conductor(self) -> int:
        """Return E."""
        return self.spec.character.conductor

    @property
    def module_dimension(self) -> int:
        """Return [G : H]."""
        return self.cosets.cosets.count

    @property
    def label(self) -> str:
        """Return a short description."""
        return f"End({self.spec.label})"

    @cached_property
    def zeta(self) -> np.ndarray:
        """Return the powers of exp(2 pi i / E)."""
        return np.exp(2j * np.pi * np.arange(self.conductor) / self.conductor)

    @cached_property
    def weights(self) -> np.ndarray:
        """Return <T_b, T_b> = |H r_b H| / |H| for the trace form."""
        return self.cosets.orbit_sizes[self.basis]

    @cached_property
    def basis_reps(self) -> np.ndarray:
        """Return r_b for every basis element."""
        return self.cosets.reps[self.basis]

    def evaluate(self, codes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Return (basis position or -1, exponent e) with T_position(g) = zeta^e."""
        index, residual = self.cosets.cosets.locate(codes)
        positions = self.coset_basis[index]
        twist = self.spec.character.exponents(residual, check=False)
        phases = (self.coset_phase[index] + twist) % self.conductor
        return positions, np.where(positions >= 0, phases, 0)

    @cached_property
    def star(self) -> tuple[np.ndarray, np.ndarray]:
        """Return (position, exponent) with T_b* = zeta^exponent T_position.

        T_b*(g) = conj(T_b(g^-1)) is supported on the double coset of r_b^-1.
        """
        ops = self.cosets.cosets.ops
        name = self.spec.subgroup.name
        positions, _ = self.evaluate(ops.inv(self.basis_reps))
        if np.any(positions < 0):
            raise NotASubgroup(name, "inverse double coset is not supported")
        back, phases = self.evaluate(ops.inv(self.basis_reps[positions]))
        if not np.array_equal(back, np.arange(self.dim)):
            raise NotASubgroup(name, "inversion is not an involution")
        return positions, (-phases) % self.conductor

    def star_vector(self, coefficients: np.ndarray) -> np.ndarray:
        """Return the coefficients of x* for x = sum coefficients[b] T_b."""
        positions, phases = self.star
        result = np.zeros(self.dim, dtype=complex)
        np.add.at(result, positions, np.conj(coefficients) * self.zeta[phases])
        return result

    def left_matrix(self, coefficients: np.ndarray) -> np.ndarray:
        """Return the matrix of x -> y * x for y = sum coefficients[b] T_b."""
        values = np.asarray(coefficients)[self.term_left] * self.zeta[self.term_phase]
        return coo_matrix(
            (values, (self.term_row, self.term_col)), shape=(self.dim, self.dim)
        ).toarray()

    def right_matrix(self, coefficients: np.ndarray) -> np.ndarray:
        """Return the matrix of y -> y * x for x = sum coefficients[b] T_b."""
        values = np.asarray(coefficients)[self.term_col] * self.zeta[self.term_phase]
        return coo_matrix(
            (values, (self.term_row, self.term_left)), shape=(self.dim, self.dim)
        ).toarray()

    def _mod_matrix(
        self, weights: np.ndarray, columns: np.ndarray, prime: int
    ) -> np.ndarray:
        result = np.zeros((self.dim, self.dim), dtype=np.int64)
        np.add.at(result, (self.term_row, columns), weights)
        return result % prime

    def left_matrix_mod(
        self, coefficients: np.ndarray, powers: np.ndarray, prime: int
    ) -> np.ndarray:
        """Return left_matrix over F_prime, zeta mapped to an element of order E."""
        weights = (coefficients[self.term_left] * powers[self.term_phase]) % prime
        return self._mod_matrix(weights, self.term_col, prime)

    def right_matrix_mod(
        self, coefficients: np.ndarray, powers: np.ndarray, prime: int
    ) -> np.ndarray:
        """Return right_matrix over F_prime, zeta mapped to an element of order E."""
        weights = (coefficients[self.term_col] * powers[self.term_phase]) % prime
        return self._mod_matrix(weights, self.term_left, prime)

    def product(self, first: int, second: int) -> np.ndarray:
        """Return the coefficients of T_first * T_second."""
        unit = np.zeros(self.dim, dtype=complex)
        unit[first] = 1
        return self.left_matrix(unit)[:, second]

    def operator(self, position: int) -> csr_matrix:
        """Return T_position acting on Ind phi in the basis e_i = r_i (x) 1.

        T(e_0) = sum_j T(r_j^-1) e_j and T(e_i) = r_i T(e_0).
        """
        space = self.cosets.cosets
        ops = space.ops
        n = space.count
        positions, phases = self.evaluate(ops.inv(space.reps))
        support = np.flatnonzero(positions == position)
        rows, cols, data = [], [], []
        support_reps = space.reps[support]
        character = self.spec.character
        step = max(CHUNK_SIZE // max(len(support), 1), 1)
        for start, stop in chunked(n, step):
            products = ops.mul(space.reps[start:stop, None], support_reps[None, :])
            index, residual = space.locate(products.ravel())
            twist = character.exponents(residual, check=False).reshape(products.shape)
            rows.append(index)
            cols.append(np.repeat(np.arange(start, stop), len(support)))
            data.append(((phases[support][None, :] + twist) % self.conductor).ravel())
        entries = (np.concatenate(rows), np.concatenate(cols))
        return csr_matrix((self.zeta[np.concatenate(data)], entries), shape=(n, n))

    def check_closure(
        self, samples: int = DEFAULT_CLOSURE_SAMPLES, seed: int = 0
    ) -> bool:
        """Return True if sampled operator products match the structure constants."""
        rng = np.random.default_rng(seed)
        operators: dict[int, csr_matrix] = {}

        def op(position: int) -> csr_matrix:
            if position not in operators:
                operators[position] = self.operator(position)
            return operators[position]

        for _ in range(samples):
            first, second = (int(v) for v in rng.integers(self.dim, size=2))
            composed = op(first) @ op(second)
            coefficients = self.product(first, second)
            expected = csr_matrix(composed.shape, dtype=complex)
            for position in np.flatnonzero(np.abs(coefficients) > 1e-9):
                expected = expected + coefficients[position] * op(int(position))
            difference = composed - expected
            if difference.nnz and np.abs(difference.data).max() > 1e-8:
                LOGGER.error(
                    "T_%d T_%d does not match its structure constants in %s",
                    first,
                    second,
                    self.label,
                )
                return False
        return True

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {
            "module": self.spec.as_dict(),
            "dim": self.dim,
            "module_dimension": self.module_dimension,
            "double_cosets": self.cosets.count,
        }


def hecke_build(
    spec: InducedModuleSpec, sparse_limit: int = DEFAULT_SPARSE_LIMIT
) -> HeckeAlgebra:
    """Return the Hecke algebra of the induced module spec."""
    ambient, subgroup, character = spec.ambient, spec.subgroup, spec.character
    n = spec.dimension
    if n > sparse_limit:
        raise BudgetExceeded(f"induced module {spec.label}", n, sparse_limit)
    with log_duration(LOGGER, f"Hecke algebra of {spec.label}"):
        cosets = double_cosets(ambient, subgroup, subgroup)
        supported = supported_double_cosets(cosets, character, character)
        space = cosets.cosets
        ops = space.ops
        conductor = character.conductor

        coset_basis = np.full(cosets.count, -1, dtype=np.int64)
        coset_basis[supported] = np.arange(len(supported))
        coset_basis = coset_basis[cosets.orbit_of]

        # r_i = h(i) r_a (r_a^-1 h(i)^-1 r_i) with both outer factors in H
        moved = _transporters(cosets)
        first = space.reps[cosets.rep_cosets[cosets.orbit_of]]
        inside = ops.mul(ops.mul(ops.inv(first), ops.inv(moved)), space.reps)
        keep = coset_basis >= 0
        coset_phase = np.zeros(n, dtype=np.int64)
        coset_phase[keep] = (
            character.exponents(moved[keep]) + character.exponents(inside[keep])
        ) % conductor

        algebra = HeckeAlgebra(
            spec=spec,
            cosets=cosets,
            basis=np.asarray(supported, dtype=np.int64),
            coset_basis=coset_basis,
            coset_phase=coset_phase,
            term_row=np.empty(0, dtype=np.int64),
            term_col=np.empty(0, dtype=np.int64),
            term_left=np.empty(0, dtype=np.int64),
            term_phase=np.empty(0, dtype=np.int64),
        )
        _fill_terms(algebra)
    LOGGER.debug(
        "%s has dimension %d with %d structure terms",
        algebra.label,
        algebra.dim,
        len(algebra.term_row),
    )
    return algebra


def _fill_terms(algebra: HeckeAlgebra) -> None:
    """Record every nonzero T_a(r_i) T_b(r_i^-1 r_c) for c in the basis."""
    space = algebra.cosets.cosets
    ops = space.ops
    inverses = ops.inv(space.reps)
    supported = np.flatnonzero(algebra.coset_basis >= 0)
    left = algebra.coset_basis[supported]
    left_phase = algebra.coset_phase[supported]
    rows, cols, lefts, phases = [], [], [], []
    step = max(CHUNK_SIZE // max(len(supported), 1), 1)
    for start, stop in chunked(algebra.dim, step):
        targets = algebra.basis_reps[start:stop]
        products = ops.mul(inverses[supported][None, :], targets[:, None])
        positions, exponents = algebra.evaluate(products.ravel())
        positions = positions.reshape(products.shape)
        exponents = exponents.reshape(products.shape)
        row, column = np.nonzero(positions >= 0)
        rows.append(row + start)
        cols.append(positions[row, column])
        lefts.append(left[column])
        phases.append((left_phase[column] + exponents[row, column]) % algebra.conductor)
    algebra.term_row = np.concatenate(rows)
    algebra.term_col = np.concatenate(cols)
    algebra.term_left = np.concatenate(lefts)
    algebra.term_phase = np.concatenate(phases)
