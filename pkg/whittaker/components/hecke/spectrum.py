"""Block sizes of a semisimple Hecke algebra from the spectrum of a generic element."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from sympy import isprime, primitive_root
from tenacity import (
    Retrying,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
)

from whittaker.const import (
    DEFAULT_CLUSTER_TOLERANCE,
    DEFAULT_DENSE_LIMIT,
    DEFAULT_SEED,
    DEFAULT_SPECTRAL_ATTEMPTS,
)
from whittaker.exceptions import BudgetExceeded, DegenerateSpectrum, InexactResult
from whittaker.helpers import log_duration
from whittaker.helpers.modular import rank_mod

from .algebra import HeckeAlgebra
from .const import (
    DEFAULT_EXACT_LIMIT,
    KEY_BLOCK_COUNT,
    KEY_BLOCK_SIZE,
    KEY_BLOCKS,
    SECOND_SEED_OFFSET,
)

LOGGER = logging.getLogger(__name__)

# rank_mod keeps products of two residues in int64
MAX_PRIME = 2**31


@dataclass
class WedderburnSignature:
    """The algebra is a product of count copies of M_m(C) for each m in blocks."""

    blocks: dict[int, int]
    dim: int
    seed: int = 0
    exact: bool = False
    metadata: dict = field(default_factory=dict)

    @property
    def max_block(self) -> int:
        """Return the largest block size."""
        return max(self.blocks, default=0)

    @property
    def block_count(self) -> int:
        """Return the number of simple factors."""
        return sum(self.blocks.values())

    @property
    def total(self) -> int:
        """Return sum of count * m^2."""
        return sum(count * m * m for m, count in self.blocks.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WedderburnSignature):
            return NotImplemented
        return self.blocks == other.blocks and self.dim == other.dim

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {
            KEY_BLOCKS: blocks_as_list(self.blocks),
            "dim": self.dim,
            "seed": self.seed,
            "exact": self.exact,
        }


def blocks_as_list(blocks: dict[int, int]) -> list[dict[str, int]]:
    """Return [{"m": m, "count": count}] sorted by m."""
    return [
        {KEY_BLOCK_SIZE: m, KEY_BLOCK_COUNT: count}
        for m, count in sorted(blocks.items())
        if count
    ]


def random_self_adjoint(algebra: HeckeAlgebra, seed: int) -> np.ndarray:
    """Return the coefficients of y + y* for y = sum beta_b T_b, beta complex.

    Real beta commutes with complex conjugation of the basis and merges the
    eigenvalues of conjugate blocks.
    """
    rng = np.random.default_rng(seed)
    beta = rng.standard_normal(algebra.dim) + 1j * rng.standard_normal(algebra.dim)
    return beta + algebra.star_vector(beta)


def cluster_sizes(eigenvalues: np.ndarray, tolerance: float) -> list[int]:
    """Return the sizes of runs of sorted eigenvalues closer than tolerance."""
    if not len(eigenvalues):
        return []
    scale = max(1.0, float(np.abs(eigenvalues).max()))
    breaks = np.flatnonzero(np.diff(eigenvalues) > tolerance * scale)
    edges = np.concatenate([[0], breaks + 1, [len(eigenvalues)]])
    return np.diff(edges).tolist()


def spectral_blocks(
    algebra: HeckeAlgebra, seed: int, tolerance: float = DEFAULT_CLUSTER_TOLERANCE
) -> dict[int, int]:
    """Return {m: count} from the spectrum of a random self-adjoint element.

    In the left-regular representation a block M_m contributes m eigenvalues of
    multiplicity m each.
    """
    x = random_self_adjoint(algebra, seed)
    left = algebra.left_matrix(x)
    root = np.sqrt(algebra.weights.astype(float))
    hermitian = left * root[:, None] / root[None, :]
    scale = max(1.0, float(np.abs(hermitian).max()))
    if not np.allclose(hermitian, hermitian.conj().T, atol=1e-9 * scale):
        raise InexactResult(f"self-adjoint element of {algebra.label}", "not Hermitian")
    eigenvalues = np.linalg.eigvalsh(hermitian)
    runs = Counter(cluster_sizes(eigenvalues, tolerance))
    blocks = {}
    for m, clusters in runs.items():
        if clusters % m:
            reason = f"{clusters} eigenvalues of multiplicity {m}"
            raise DegenerateSpectrum(seed, reason)
        blocks[m] = clusters // m
    if sum(count * m * m for m, count in blocks.items()) != algebra.dim:
        raise DegenerateSpectrum(seed, "block sizes do not add up to the dimension")
    return dict(sorted(blocks.items()))


def splitting_prime(conductor: int, lower_bound: int) -> int:
    """Return the least prime P = 1 mod conductor above lower_bound."""
    candidate = (lower_bound // conductor + 1) * conductor + 1
    while not isprime(candidate):
        candidate += conductor
    if candidate >= MAX_PRIME:
        raise BudgetExceeded("splitting prime", candidate, MAX_PRIME)
    return candidate


def centre_dimension(algebra: HeckeAlgebra, seed: int) -> int:
    """Return the dimension of the centralizer of two random elements over F_P.

    Structure constants live in Z[zeta_E]; zeta_E is sent to an element of order E
    in F_P. For a split semisimple algebra this is the number of blocks.
    """
    conductor = algebra.conductor
    prime = splitting_prime(conductor, algebra.spec.ambient.order)
    root = pow(int(primitive_root(prime)), (prime - 1) // conductor, prime)
    powers = np.array([pow(root, k, prime) for k in range(conductor)], dtype=np.int64)
    rng = np.random.default_rng(seed)
    constraints = []
    for _ in range(2):
        x = rng.integers(prime, size=algebra.dim, dtype=np.int64)
        right = algebra.right_matrix_mod(x, powers, prime)
        constraints.append(right - algebra.left_matrix_mod(x, powers, prime))
    return algebra.dim - rank_mod(np.vstack(constraints) % prime, prime)


def wedderburn_signature(
    algebra: HeckeAlgebra,
    seed: int = DEFAULT_SEED,
    tolerance: float = DEFAULT_CLUSTER_TOLERANCE,
    max_attempts: int = DEFAULT_SPECTRAL_ATTEMPTS,
    dense_limit: int = DEFAULT_DENSE_LIMIT,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> WedderburnSignature:
    """Return the block signature agreed on by two seeds, checked exactly if small."""
    if algebra.dim > dense_limit:
        raise BudgetExceeded(f"spectrum of {algebra.label}", algebra.dim, dense_limit)
    with log_duration(LOGGER, f"Wedderburn signature of {algebra.label}"):
        for attempt in Retrying(
            retry=retry_if_exception_type(DegenerateSpectrum),
            stop=stop_after_attempt(max_attempts),
            before_sleep=before_sleep_log(LOGGER, logging.WARNING),
            reraise=True,
        ):
            with attempt:
                current = seed + attempt.retry_state.attempt_number - 1
                blocks = spectral_blocks(algebra, current, tolerance)
                second = current + SECOND_SEED_OFFSET
                other = spectral_blocks(algebra, second, tolerance)
                if blocks != other:
                    reason = f"seeds disagree: {blocks} != {other}"
                    raise DegenerateSpectrum(current, reason)
                exact = algebra.dim <= exact_limit
                if exact:
                    centre = centre_dimension(algebra, current)
                    count = sum(blocks.values())
                    if centre != count:
                        reason = f"{count} blocks but a centre of dimension {centre}"
                        raise DegenerateSpectrum(current, reason)
    signature = WedderburnSignature(blocks, algebra.dim, current, exact)
    LOGGER.debug("%s: %s", algebra.label, blocks_as_list(blocks))
    return signature
