"""Dense linear algebra over a prime field with numpy int64 arrays.

The prime must be below 2**31 so that products of two residues fit in int64.
"""
from __future__ import annotations

import numpy as np


def rref_mod(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Return the reduced row echelon form of matrix over F_p and its pivots."""
    work = np.array(matrix, dtype=np.int64) % p
    rows, cols = work.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nonzero = np.nonzero(work[row:, col])[0]
        if len(nonzero) == 0:
            continue
        pivot = row + nonzero[0]
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
        work[row] = (work[row] * pow(int(work[row, col]), -1, p)) % p
        factors = work[:, col].copy()
        factors[row] = 0
        work = (work - np.outer(factors, work[row])) % p
        pivots.append(col)
        row += 1
    return work, pivots


def rank_mod(matrix: np.ndarray, p: int) -> int:
    """Return the rank of matrix over F_p."""
    return len(rref_mod(matrix, p)[1])


def nullspace_mod(matrix: np.ndarray, p: int) -> np.ndarray:
    """Return a basis (as rows) of the right kernel of matrix over F_p."""
    reduced, pivots = rref_mod(matrix, p)
    cols = reduced.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, col in enumerate(free):
        basis[k, col] = 1
        for r, pivot_col in enumerate(pivots):
            basis[k, pivot_col] = (-reduced[r, col]) % p
    return basis


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Return a @ b over F_p without int64 overflow."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    if a.shape[-1] * (p - 1) ** 2 < 2**62:
        return (a @ b) % p
    result = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        result = (result + np.outer(a[:, k], b[k])) % p
    return result


def symmetric_residue(values: np.ndarray, p: int) -> np.ndarray:
    """Map residues to the symmetric range (-p/2, p/2]."""
    values = np.asarray(values, dtype=np.int64) % p
    return np.where(values > p // 2, values - p, values)
