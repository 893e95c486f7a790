"""Test linear algebra over a prime field."""
import numpy as np
import pytest

from whittaker.helpers.modular import (
    matmul_mod,
    nullspace_mod,
    rank_mod,
    rref_mod,
    symmetric_residue,
)


@pytest.mark.parametrize(
    "matrix, p, expected",
    [
        ([[1, 2], [2, 4]], 5, 1),
        ([[1, 2], [2, 1]], 3, 1),
        ([[1, 2], [2, 1]], 5, 2),
        ([[0, 0], [0, 0]], 7, 0),
    ],
)
def test_rank_mod(matrix, p, expected):
    """Test the rank over F_p."""
    assert rank_mod(np.array(matrix), p) == expected


def test_rref_mod():
    """Test the reduced echelon form and its pivots."""
    reduced, pivots = rref_mod(np.array([[2, 4, 1], [1, 2, 3]]), 7)
    assert pivots == [0, 2]
    assert reduced.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_nullspace_mod():
    """Test that the kernel basis is annihilated by the matrix."""
    matrix = np.array([[1, 2], [2, 4]])
    basis = nullspace_mod(matrix, 5)
    assert basis.tolist() == [[3, 1]]
    assert not np.any(matmul_mod(matrix, basis.T, 5))


def test_matmul_mod_large_prime():
    """Test the overflow safe product."""
    p = 2_147_483_647
    a = np.full((1, 4), p - 1, dtype=np.int64)
    b = np.full((4, 1), p - 1, dtype=np.int64)
    assert matmul_mod(a, b, p).tolist() == [[4]]


def test_symmetric_residue():
    """Test the symmetric range."""
    assert symmetric_residue(np.arange(5), 5).tolist() == [0, 1, 2, -2, -1]
