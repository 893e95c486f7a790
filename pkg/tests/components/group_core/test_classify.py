"""Test matrix types and the f exponent."""
from contextlib import nullcontext

import numpy as np
import pytest

from whittaker.components.group_core import (
    Mat2,
    classify_codes,
    classify_matrix,
    is_regular,
    matrix_ops,
)
from whittaker.components.group_core.classify import (
    count_similarity_classes,
    f_exponent,
    sns_shape_matrices,
)
from whittaker.components.local_ring import make_ring
from whittaker.const import MATRIX_TYPES
from whittaker.exceptions import BadParam


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[0, 1], [2, 0]], "cuspidal"),
        ([[1, 0], [0, 2]], "split-semisimple"),
        ([[1, 1], [0, 1]], "split-non-semisimple"),
        ([[1, 0], [0, 1]], "non-regular"),
        ([[2, 0], [0, 2]], "non-regular"),
    ],
)
def test_classify_matrix(ring31, rows, expected):
    """Test the types of matrices over F_3."""
    assert classify_matrix(Mat2.of(ring31, rows)) == expected
    assert is_regular(Mat2.of(ring31, rows)) == (expected != "non-regular")


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[0, 1], [1, 0]], "split-semisimple"),
        ([[0, 1], [4, 0]], "split-semisimple"),
        ([[0, 1], [2, 0]], "cuspidal"),
        ([[0, 1], [3, 0]], "cuspidal"),
        ([[1, 1], [0, 1]], "split-non-semisimple"),
    ],
)
def test_classify_matrix_mod5(rows, expected):
    """Test that squares and non-squares of F_5 separate the split types."""
    assert classify_matrix(Mat2.of(make_ring(5, 1), rows)) == expected


def test_classify_by_residue(ring32):
    """Test that the type only depends on the reduction modulo pi."""
    x = Mat2.of(ring32, [[1, 3], [6, 4]])
    assert classify_matrix(x) == "non-regular"
    assert classify_matrix(x.project(1)) == "non-regular"
    y = Mat2.of(ring32, [[3, 1], [5, 3]])
    assert classify_matrix(y) == "cuspidal"


def test_type_counts_gl31(gl31):
    """Test how the 48 elements of GL2(F_3) split by type."""
    kinds = classify_codes(gl31.ops, gl31.elements)
    counts = dict(zip(MATRIX_TYPES, np.bincount(kinds, minlength=4).tolist()))
    assert counts == {
        "cuspidal": 18,
        "split-semisimple": 12,
        "split-non-semisimple": 16,
        "non-regular": 2,
    }


@pytest.mark.parametrize(
    "t, i, ell, expected, raises",
    [
        (3, 2, 4, 2, nullcontext()),
        (2, 1, 4, 1, nullcontext()),
        (1, 1, 3, 1, nullcontext()),
        (0, 1, 2, 0, nullcontext()),
        (5, 1, 4, None, pytest.raises(BadParam)),
        (1, 3, 4, None, pytest.raises(BadParam)),
    ],
)
def test_f_exponent(t, i, ell, expected, raises):
    """Test f(t, i)."""
    with raises:
        assert f_exponent(t, i, make_ring(3, ell)) == expected


def test_sns_shape_matrices(gl32):
    """Test that the split-non-semisimple shapes at t = 0 are one similarity class."""
    ring = gl32.ring
    shapes = sns_shape_matrices(ring, 2, 0)
    ops = matrix_ops(ring)
    sns = MATRIX_TYPES.index("split-non-semisimple")
    assert np.all(classify_codes(ops, shapes) == sns)
    assert np.all(ops.trace(shapes) == 2)
    assert count_similarity_classes(gl32, shapes) >= 1


def test_sns_shape_matrices_bad_level(ring32):
    """Test that ell - t must be at least two."""
    with pytest.raises(BadParam):
        sns_shape_matrices(ring32, 2, 1)
