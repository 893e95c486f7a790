"""Test exact cyclotomic arithmetic."""
from fractions import Fraction

import numpy as np
import pytest

from whittaker.helpers.cyclotomic import Cyclotomic, reduce_mod_cyclotomic


def test_roots_sum_to_zero():
    """Test that the cube roots of unity sum to zero."""
    total = sum(
        (Cyclotomic.root_of_unity(k, 3) for k in range(3)), Cyclotomic.integer(0, 3)
    )
    assert total.is_zero()
    assert Cyclotomic.from_exponents(np.array([0, 1, 2, 3]), 3) == 1


def test_to_rational():
    """Test that rational values are recognised."""
    value = Cyclotomic.root_of_unity(1, 3) + Cyclotomic.root_of_unity(2, 3)
    assert value.to_rational() == Fraction(-1)
    assert value == -1
    assert Cyclotomic.root_of_unity(1, 3).to_rational() is None
    assert Cyclotomic.integer(2, 6).as_dict() == {"rational": 2}


def test_arithmetic():
    """Test products, powers and mixed conductors."""
    i = Cyclotomic.root_of_unity(1, 4)
    assert i**2 == -1
    assert i**4 == 1
    assert i * i.conjugate() == 1
    assert Cyclotomic.root_of_unity(1, 3) * Cyclotomic.root_of_unity(
        1, 2
    ) == Cyclotomic.root_of_unity(5, 6)
    assert Cyclotomic.root_of_unity(1, 3) == Cyclotomic.root_of_unity(2, 6)
    assert (i - i).is_zero()
    assert -i + i == 0
    assert i * 3 == 3 * i


def test_galois():
    """Test the Galois action and complex conjugation."""
    zeta = Cyclotomic.root_of_unity(1, 5)
    assert zeta.galois(2) == Cyclotomic.root_of_unity(2, 5)
    assert zeta.conjugate() == Cyclotomic.root_of_unity(4, 5)
    assert zeta.galois(4) == zeta.conjugate()


def test_to_complex():
    """Test the floating point approximation."""
    assert Cyclotomic.root_of_unity(1, 4).to_complex() == pytest.approx(1j)
    assert Cyclotomic.integer(3, 8).to_complex() == pytest.approx(3)


def test_reduce_mod_cyclotomic():
    """Test reduction modulo 1 + x + x^2."""
    assert reduce_mod_cyclotomic(np.array([0, 0, 1]), 3).tolist() == [-1, -1]
    batch = np.array([[1, 0, 0], [0, 0, 1]])
    assert reduce_mod_cyclotomic(batch, 3).tolist() == [[1, 0], [-1, -1]]


def test_bad_shape():
    """Test that the coefficient vector must have length n."""
    with pytest.raises(ValueError):
        Cyclotomic(3, np.array([1, 2]))
    with pytest.raises(ValueError):
        Cyclotomic.root_of_unity(1, 4).lift(6)
