"""Test the closed-form block signatures."""
import pytest

from whittaker.components.hecke.predictions import (
    PRINTED_A,
    predicted_a,
    predicted_signature,
    predicted_total,
    residual_sns_blocks,
    sns_part,
)
from whittaker.exceptions import BadParam


@pytest.mark.parametrize(
    "ell, t, parity, expected",
    [
        (1, 1, 1, {1: 3}),
        (1, 0, 1, {1: 4}),
        (1, 0, -1, {2: 1}),
        (2, 2, -1, {1: 9}),
        (2, 1, 1, {1: 5, 2: 2}),
        (2, 0, 1, {1: 4, 2: 3}),
        (2, 0, -1, {2: 4}),
    ],
)
def test_predicted_signature(ell, t, parity, expected):
    """Test the predictions for q = 3."""
    assert predicted_signature(3, ell, t, parity) == expected


@pytest.mark.parametrize("q", [3, 5, 7])
@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_predicted_gelfand_graev(q, ell):
    """Test that V^ell is multiplicity free with q^ell blocks per chi."""
    unit_count = (q - 1) * q ** (ell - 1)
    assert predicted_total(q, ell, ell) == {1: q**ell * unit_count}


def test_predicted_total():
    """Test the totals over every central character."""
    assert predicted_total(3, 2, 2) == {1: 54}
    assert predicted_total(3, 2, 1) == {1: 30, 2: 12}


@pytest.mark.parametrize(
    "t, ell", [(0, 2), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4), (3, 4)]
)
def test_printed_a(t, ell):
    """Test the printed a(t, ell) values that agree with the closed form."""
    for q in (3, 5):
        assert PRINTED_A[(t, ell)](q) == predicted_a(q, ell, t)


def test_sns_part_range():
    """Test that sns_part is only known for 2 <= ell <= 4."""
    assert sns_part(3, 2, 0) == {2: 1}
    with pytest.raises(BadParam):
        sns_part(3, 5, 0)
    with pytest.raises(BadParam):
        sns_part(3, 2, 2)


def test_predicted_signature_bad_parity():
    """Test that the parity is 1 or -1."""
    with pytest.raises(BadParam):
        predicted_signature(3, 2, 1, 0)


def test_residual_sns_blocks():
    """Test that removing the non-regular and ss blocks leaves the sns blocks."""
    assert residual_sns_blocks({1: 5, 2: 2}, 3, 2, 1, 1) == {1: 2}
    assert residual_sns_blocks({1: 5, 2: 1}, 3, 2, 1, 1) == {1: 2, 2: -1}
