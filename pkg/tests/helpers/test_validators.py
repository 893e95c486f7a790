"""Test custom validators."""
from contextlib import nullcontext

import pytest
import voluptuous as vol

from whittaker.helpers.validators import (
    CoerceNoneToDict,
    Maybe,
    OddPrime,
    positive_int,
)


@pytest.mark.parametrize(
    "value, expected, raises",
    [
        (3, 3, nullcontext()),
        ("5", 5, nullcontext()),
        (2, None, pytest.raises(vol.Invalid)),
        (9, None, pytest.raises(vol.Invalid)),
        ("x", None, pytest.raises(vol.Invalid)),
        (None, None, pytest.raises(vol.Invalid)),
    ],
)
def test_odd_prime(value, expected, raises):
    """Test the odd prime validator."""
    with raises:
        assert OddPrime()(value) == expected


def test_coerce_none_to_dict():
    """Test that None becomes an empty dict."""
    validator = CoerceNoneToDict()
    assert validator(None) == {}
    assert validator({"a": 1}) == {"a": 1}
    with pytest.raises(vol.CoerceInvalid):
        validator(3)


def test_maybe():
    """Test that None is accepted next to the validators."""
    schema = vol.Schema(Maybe(int))
    assert schema(None) is None
    assert schema(4) == 4
    with pytest.raises(vol.Invalid):
        schema("four")


def test_positive_int():
    """Test integers >= 1."""
    validator = positive_int("A positive integer.")
    assert validator("3") == 3
    with pytest.raises(vol.Invalid):
        validator(0)
