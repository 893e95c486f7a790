"""Test the spectral block decomposition."""
import numpy as np
import pytest

from whittaker.components.hecke import dgg_module, hecke_build, parity_representatives
from whittaker.components.hecke.spectrum import (
    WedderburnSignature,
    blocks_as_list,
    cluster_sizes,
    random_self_adjoint,
    spectral_blocks,
    splitting_prime,
)
from whittaker.exceptions import BudgetExceeded


@pytest.mark.parametrize(
    "eigenvalues, expected",
    [
        ([], []),
        ([0.0, 1e-12, 1.0, 2.0, 2.0, 2.0 + 1e-10], [2, 1, 3]),
        ([-5.0, 5.0], [1, 1]),
    ],
)
def test_cluster_sizes(eigenvalues, expected):
    """Test grouping of sorted eigenvalues."""
    assert cluster_sizes(np.array(eigenvalues), 1e-7) == expected


@pytest.mark.parametrize(
    "conductor, lower_bound, expected",
    [
        (24, 48, 73),
        (72, 3888, 4177),
        (8, 0, 17),
    ],
)
def test_splitting_prime(conductor, lower_bound, expected):
    """Test the least prime 1 mod conductor above a bound."""
    assert splitting_prime(conductor, lower_bound) == expected


def test_splitting_prime_budget():
    """Test that primes above 2^31 are refused."""
    with pytest.raises(BudgetExceeded):
        splitting_prime(2, 2**31)


def test_wedderburn_signature_properties():
    """Test the derived quantities of a signature."""
    signature = WedderburnSignature({1: 4, 2: 3}, 16)
    assert signature.max_block == 2
    assert signature.block_count == 7
    assert signature.total == 16
    assert signature == WedderburnSignature({1: 4, 2: 3}, 16, seed=9)
    assert signature.as_dict()["blocks"] == [
        {"m": 1, "count": 4},
        {"m": 2, "count": 3},
    ]


def test_blocks_as_list():
    """Test that empty counts are dropped and sizes sorted."""
    assert blocks_as_list({3: 1, 1: 0, 2: 2}) == [
        {"m": 2, "count": 2},
        {"m": 3, "count": 1},
    ]


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_spectral_blocks_split_conjugate_blocks(gl32, seed):
    """Test that blocks of End(V^1_chi) with conjugate characters stay apart."""
    chi = parity_representatives(gl32)[1]
    algebra = hecke_build(dgg_module(gl32, chi, 1))
    x = random_self_adjoint(algebra, seed)
    assert np.any(np.abs(x.imag) > 1e-6)
    np.testing.assert_allclose(algebra.star_vector(x), x, atol=1e-9)
    assert spectral_blocks(algebra, seed) == {1: 5, 2: 2}
