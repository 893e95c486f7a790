"""Test characters component."""
from collections import Counter

import numpy as np
import pytest

from whittaker.components.characters import (
    BorelPair,
    ChiZ,
    MuAlpha,
    PsiADoublePrime,
    PsiAPrime,
    PsiT,
    PsiX,
    TensorZU,
    TripleZtU,
    UnitCharacter,
    additive_exponents,
    char_eval,
    check_multiplicative,
    chi_parity,
    count_C,
    delta_extensions,
    gamma_character_indices,
    is_injective_char,
    lambda_of,
    list_central_chars,
    psi_a_double_primes,
    unit_characters,
)
from whittaker.components.characters.const import VARIANTS
from whittaker.components.group_core import Mat2, build_subgroup
from whittaker.components.local_ring import make_ring
from whittaker.exceptions import BadParam, BadShape, OutOfDomain
from whittaker.helpers.cyclotomic import Cyclotomic


def test_unit_character_range(ring32):
    """Test that unit character indices are checked."""
    assert len(unit_characters(ring32)) == 6
    with pytest.raises(BadParam):
        UnitCharacter(ring32, 6)


def test_unit_character_group(ring32):
    """Test products and inverses of unit characters."""
    for chi in unit_characters(ring32):
        assert (chi * chi.inverse()).index == 0
        x = ring32.elem(2)
        assert chi(x) * chi.inverse()(x) == 1


def test_central_characters(gl32):
    """Test the characters of the centre."""
    central = list_central_chars(gl32)
    assert len(central) == 6
    assert Counter(chi_parity(chi) for chi in central) == {1: 3, -1: 3}
    assert all(check_multiplicative(chi) for chi in central)
    minus_one = Mat2.of(gl32.ring, [[8, 0], [0, 8]])
    assert central[0](minus_one) == 1


@pytest.mark.parametrize(
    "index, expected",
    [
        (0, 0),
        (1, 1),
    ],
)
def test_lambda_of(ring32, index, expected):
    """Test chi(1 + 3x) = psi(3 lambda x)."""
    assert lambda_of(UnitCharacter(ring32, index)).rep == expected


def test_lambda_of_field(ring31):
    """Test that lambda is zero over a field."""
    assert lambda_of(UnitCharacter(ring31, 1)).rep == 0


def test_lambda_of_defines_chi(ring32):
    """Test chi(1 + 3x) = psi(3 lambda x) for every x and chi."""
    x = np.arange(9)
    shifted = (1 + 3 * x) % 9
    for chi in unit_characters(ring32):
        lam = lambda_of(chi).rep
        expected = additive_exponents(ring32, (3 * lam * x) % 9)
        assert np.array_equal(chi.exponents(shifted), expected)


@pytest.mark.parametrize(
    "p, ell, injective, expected",
    [
        (3, 1, 1, 2),
        (3, 2, 4, 24),
        (5, 1, 3, 12),
    ],
)
def test_count_c(p, ell, injective, expected):
    """Test the number of pairs with injective quotient."""
    ring = make_ring(p, ell)
    assert sum(is_injective_char(chi) for chi in unit_characters(ring)) == injective
    assert count_C(ring) == expected
    # q^(2 ell - 3) (q - 1)^3 for ell >= 2
    if ell >= 2:
        assert expected == p ** (2 * ell - 3) * (p - 1) ** 3


@pytest.mark.parametrize("t, expected", [(0, 6), (1, 3), (2, 1)])
def test_gamma_character_indices(ring32, t, expected):
    """Test the distinct restrictions to 1 + pi^t o."""
    assert len(gamma_character_indices(ring32, t)) == expected


@pytest.mark.parametrize("t", [0, 1, 2])
def test_psi_t(gl32, t):
    """Test psi_t on U: trivial for t = 0, of order 3^t otherwise."""
    character = PsiT(build_subgroup(gl32, "U"), t)
    assert check_multiplicative(character)
    values = set((character.table * 3**t) % gl32.ring.conductor)
    assert values == {0}
    assert len(set(character.table.tolist())) == 3**t


def test_psi_t_bad_level(gl32):
    """Test that t is checked."""
    with pytest.raises(BadParam):
        PsiT(build_subgroup(gl32, "U"), 3)


def test_out_of_domain(gl32):
    """Test that characters refuse elements outside their domain."""
    character = PsiT(build_subgroup(gl32, "U"), 1)
    with pytest.raises(OutOfDomain):
        character(Mat2.of(gl32.ring, [[1, 0], [1, 1]]))


def test_psi_x_example(gl32):
    """Test psi_x(g) = psi(tr(x (g - I))) on K(1)."""
    k1 = build_subgroup(gl32, "K", i=1)
    x = Mat2.of(gl32.ring, [[0, 1], [0, 0]])
    character = PsiX(k1, x, 1)
    g = Mat2.of(gl32.ring, [[1, 0], [3, 1]])
    # tr(x (g - I)) = 3
    assert char_eval(character, g) == Cyclotomic.root_of_unity(1, 3)
    assert character(Mat2.of(gl32.ring, [[1, 3], [0, 1]])) == 1


def test_psi_x_duality(gl32):
    """Test that x -> psi_x is a bijection from gl2(F_3) to the dual of K(1)."""
    k1 = build_subgroup(gl32, "K", i=1)
    tables = set()
    for entries in np.ndindex(3, 3, 3, 3):
        x = Mat2.of(gl32.ring, [[entries[0], entries[1]], [entries[2], entries[3]]])
        character = PsiX(k1, x, 1)
        tables.add(tuple(character.table.tolist()))
    assert len(tables) == 81


def test_tensor_and_triple(gl32):
    """Test that the characters of ZU and Z^t U are multiplicative."""
    zu = build_subgroup(gl32, "ZU")
    ztu = build_subgroup(gl32, "ZtU", t=1)
    for index in range(6):
        assert check_multiplicative(TensorZU(zu, index, 1))
    for prime_index in gamma_character_indices(gl32.ring, 1):
        assert check_multiplicative(TripleZtU(ztu, 1, prime_index, 1))


def test_borel_pair(gl31):
    """Test (chi1, chi2) on B."""
    borel = build_subgroup(gl31, "B")
    character = BorelPair(borel, 1, 0)
    assert check_multiplicative(character)
    g = Mat2.of(gl31.ring, [[2, 1], [0, 1]])
    assert character(g) == -1


def test_delta_extensions(ring32):
    """Test that each delta_alpha has q^ell1 (q - 1) / q extensions."""
    for alpha in range(3):
        extensions = delta_extensions(ring32, alpha)
        assert len(extensions) == 2
        assert all(lambda_of(chi).rep == alpha for chi in extensions)


def test_mu_alpha(gl32):
    """Test mu_alpha = delta o det."""
    character = MuAlpha(gl32, 1)
    g = Mat2.of(gl32.ring, [[4, 0], [0, 1]])
    assert character(g) == character.delta(gl32.ring.elem(4))
    with pytest.raises(BadParam):
        MuAlpha(gl32, 1, ext=2)


def test_chi_z_of_unit_character(gl32):
    """Test that a central character agrees with its unit character."""
    centre = build_subgroup(gl32, "Z")
    character = ChiZ(centre, 4)
    two = Mat2.of(gl32.ring, [[2, 0], [0, 2]])
    assert character(two) == character.chi(gl32.ring.elem(2))


def test_variants_registered():
    """Test that every character class reports a known variant."""
    kinds = [
        BorelPair,
        ChiZ,
        MuAlpha,
        PsiADoublePrime,
        PsiAPrime,
        PsiT,
        PsiX,
        TensorZU,
        TripleZtU,
        UnitCharacter,
    ]
    assert {kind.variant for kind in kinds} <= set(VARIANTS)
    assert len(set(VARIANTS)) == len(VARIANTS)


@pytest.mark.parametrize("rows", [[[1, 1], [0, 1]], [[2, 1], [3, 2]]])
@pytest.mark.parametrize("mu_ext", [0, 1])
def test_psi_a_double_primes(gl32, rows, mu_ext):
    """Test that the extensions of psi_A' to N C(A) restrict to psi_A' on N."""
    A = Mat2.of(gl32.ring, rows)
    extensions = psi_a_double_primes(gl32, A, mu_ext)
    normal = build_subgroup(gl32, "N", A=A)
    target = build_subgroup(gl32, "NC_A", A=A)
    # N C(A) / N = C(A) / (C(A) cap N) has order 54 / 27
    assert len(extensions) == target.order // normal.order == 2
    base = extensions[0].base
    assert isinstance(base, PsiAPrime)
    assert check_multiplicative(base)
    for extension in extensions:
        assert isinstance(extension, PsiADoublePrime)
        assert extension.domain.order == target.order
        assert check_multiplicative(extension)
        np.testing.assert_array_equal(
            extension.exponents(normal.elements), base.exponents(normal.elements)
        )
    assert not np.array_equal(extensions[0].table, extensions[1].table)


def test_psi_a_prime_bad_shape(gl32):
    """Test that psi_A' needs A = (alpha 1; pi^j beta alpha)."""
    with pytest.raises(BadShape):
        psi_a_double_primes(gl32, Mat2.of(gl32.ring, [[1, 0], [0, 2]]))
