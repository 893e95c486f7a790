"""Test constructions component."""
from contextlib import nullcontext

import pytest

from whittaker.components.characters import UnitCharacter
from whittaker.components.constructions import (
    check_mult_free_restriction,
    has_central_character,
    injective_pairs,
    regular_count,
    regular_dimension,
    regular_even_from_SA,
    sns_from_ncA,
    sns_shapes,
    ss_characters,
    ss_from_borel,
)
from whittaker.components.group_core import Mat2, conjugacy_classes, enumerate_gl2
from whittaker.components.local_ring import make_ring
from whittaker.exceptions import BadParam, InexactResult, NotInjectivePair, NotRegular


@pytest.mark.parametrize(
    "kind, ell, dimension, count",
    [
        ("split-semisimple", 1, 4, 1),
        ("split-non-semisimple", 1, 3, 2),
        ("cuspidal", 1, 2, 3),
        ("split-semisimple", 2, 12, 12),
        ("split-non-semisimple", 2, 8, 18),
        ("cuspidal", 2, 6, 24),
    ],
)
def test_regular_closed_forms(kind, ell, dimension, count):
    """Test dimensions and counts of regular irreducibles for q = 3."""
    assert regular_dimension(kind, 3, ell) == dimension
    assert regular_count(kind, 3, ell) == count


def test_ss_characters_gl31(classes31):
    """Test the principal series of GL2(F_3)."""
    characters = ss_characters(classes31)
    assert len(characters) == 1
    assert characters[0].degree == 4
    assert characters[0].metadata["type"] == "split-semisimple"


def test_ss_characters_gl32(classes32):
    """Test the twelve split semisimple irreducibles of GL2(Z/9)."""
    characters = ss_characters(classes32)
    assert len(characters) == 12
    assert {character.degree for character in characters} == {12}
    assert all(character.norm() == 1 for character in characters)


def test_injective_pairs(ring32):
    """Test the unordered pairs with injective quotient."""
    assert len(list(injective_pairs(ring32))) == 12


def test_ss_from_borel_not_injective(classes32):
    """Test that a pair with non-injective quotient is refused."""
    with pytest.raises(NotInjectivePair):
        ss_from_borel(classes32, 0, 0)


def test_ss_central_character(classes32):
    """Test that Ind (chi1, chi2) has central character chi1 chi2."""
    first, second = next(iter(injective_pairs(classes32.group.ring)))
    character = ss_from_borel(classes32, first, second)
    ring = classes32.group.ring
    central = UnitCharacter(ring, first) * UnitCharacter(ring, second)
    assert has_central_character(character, central.index)


@pytest.mark.parametrize(
    "rows, kind, degree, raises",
    [
        ([[0, 1], [2, 0]], "cuspidal", 6, nullcontext()),
        ([[1, 0], [0, 2]], "split-semisimple", 12, nullcontext()),
        ([[1, 1], [0, 1]], "split-non-semisimple", 8, nullcontext()),
        ([[1, 0], [0, 1]], None, None, pytest.raises(NotRegular)),
    ],
)
def test_regular_even_from_sa(classes32, rows, kind, degree, raises):
    """Test the regular irreducibles of GL2(Z/9) induced from S_x."""
    with raises:
        character = regular_even_from_SA(classes32, rows)
        assert character.metadata["type"] == kind
        assert character.degree == degree
        assert character.norm() == 1


def test_regular_even_from_sa_odd_level(classes31):
    """Test that S_x needs an even level."""
    with pytest.raises(BadParam):
        regular_even_from_SA(classes31, [[0, 1], [2, 0]])


def test_sns_from_nca_even_level(classes32, ring32):
    """Test that N C(A) needs an odd level of at least three."""
    with pytest.raises(BadParam):
        sns_from_ncA(classes32, Mat2.of(ring32, [[0, 1], [0, 0]]))


def test_sns_shapes():
    """Test the shapes (alpha 1; pi^j beta alpha) over o_1."""
    shapes = list(sns_shapes(make_ring(3, 3)))
    # j = 1 only, beta = 0
    assert len(shapes) == 3
    assert all(shape.b.rep == 1 for shape in shapes)


@pytest.fixture(name="classes33", scope="module")
def fixture_classes33():
    """Return the conjugacy classes of GL2(Z/27)."""
    return conjugacy_classes(enumerate_gl2(make_ring(3, 3)))


@pytest.mark.slow
def test_sns_from_nca(classes33):
    """Test an sns irreducible of GL2(Z/27) induced from N C(A)."""
    A = Mat2.of(classes33.group.ring, [[1, 1], [0, 1]])
    character = sns_from_ncA(classes33, A)
    assert character.degree == 24
    assert character.norm() == 1


@pytest.mark.slow
@pytest.mark.parametrize("d", [1, 2])
@pytest.mark.parametrize("t", [2, 3])
def test_check_mult_free_restriction(classes33, t, d):
    """Test that induction from U_A K(2) to U_A K(1) is multiplicity free."""
    G = classes33.group
    assert check_mult_free_restriction(G, t, 1, d=d) == G.ring.q


@pytest.mark.slow
def test_check_mult_free_restriction_out_of_range(classes33, mocker):
    """Test that an intertwiner outside [q, q^2] raises."""
    mocker.patch("whittaker.components.constructions.mackey_hom", return_value=10)
    with pytest.raises(InexactResult):
        check_mult_free_restriction(classes33.group, 2, 1)


@pytest.mark.slow
@pytest.mark.parametrize("t, i", [(1, 1), (2, 2), (4, 1)])
def test_check_mult_free_restriction_bad_params(classes33, t, i):
    """Test that t >= ell2 and i <= ell1 are required."""
    with pytest.raises(BadParam):
        check_mult_free_restriction(classes33.group, t, i)


def test_check_mult_free_restriction_bad_level(gl32):
    """Test that the restriction check needs ell odd."""
    with pytest.raises(BadParam):
        check_mult_free_restriction(gl32, 1, 1)
