"""Test local_ring component."""
from contextlib import nullcontext

import numpy as np
import pytest
import voluptuous as vol

from whittaker.components import local_ring
from whittaker.components.local_ring import (
    CONFIG_SCHEMA,
    RingSpec,
    elements,
    lift,
    make_ring,
    project,
    psi_eval,
    psi_exponent,
    ring_arith,
    units,
    val,
)
from whittaker.components.local_ring.multiplicative import unit_group
from whittaker.exceptions import BadIndex, BadParam, BudgetExceeded, NonUnit
from whittaker.helpers.cyclotomic import Cyclotomic


@pytest.mark.parametrize(
    "p, ell, flavor, size, unit_count, raises",
    [
        (3, 2, "zmod", 9, 6, nullcontext()),
        (3, 1, "tpoly", 3, 2, nullcontext()),
        (5, 3, "tpoly", 125, 100, nullcontext()),
        (2, 2, "zmod", None, None, pytest.raises(BadParam)),
        (9, 1, "zmod", None, None, pytest.raises(BadParam)),
        (3, 0, "zmod", None, None, pytest.raises(BadParam)),
        (3, 2, "padic", None, None, pytest.raises(BadParam)),
    ],
)
def test_make_ring(p, ell, flavor, size, unit_count, raises):
    """Test make_ring."""
    with raises:
        ring = make_ring(p, ell, flavor)
        assert ring.size == size
        assert ring.unit_count == unit_count
        assert len(units(ring)) == unit_count


def test_ring_name():
    """Test string representation of both flavors."""
    assert str(make_ring(3, 2)) == "Z/3^2"
    assert str(make_ring(3, 2, "tpoly")) == "F_3[t]/t^2"


def test_ring_halves():
    """Test ell1 = floor(ell / 2) and ell2 = ceil(ell / 2)."""
    ring = make_ring(3, 3)
    assert (ring.ell1, ring.ell2) == (1, 2)
    ring = make_ring(3, 4)
    assert (ring.ell1, ring.ell2) == (2, 2)


def test_conductor():
    """Test the conductor (q^2 - 1) p^ell."""
    assert make_ring(3, 1).conductor == 24
    assert make_ring(3, 2).conductor == 72


def test_ring_tables_budget():
    """Test that rings above the table budget are refused."""
    with pytest.raises(BudgetExceeded):
        _ = RingSpec(3, 7).tables


def test_inverse_zmod():
    """Test inv(2) = 5 in Z/9."""
    ring = make_ring(3, 2)
    assert ring_arith(ring.elem(2), None, "inv").rep == 5


def test_inverse_tpoly():
    """Test (1 + t)(1 - t) = 1 in F_3[t]/t^2."""
    ring = make_ring(3, 2, "tpoly")
    one_plus_t = ring.from_coefficients([1, 1])
    one_minus_t = ring.from_coefficients([1, -1])
    assert ring_arith(one_plus_t, one_minus_t, "mul") == ring.elem(1)
    assert one_plus_t.inverse() == one_minus_t


def test_inverse_non_unit():
    """Test that 3 has no inverse in Z/27."""
    ring = make_ring(3, 3)
    with pytest.raises(NonUnit):
        ring_arith(ring.elem(3), None, "inv")


@pytest.mark.parametrize("flavor", ["zmod", "tpoly"])
def test_inverse_exhaustive(flavor):
    """Test x * inv(x) = 1 for every unit."""
    ring = make_ring(3, 3, flavor)
    for x in elements(ring):
        if x.is_unit():
            assert (x * x.inverse()).rep == 1


def test_ring_arith_bad_op():
    """Test unknown operations and missing operands."""
    ring = make_ring(3, 2)
    with pytest.raises(BadParam):
        ring_arith(ring.elem(1), ring.elem(2), "div")
    with pytest.raises(BadParam):
        ring_arith(ring.elem(1), None, "add")


def test_mixed_rings():
    """Test that elements of different rings do not mix."""
    with pytest.raises(BadParam):
        _ = make_ring(3, 2).elem(1) + make_ring(3, 3).elem(1)


@pytest.mark.parametrize(
    "p, ell, flavor, rep, expected",
    [
        (3, 3, "zmod", 0, 3),
        (3, 3, "zmod", 6, 1),
        (3, 3, "tpoly", 18, 2),
        (3, 3, "tpoly", 5, 0),
        (5, 2, "zmod", 10, 1),
    ],
)
def test_val(p, ell, flavor, rep, expected):
    """Test val."""
    assert val(make_ring(p, ell, flavor).elem(rep)) == expected


def test_project_and_lift():
    """Test project and lift."""
    ring = make_ring(3, 2)
    assert project(ring.elem(7), 1).rep == 1
    small = make_ring(3, 1).elem(2)
    lifted = lift(small, 2)
    assert lifted.rep == 2
    assert lifted.ring == ring
    assert project(lifted, 1) == small

    tpoly = make_ring(3, 3, "tpoly")
    projected = project(tpoly.from_coefficients([0, 1, 2]), 2)
    assert projected.coefficients() == (0, 1)


def test_project_bad_index():
    """Test that projecting above ell fails."""
    ring = make_ring(3, 2)
    with pytest.raises(BadIndex):
        project(ring.elem(1), 3)
    with pytest.raises(BadIndex):
        lift(ring.elem(1), 1)


@pytest.mark.parametrize("flavor", ["zmod", "tpoly"])
def test_project_homomorphism(flavor):
    """Test that projection respects sums and products."""
    everything = elements(make_ring(3, 3, flavor))
    for x in everything:
        for y in everything[::4]:
            assert project(x * y, 2) == project(x, 2) * project(y, 2)
            assert project(x + y, 1) == project(x, 1) + project(y, 1)


def test_psi_eval():
    """Test the fixed additive character."""
    assert psi_eval(make_ring(3, 2).elem(0)) == 1
    assert psi_eval(make_ring(3, 1).elem(1)) == Cyclotomic.root_of_unity(1, 3)
    value = psi_eval(make_ring(3, 2).elem(3))
    assert value != 1
    assert value**3 == 1


@pytest.mark.parametrize("ell", [1, 2, 3])
@pytest.mark.parametrize("flavor", ["zmod", "tpoly"])
def test_psi_additive(ell, flavor):
    """Test psi(x + y) = psi(x) psi(y) and that psi sums to zero."""
    ring = make_ring(3, ell, flavor)
    reps = np.arange(ring.size)
    exponents = psi_exponent(ring, reps)
    sums = psi_exponent(ring, ring.tables.add)
    assert np.array_equal(
        sums % ring.size, (exponents[:, None] + exponents[None, :]) % ring.size
    )
    assert Cyclotomic.from_exponents(exponents, ring.size).is_zero()


@pytest.mark.parametrize("flavor", ["zmod", "tpoly"])
def test_psi_primitive(flavor):
    """Test that psi is nontrivial on pi^(ell - 1) o."""
    ring = make_ring(3, 3, flavor)
    top = ring.p ** (ring.ell - 1)
    assert any(psi_eval(ring.elem(top * u)) != 1 for u in range(1, ring.p))


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("ell", [1, 2, 3])
def test_unit_count(p, ell):
    """Test the unit count p^(ell - 1)(p - 1) against enumeration."""
    ring = make_ring(p, ell)
    assert sum(x.is_unit() for x in elements(ring)) == p ** (ell - 1) * (p - 1)


@pytest.mark.parametrize(
    "config, raises",
    [
        ({}, nullcontext()),
        ({"ring": {"p": 5, "ell": 3, "flavor": "TPOLY"}}, nullcontext()),
        ({"ring": {"p": 4}}, pytest.raises(vol.Invalid)),
        ({"ring": {"ell": 0}}, pytest.raises(vol.Invalid)),
        ({"ring": {"flavor": "padic"}}, pytest.raises(vol.Invalid)),
    ],
)
def test_config_schema(config, raises):
    """Test the ring section of the configuration."""
    with raises:
        validated = CONFIG_SCHEMA(config)
        assert validated["ring"]["p"] in (3, 5)
        assert validated["ring"]["flavor"] in ("zmod", "tpoly")


def test_units_after_submodule_import(ring32):
    """Test that importing the unit group module keeps units callable."""
    assert callable(local_ring.units)
    assert local_ring.units(ring32).tolist() == [1, 2, 4, 5, 7, 8]
    assert unit_group(ring32).character_count == 6
