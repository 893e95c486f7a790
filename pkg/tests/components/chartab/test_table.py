"""Test character tables and the types of irreducibles."""
from collections import Counter

import numpy as np

from whittaker.components.chartab import table_of
from whittaker.components.chartab.dixon import dixon_prime
from whittaker.components.chartab.table import (
    central_character_index,
    induce_class_functions,
    irreducible_type,
    type_summary,
)
from whittaker.components.group_core import build_subgroup


def test_table_gl31(table31):
    """Test the character table of GL2(F_3)."""
    assert table31.count == 8
    assert table31.degrees == [1, 1, 2, 2, 2, 3, 3, 4]
    assert table31.as_dict()["degrees"] == {1: 2, 2: 3, 3: 2, 4: 1}
    trivial = table31.irreducibles[0]
    assert np.all(trivial.values[:, 0] == 1)
    table31.check()


def test_table_gl32(table32):
    """Test the character table of GL2(Z/9)."""
    assert table32.count == 78
    assert sum(d * d for d in table32.degrees) == 3888
    assert Counter(table32.degrees)[12] == 12


def test_dixon_prime():
    """Test the least prime 1 mod E above 2 sqrt(|G|)."""
    assert dixon_prime(48, 24) == 73
    assert dixon_prime(3888, 72) % 72 == 1


def test_decompose(table31):
    """Test that an irreducible decomposes as itself."""
    for index, character in enumerate(table31.irreducibles):
        assert table31.decompose(character) == {index: 1}
    doubled = table31.irreducibles[7] * 2
    assert table31.decompose(doubled) == {7: 2}


def test_records_gl31(records31):
    """Test types and central characters over F_3."""
    summary = type_summary(records31)
    assert summary["split-semisimple"] == {"count": 1, "dims": [4]}
    assert summary["split-non-semisimple"] == {"count": 2, "dims": [3]}
    assert summary["cuspidal"] == {"count": 3, "dims": [2]}
    assert summary["non-regular"] == {"count": 2, "dims": [1]}
    assert records31[0].central == 0
    assert not records31[0].regular


def test_irreducible_type_orbit(records32):
    """Test that a cuspidal of GL2(Z/9) has an orbit of q^2 - q matrices."""
    cuspidal = next(record for record in records32 if record.kind == "cuspidal")
    kind, orbit = irreducible_type(cuspidal.character)
    assert kind == "cuspidal"
    assert len(orbit) == 6
    assert central_character_index(cuspidal.character) == cuspidal.central


def test_induce_class_functions(table31, gl31):
    """Test Ind_B^G of the trivial character of B."""
    borel = build_subgroup(gl31, "B")
    sub_table = table_of(borel)
    induced = induce_class_functions(sub_table.irreducibles[:1], table31.classes)
    assert induced[0].degree == 4
    assert sum(table31.decompose(induced[0]).values()) == 2
