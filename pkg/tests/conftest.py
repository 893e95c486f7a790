"""Whittaker fixtures."""
from __future__ import annotations

from collections.abc import Iterator
from unittest.mock import patch

import pytest

from whittaker.components.chartab import CharacterTable, classify_all, table_of
from whittaker.components.chartab.table import IrrepRecord
from whittaker.components.group_core import (
    ConjugacyClasses,
    GroupHandle,
    conjugacy_classes,
    enumerate_gl2,
)
from whittaker.components.local_ring import RingSpec, make_ring


def pytest_addoption(parser: pytest.Parser) -> None:
    """Add the --runslow option."""
    parser.addoption(
        "--runslow", action="store_true", default=False, help="Run slow tests."
    )


def pytest_collection_modifyitems(
    config: pytest.Config, items: list[pytest.Item]
) -> None:
    """Skip tests marked slow unless --runslow is given."""
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="Needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session", autouse=True)
def patch_enable_logging() -> Iterator[None]:
    """Patch enable_logging to avoid adding duplicate handlers."""
    with patch("whittaker.enable_logging"):
        yield


@pytest.fixture(scope="session")
def ring31() -> RingSpec:
    """Return Z/3."""
    return make_ring(3, 1)


@pytest.fixture(scope="session")
def ring32() -> RingSpec:
    """Return Z/9."""
    return make_ring(3, 2)


@pytest.fixture(scope="session")
def gl31(ring31: RingSpec) -> GroupHandle:
    """Return GL2(Z/3)."""
    return enumerate_gl2(ring31)


@pytest.fixture(scope="session")
def gl32(ring32: RingSpec) -> GroupHandle:
    """Return GL2(Z/9)."""
    return enumerate_gl2(ring32)


@pytest.fixture(scope="session")
def classes31(gl31: GroupHandle) -> ConjugacyClasses:
    """Return the conjugacy classes of GL2(Z/3)."""
    return conjugacy_classes(gl31)


@pytest.fixture(scope="session")
def classes32(gl32: GroupHandle) -> ConjugacyClasses:
    """Return the conjugacy classes of GL2(Z/9)."""
    return conjugacy_classes(gl32)


@pytest.fixture(scope="session")
def table31(classes31: ConjugacyClasses) -> CharacterTable:
    """Return the character table of GL2(Z/3)."""
    return table_of(classes31)


@pytest.fixture(scope="session")
def table32(classes32: ConjugacyClasses) -> CharacterTable:
    """Return the character table of GL2(Z/9)."""
    return table_of(classes32)


@pytest.fixture(scope="session")
def records31(table31: CharacterTable) -> list[IrrepRecord]:
    """Return the classified irreducibles of GL2(Z/3)."""
    return classify_all(table31)


@pytest.fixture(scope="session")
def records32(table32: CharacterTable) -> list[IrrepRecord]:
    """Return the classified irreducibles of GL2(Z/9)."""
    return classify_all(table32)
