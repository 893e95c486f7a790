"""Test logger component."""
from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import nullcontext

import pytest
import voluptuous as vol

from whittaker.components.logger import CONFIG_SCHEMA, setup


@pytest.fixture
def restore_logging() -> Iterator[None]:
    """Restore the logger class and root level after the test."""
    root_level = logging.getLogger("").level
    yield
    logging.setLoggerClass(logging.Logger)
    logging.getLogger("").setLevel(root_level)


def test_setup_default_level(restore_logging) -> None:
    """Test that the default level is applied to the root logger."""
    config = CONFIG_SCHEMA({"logger": {"default_level": "WARNING"}})
    assert setup(config)
    assert logging.getLogger("").level == logging.WARNING


def test_setup_override(restore_logging) -> None:
    """Test that a configured logger keeps its level."""
    config = CONFIG_SCHEMA(
        {"logger": {"logs": {"whittaker.test_logger.pinned": "debug"}}}
    )
    setup(config)
    pinned = logging.getLogger("whittaker.test_logger.pinned")
    assert pinned.level == logging.DEBUG
    pinned.setLevel(logging.ERROR)
    assert pinned.level == logging.DEBUG

    free = logging.getLogger("whittaker.test_logger.free")
    free.setLevel(logging.ERROR)
    assert free.level == logging.ERROR


@pytest.mark.parametrize(
    "config, raises",
    [
        ({}, nullcontext()),
        ({"logger": None}, pytest.raises(vol.Invalid)),
        ({"logger": {"logs": None}}, nullcontext()),
        ({"logger": {"default_level": "verbose"}}, pytest.raises(vol.Invalid)),
        ({"logger": {"logs": {"whittaker": "loud"}}}, pytest.raises(vol.Invalid)),
    ],
)
def test_config_schema(config, raises) -> None:
    """Test the logger section of the configuration."""
    with raises:
        validated = CONFIG_SCHEMA(config)
        assert validated["logger"]["default_level"] == "info"
        assert validated["logger"]["logs"] == {}
