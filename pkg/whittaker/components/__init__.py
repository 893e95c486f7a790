"""Components and their configuration."""
from __future__ import annotations

import importlib
import logging
from types import ModuleType
from typing import Any, Final

import voluptuous as vol
from voluptuous.humanize import humanize_error

from whittaker.exceptions import ConfigurationError

LOGGER = logging.getLogger(__name__)

# Components with a configuration section, in validation order
CONFIGURED_COMPONENTS: Final = (
    "local_ring",
    "group_core",
    "hecke",
    "chartab",
    "logger",
    "cli",
)


def get_component(name: str) -> ModuleType:
    """Return component module."""
    return importlib.import_module(f"{__name__}.{name}")


def validate_component_config(name: str, config: dict[str, Any]) -> dict[str, Any]:
    """Validate one component section and return the config with defaults filled in."""
    component_module = get_component(name)
    if not hasattr(component_module, "CONFIG_SCHEMA"):
        return config
    try:
        return component_module.CONFIG_SCHEMA(config)
    except vol.Invalid as ex:
        message = humanize_error(config, ex)
        raise ConfigurationError(
            f"Error validating config for component {name}: {message}"
        ) from ex


def validate_config(config: dict[str, Any]) -> dict[str, Any]:
    """Validate every component section."""
    for name in CONFIGURED_COMPONENTS:
        config = validate_component_config(name, config)
    LOGGER.debug("Validated configuration sections %s", sorted(config))
    return config
