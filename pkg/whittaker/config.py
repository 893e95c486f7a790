"""Load and merge run configuration."""
from __future__ import annotations

import copy
import logging
import os
from typing import Any

import yaml

from whittaker.components import validate_config
from whittaker.const import CONFIG_PATH_ENV
from whittaker.exceptions import ConfigurationError

LOGGER = logging.getLogger(__name__)


def load_config(path: str | None = None) -> dict[str, Any]:
    """Return the contents of a YAML config file, or {} without one.

    Without a path the file named by the WHITTAKER_CONFIG environment variable is
    read if it is set.
    """
    path = path or os.environ.get(CONFIG_PATH_ENV)
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as config_file:
            yaml_config = yaml.load(config_file, Loader=yaml.SafeLoader)
    except FileNotFoundError as error:
        raise ConfigurationError(f"Unable to find configuration {path}") from error
    except yaml.YAMLError as error:
        message = f"Unable to parse configuration {path}: {error}"
        raise ConfigurationError(message) from error

    if yaml_config is None:
        yaml_config = {}
    if not isinstance(yaml_config, dict):
        raise ConfigurationError(f"Configuration {path} is not a mapping")

    # Convert values to dictionaries if they are None
    for key, value in yaml_config.items():
        yaml_config[key] = value or {}
    LOGGER.debug("Loaded configuration from %s", path)
    return yaml_config


def merge_overrides(
    config: dict[str, Any], overrides: dict[str, dict[str, Any]]
) -> dict[str, Any]:
    """Return config with the non-None override values written into their sections."""
    merged = copy.deepcopy(config)
    for section, values in overrides.items():
        current = merged.setdefault(section, {})
        if not isinstance(current, dict):
            message = f"Section {section} of the configuration is not a mapping"
            raise ConfigurationError(message)
        current.update({k: v for k, v in values.items() if v is not None})
    return merged


def build_config(
    path: str | None = None, overrides: dict[str, dict[str, Any]] | None = None
) -> dict[str, Any]:
    """Return the validated configuration, command line values winning over the file."""
    return validate_config(merge_overrides(load_config(path), overrides or {}))
