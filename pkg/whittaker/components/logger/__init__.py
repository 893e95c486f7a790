"""Logger component.

Levels set here win over anything a module sets later on its own logger.
"""
from __future__ import annotations

import logging
from typing import Any, Final

import voluptuous as vol

from whittaker.helpers.validators import CoerceNoneToDict, Maybe

from .const import (
    COMPONENT,
    CONFIG_DEFAULT_LEVEL,
    CONFIG_LOGS,
    DEFAULT_LOG_LEVEL,
    DEFAULT_LOGS,
    DESC_COMPONENT,
    DESC_DEFAULT_LEVEL,
    DESC_LOGGER_NAME,
    DESC_LOGS,
    VALID_LOG_LEVELS,
)

CONFIG_SCHEMA: Final = vol.Schema(
    {
        vol.Optional(COMPONENT, default={}, description=DESC_COMPONENT): vol.Schema(
            {
                vol.Optional(
                    CONFIG_DEFAULT_LEVEL,
                    default=DEFAULT_LOG_LEVEL,
                    description=DESC_DEFAULT_LEVEL,
                ): vol.All(vol.Lower, vol.In(VALID_LOG_LEVELS)),
                vol.Optional(
                    CONFIG_LOGS, default=DEFAULT_LOGS, description=DESC_LOGS
                ): vol.All(
                    Maybe(
                        {
                            vol.Required(str, description=DESC_LOGGER_NAME): vol.All(
                                vol.Lower, vol.In(VALID_LOG_LEVELS)
                            )
                        }
                    ),
                    CoerceNoneToDict(),
                ),
            }
        )
    },
    extra=vol.ALLOW_EXTRA,
)

# Logger names whose level is pinned by the configuration
_OVERRIDES: dict[str, str] = {}


def setup(config: dict[str, Any]) -> bool:
    """Set up the logger component."""
    _OVERRIDES.clear()
    logging.setLoggerClass(_get_logger_class(_OVERRIDES))

    _set_log_level(logging.getLogger(""), config[COMPONENT][CONFIG_DEFAULT_LEVEL])

    logpoints = config[COMPONENT][CONFIG_LOGS]
    _OVERRIDES.update(logpoints)
    for key, value in logpoints.items():
        _set_log_level(logging.getLogger(key), value)

    return True


def _set_log_level(logger: logging.Logger, level: str) -> None:
    """Set log level."""
    getattr(logger, "orig_setLevel", logger.setLevel)(VALID_LOG_LEVELS[level])


def _get_logger_class(log_overrides: dict[str, str]) -> type[logging.Logger]:
    """Create a logger subclass.

    Used to make sure overridden log levels are set properly
    """

    class WhittakerLogger(logging.Logger):
        """Logger with built in level overrides."""

        def setLevel(self, level) -> None:
            """Set the log level unless overridden."""
            if self.name in log_overrides:
                return
            super().setLevel(level)

        # pylint: disable=invalid-name
        def orig_setLevel(self, level) -> None:
            """Set the log level."""
            super().setLevel(level)

    return WhittakerLogger
