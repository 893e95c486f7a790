"""Logger constants."""
from typing import Final

COMPONENT = "logger"


# CONFIG_SCHEMA constants
CONFIG_DEFAULT_LEVEL = "default_level"
CONFIG_LOGS = "logs"

DEFAULT_LOG_LEVEL = "info"
DEFAULT_LOGS: Final = None

DESC_COMPONENT = "Logger configuration."
DESC_DEFAULT_LEVEL = "Set default level for all logs."
DESC_LOGS = (
    "Map of logger names and their log level. "
    "Takes precedence over <code>default_level</code>."
)
DESC_LOGGER_NAME = "Log level for one logger name, e.g. whittaker.components.hecke."

VALID_LOG_LEVELS: Final = {
    "critical": 50,
    "error": 40,
    "warning": 30,
    "info": 20,
    "debug": 10,
}
