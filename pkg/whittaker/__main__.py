"""Start whittaker."""
from __future__ import annotations

import sys

from whittaker.components.cli import init as init_cli


def main() -> int:
    """Run the command line."""
    return init_cli(sys.argv[1:])


def init() -> int:
    """Initialize."""
    if __name__ == "__main__":
        return main()
    return 1


sys.exit(init())
