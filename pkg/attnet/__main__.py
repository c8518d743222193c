"""attnet module entry point.

Run with: python -m attnet
"""

import sys

from attnet.cli.main import main


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
