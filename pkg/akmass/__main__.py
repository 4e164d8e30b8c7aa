"""__main__ for the akmass package."""

import sys

from akmass.cli import main


if __name__ == '__main__':
    sys.exit(main())
