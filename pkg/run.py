"""Entry point: runs the repvar command line (same as ``python -m repvar``)."""
import sys

from repvar.cli import main

if __name__ == "__main__":
    sys.exit(main())
