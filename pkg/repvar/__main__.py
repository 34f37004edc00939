import sys

from repvar.cli import main

sys.exit(main())
