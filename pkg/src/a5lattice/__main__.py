"""``python -m a5lattice``."""

import sys

from .cli import main

sys.exit(main())
