import sys

from seatreasure.cli import main

sys.exit(main())
