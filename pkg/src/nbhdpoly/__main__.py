import sys

from nbhdpoly.cli import main

sys.exit(main())
