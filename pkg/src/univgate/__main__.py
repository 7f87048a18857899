import sys

from univgate.cli import main

sys.exit(main())
