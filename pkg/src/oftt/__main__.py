import sys

from oftt.cli import main

sys.exit(main())
