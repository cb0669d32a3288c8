import sys

from arithring.cli import main

sys.exit(main())
