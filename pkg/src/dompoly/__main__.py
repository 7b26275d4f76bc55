import sys

from dompoly.cli import main

sys.exit(main())
