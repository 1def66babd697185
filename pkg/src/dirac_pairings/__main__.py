import sys

from dirac_pairings.cli.main import main

sys.exit(main())
