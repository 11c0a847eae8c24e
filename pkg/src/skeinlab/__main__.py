import sys

from skeinlab.cli import main

sys.exit(main())
