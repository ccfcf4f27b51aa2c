import sys

from lpsym.cli.main import main

sys.exit(main())
