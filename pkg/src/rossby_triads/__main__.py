import sys

from .io_cli.cli import main

sys.exit(main())
