import sys

from varietas.cli.app import main

sys.exit(main())
