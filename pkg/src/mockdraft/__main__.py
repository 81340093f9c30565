import sys

from mockdraft.cli import main

sys.exit(main())
