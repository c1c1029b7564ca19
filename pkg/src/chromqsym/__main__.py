import sys

from chromqsym.cli import main

sys.exit(main())
