import sys

from anisobolev.workflow.cli import main

sys.exit(main())
