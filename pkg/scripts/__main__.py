"""python -m baxterq"""

import sys

from .baxterq import main

sys.exit(main())
