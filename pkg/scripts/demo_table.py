#!/usr/bin/env python3
"""Print the reproduction table over all shipped case studies.

Equivalent to `okbody demo`; extra arguments are forwarded to the CLI,
e.g. `python scripts/demo_table.py --max-level 3 --c 2`.
"""

import sys

from okbody.cli import main

if __name__ == "__main__":
    sys.exit(main(["demo", *sys.argv[1:]]))
