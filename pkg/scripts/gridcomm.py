#!/usr/bin/env python3
"""
Run the gridcomm command line from a source checkout.

Usage:
    scripts/gridcomm.py stats --nodes data/nodes.csv --edges data/edges.csv --prune-islands
    scripts/gridcomm.py simplify --nodes data/nodes.csv --edges data/edges.csv --out data/simplified
    scripts/gridcomm.py compare reference.json candidate.json --tol.ratio=0.01
    scripts/gridcomm.py plot-data profile.json
"""

import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from gridcomm.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
