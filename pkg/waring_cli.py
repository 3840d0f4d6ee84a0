#!/usr/bin/env python3
"""
Command-line runner for waringbound without installing the package.

Usage:
    python waring_cli.py phi --n 2 --m 3 "(x1+x2)^4"
    python waring_cli.py certify --powersum sums.json
    python waring_cli.py finite-ring --q 2-500 --k 2 --format csv
"""

import sys
from pathlib import Path

# Add src directory to path if running as script
if __name__ == "__main__":
    sys.path.insert(0, str(Path(__file__).parent / "src"))

from waringbound.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
