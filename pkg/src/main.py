# FILE: src/main.py - command-line entry point
#
#   python src/main.py check --p 5 --f "y" --g "x^2"
#   python src/main.py selftest

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from backend.cli import run  # noqa: E402

if __name__ == "__main__":
    sys.exit(run())
