"""
Quick smoke tests / examples for the pclosed command line.

Run with:
    python src/examples/quick_smoke_tests.py
from the project root.
"""

import sys
from pathlib import Path

# Ensure the src/ directory is on the path so the packages can be found
# whether the script is run as a module or directly.
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from backend.cli import run

EXAMPLES = [
    ["check", "--p", "5", "--f", "y", "--g", "x^2"],
    ["check", "--p", "5", "--f", "(x-y)^4", "--g", "(x-y)^4"],
    ["check", "--p", "3", "--f", "1", "--g", "x^2"],
    ["multiplier", "--p", "3", "--f", "x + y^2, x*y"],
    ["decompose", "--p", "5", "--f", "x^2", "--g", "3*x*y"],
    ["cartier", "--p", "5", "--u", "x^4", "--v", "0"],
    ["classify-monomial", "--p", "5", "--mx", "2", "--my", "1"],
    ["series-gen", "--p", "3", "--h", "x*y", "--c", "1", "--level", "1"],
]


def run_example(argv):
    print(f"\n=== pclosed {' '.join(argv)} ===")
    code = run(argv)
    print(f"exit code: {code}")
    return code


def main():
    failures = [argv for argv in EXAMPLES if run_example(argv) != 0]
    if failures:
        print(f"\n{len(failures)} example(s) failed")
        sys.exit(1)


if __name__ == "__main__":
    main()
