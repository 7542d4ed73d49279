#!/usr/bin/env python3
"""
Main entry point for the hopfimage toolkit.

Computes Hopf images of representations of finite-dimensional Hopf algebras
over cyclotomic fields, decides inner faithfulness and builds the standard
examples. Run `python main.py --help` for the subcommands.
"""

import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

from src.cli import run
from src.utils.error_handling import setup_global_exception_handler


def main():
    """Main function to run the command line."""
    setup_global_exception_handler()
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
