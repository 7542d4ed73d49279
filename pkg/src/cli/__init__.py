"""
Command-line front end: subcommands over files in the JSON interchange format.
"""

from src.cli.app import build_parser, run
from src.cli.report import Report
