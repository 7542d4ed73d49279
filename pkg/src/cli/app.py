"""
Argument parsing and dispatch for the hopfimage command line.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from config import DEFAULT_MAX_WORD_LENGTH, EXIT_USAGE, OUTPUT_MODE
from src.cli.commands import COMMANDS
from src.data.interchange import write_document
from src.data.session import SessionConfig
from src.utils.error_handling import ErrorHandler, HopfImageError
from src.utils.logging import setup_logging


logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Arguments do not match any subcommand."""


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises instead of exiting on bad arguments."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_out(parser):
    parser.add_argument("--out", help="Write the emitted document to this file instead of stdout")


def _builder_parsers(subparsers):
    builder = subparsers.add_parser("builder", help="Build an example Hopf algebra")
    common = ArgumentParser(add_help=False)
    common.add_argument("--conductor", type=int, default=argparse.SUPPRESS,
                        help="Conductor N of the base field Q(zeta_N)")
    _add_out(common)
    common.add_argument("--grouplikes-out", help="Write the known group-likes here")
    common.add_argument("--comodules-out", help="Write the known simple comodules here")
    common.add_argument("--rep-out", help="Write the selected representation here")
    families = builder.add_subparsers(dest="family", parser_class=ArgumentParser)
    families.required = True

    p = families.add_parser("group-algebra", parents=[common], help="k[G]")
    p.add_argument("--group", required=True, help='Group such as "Z6", "D4", "S3" or "Z2xZ2"')
    p.add_argument("--cyclic-power", type=int, help="Representation x -> zeta_n^j of a cyclic group")

    p = families.add_parser("function-algebra", parents=[common], help="k^G")
    p.add_argument("--group", required=True, help='Group such as "Z6", "D4", "S3" or "Z2xZ2"')
    p.add_argument("--points", nargs="+", help="Element labels for the evaluation representation")

    p = families.add_parser("taft", parents=[common], help="Taft algebra of dimension n^2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", help="Primitive n-th root of unity (default zeta_n)")

    p = families.add_parser("ake", parents=[common], help="The quotient A(k, e) of dimension 4k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--e", type=int, required=True, choices=(1, -1))
    which = p.add_mutually_exclusive_group()
    which.add_argument("--q-order", type=int, help="Representation pi_q with q a primitive root of this order")
    which.add_argument("--degraded", action="store_true", help="Both generators to the flip (e = +1 only)")

    p = families.add_parser("sym", parents=[common], help="k^{S_n}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", nargs="+", help="Permutations in cycle notation, e.g. (12) (123)")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="hopfimage", description="Exact Hopf images over cyclotomic fields")
    parser.add_argument("--json", action="store_true", help="Machine-readable report")
    parser.add_argument("--conductor", type=int, help="Conductor N of the base field Q(zeta_N)")
    parser.add_argument("--log-level", type=str.upper, choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"))
    parser.add_argument("--log-file", help="Also log to this rotating file")
    subparsers = parser.add_subparsers(dest="command", parser_class=ArgumentParser)
    subparsers.required = True

    p = subparsers.add_parser("validate", help="Check the axioms of a Hopf algebra or representation file")
    p.add_argument("file")

    for name, text in (("hopf-image", "Compute the Hopf image of a representation"),
                       ("inner-faithful", "Decide inner faithfulness")):
        p = subparsers.add_parser(name, help=text)
        p.add_argument("hopf")
        p.add_argument("rep")
        if name == "hopf-image":
            _add_out(p)

    p = subparsers.add_parser("grouplikes", help="Find the group-like elements")
    p.add_argument("hopf")
    p.add_argument("--candidates", help="Group-like document with candidate vectors")
    _add_out(p)

    p = subparsers.add_parser("skew-primitives", help="The space of (g, h)-skew-primitives")
    p.add_argument("hopf")
    p.add_argument("--g", required=True, help="Basis label or comma-separated scalars")
    p.add_argument("--h", required=True, help="Basis label or comma-separated scalars")

    p = subparsers.add_parser("pointed-criterion", help="Inner faithfulness test for pointed Hopf algebras")
    p.add_argument("hopf")
    p.add_argument("rep")
    p.add_argument("--grouplikes", required=True)
    p.add_argument("--side", choices=("left", "right"), default="left")

    p = subparsers.add_parser("twist", help="Classify a twist and emit the twisted Hopf algebra")
    p.add_argument("hopf")
    p.add_argument("twist")
    _add_out(p)

    p = subparsers.add_parser("cotwist", help="Check a 2-cocycle and emit the cotwisted Hopf algebra")
    p.add_argument("hopf")
    p.add_argument("cocycle")
    _add_out(p)

    p = subparsers.add_parser("tensor", help="Tensor product of two Hopf algebras")
    p.add_argument("hopf1")
    p.add_argument("hopf2")
    _add_out(p)

    p = subparsers.add_parser("tensor-rep", help="Tensor product of two representations")
    p.add_argument("rep1")
    p.add_argument("rep2")
    _add_out(p)

    p = subparsers.add_parser("pi-hom", help="Hom dimensions over H, H_pi and after pi")
    p.add_argument("rep")
    p.add_argument("comod1")
    p.add_argument("comod2")

    p = subparsers.add_parser("thm92", aliases=["level-two-criterion"],
                              help="Sufficient conditions when simple comodules have dimension <= 2")
    p.add_argument("rep")
    p.add_argument("--grouplikes", required=True)
    p.add_argument("--comodules", required=True)

    p = subparsers.add_parser("truncated-criterion", help="Invariant dimensions of tensor words up to a length")
    p.add_argument("rep")
    p.add_argument("comod")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_WORD_LENGTH)
    p.add_argument("--self-dual", action="store_true", help="Use the one-letter alphabet")

    _builder_parsers(subparsers)
    return parser


def _emit(report, session: SessionConfig, out: Optional[str]):
    written = False
    if out and report.document is not None:
        write_document(report.document, out)
        written = True
    if report.summary_on_stderr(session.json_output, written):
        sys.stderr.write(report.summary())
    sys.stdout.write(report.render(session.json_output, written))
    sys.stdout.flush()


def run(argv: Sequence[str]) -> int:
    """
    Parse arguments, run one subcommand and print its report.

    Returns:
        0 on success, 1 on a usage error, 2 on invalid input and 3 when a
        predicate subcommand answers no
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.log_level, args.log_file)
    error_handler = ErrorHandler()
    try:
        session = SessionConfig(args.command, args.conductor, "json" if args.json else OUTPUT_MODE)
        report = COMMANDS[args.command](args, session)
        _emit(report, session, getattr(args, "out", None))
    except (HopfImageError, ValueError, OSError) as e:
        return error_handler.handle_error(e, args.command)
    logger.info(f"{args.command} finished with exit code {report.exit_code}")
    return report.exit_code
