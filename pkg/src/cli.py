import argparse
import sys

from .cmds import shared
from .cmds.count import count
from .cmds.decompose import decompose_poly
from .cmds.enumerate import enumerate_tsrs
from .cmds.fiber import fiber
from .cmds.srim import srim
from .cmds.verify import SUITES, verify
from .errors import TsrError
from .tsr import FILTERS


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; here 2 means a count mismatch, so usage exits 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_shape(parser, m=True, n=True, required=True):
    if m:
        parser.add_argument("--m", type=int, required=required, help="Block size m (the TSR lives over GF(q^m)).")
    if n:
        parser.add_argument("--n", type=int, required=required, help="Order n of the register.")
    parser.add_argument(
        "--q", required=True, help="Field: a prime power or a descriptor such as 2^4 or 2^2:x^2+x+1."
    )


def _add_ceiling(parser):
    parser.add_argument(
        "--ceiling", type=int, default=None, help="Candidate ceiling for enumerations (default 10^7 or $TSRFORGE_CEILING)."
    )


def _add_format(parser, *flags, choices=("json", "csv")):
    parser.add_argument(*(flags or ("--format",)), dest="format", choices=choices, default="json", help="Output format.")


def build_args_parser():
    parser = ArgumentParser(
        prog="tsrforge",
        description="Counts, enumerates and verifies transformation shift registers over finite fields.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Enable verbose output."
    )
    subparsers = parser.add_subparsers(
        title="Commands", description="The main command is 'verify'."
    )

    # count command
    parser_count = subparsers.add_parser(
        "count", aliases=["c"], help="Evaluates a closed-form count, optionally against enumeration."
    )
    parser_count.add_argument(
        "--what", required=True, choices=("tsri", "tsrp", "srim", "nchi", "sigma"), help="What to count."
    )
    _add_shape(parser_count, required=False)
    parser_count.add_argument("--poly", help="Polynomial for --what nchi, e.g. 'x^2+x+1'.")
    parser_count.add_argument(
        "--mode", choices=("closed", "enumerate", "both"), default="closed", help="Closed form, enumeration, or both."
    )
    parser_count.add_argument(
        "--which", choices=("primitive", "irreducible"), default="primitive", help="sigma-LFSR count to evaluate."
    )
    _add_ceiling(parser_count)
    _add_format(parser_count)
    parser_count.set_defaults(func=count)

    # enumerate command
    parser_enum = subparsers.add_parser(
        "enumerate", aliases=["e"], help="Streams the TSRs of a given shape with their characteristic polynomials."
    )
    _add_shape(parser_enum)
    parser_enum.add_argument("--filter", choices=FILTERS, default="all", help="Which TSRs to keep.")
    _add_ceiling(parser_enum)
    _add_format(parser_enum, "--format", "--emit")
    parser_enum.set_defaults(func=enumerate_tsrs)

    # decompose command
    parser_dec = subparsers.add_parser(
        "decompose", aliases=["d"], help="Lists all (m,n)-decompositions f = g^m h(x^n/g)."
    )
    parser_dec.add_argument("--poly", required=True, help="The polynomial to decompose.")
    _add_shape(parser_dec)
    _add_format(parser_dec)
    parser_dec.set_defaults(func=decompose_poly)

    # fiber command
    parser_fiber = subparsers.add_parser(
        "fiber", aliases=["f"], help="Counts the TSRs with a given characteristic polynomial."
    )
    parser_fiber.add_argument("--poly", required=True, help="The characteristic polynomial.")
    _add_shape(parser_fiber)
    parser_fiber.add_argument(
        "--mode", choices=("bruteforce", "formula", "both"), default="bruteforce", help="How to count."
    )
    _add_ceiling(parser_fiber)
    _add_format(parser_fiber)
    parser_fiber.set_defaults(func=fiber)

    # srim command
    parser_srim = subparsers.add_parser(
        "srim", aliases=["s"], help="Lists self-reciprocal irreducible monic polynomials."
    )
    parser_srim.add_argument("--degree", type=int, required=True, help="Even degree 2m.")
    _add_shape(parser_srim, m=False, n=False)
    parser_srim.add_argument("--to-tsr", action="store_true", help="Also build the order-two TSR for each one.")
    _add_format(parser_srim, choices=("json", "csv", "text"))
    parser_srim.set_defaults(func=srim)

    # verify command
    parser_verify = subparsers.add_parser(
        "verify", aliases=["v"], help="Checks every closed form against brute force on a parameter grid."
    )
    parser_verify.add_argument("--suite", choices=SUITES, default="small", help="Grid to run.")
    parser_verify.add_argument("--jobs", type=int, default=1, help="Worker processes for grid cells.")
    _add_ceiling(parser_verify)
    _add_format(parser_verify)
    parser_verify.set_defaults(func=verify)

    return parser


def run(argv):
    """Runs one command line and returns its exit status."""

    parser = build_args_parser()
    args = parser.parse_args(argv)

    if not hasattr(args, "func"):
        parser.print_help()
        return 1

    shared.set_verbose(args.verbose)
    try:
        return args.func(args) or 0
    except TsrError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
