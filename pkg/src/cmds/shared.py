import sys

from ..errors import UsageError
from ..notation import parse_field, parse_poly
from ..utils import canonical_json, to_csv

# Global verbose flag
VERBOSE = False


def set_verbose(value):
    global VERBOSE
    VERBOSE = value


def verbose_print(*args, **kwargs):
    """Print only if verbose mode is enabled. Goes to stderr, stdout carries the data."""
    if VERBOSE:
        print(*args, file=sys.stderr, **kwargs)


def field_arg(args):
    """The field named by --q (a descriptor or a prime power)."""

    return parse_field(str(args.q))


def poly_arg(args, ctx):
    if not args.poly:
        raise UsageError("--poly is required here")
    return parse_poly(args.poly, ctx)


def emit(rows, fmt, columns):
    """Writes rows (dicts) as a JSON array or as CSV with the given columns."""

    if fmt == "csv":
        sys.stdout.write(to_csv(rows, columns))
    else:
        print(canonical_json(rows))


def emit_lines(rows):
    """One JSON object per line, for streamed records."""

    for row in rows:
        print(canonical_json(row))
