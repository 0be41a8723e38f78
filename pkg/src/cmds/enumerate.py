import sys
import time

from ..notation import tsr_to_json
from ..tsr import classify_poly, enumerate_tsr
from ..utils import to_csv
from .shared import emit_lines, field_arg, verbose_print

COLUMNS = ("m", "n", "field", "g", "A", "phi", "irreducible", "primitive")


def tsr_record(t, phi, cls):
    record = tsr_to_json(t)
    record.update(phi=str(phi), irreducible=cls.is_irreducible, primitive=cls.is_primitive)
    return record


def enumerate_tsrs(args):
    """Streams every TSR* of the requested shape that passes the filter."""

    ctx = field_arg(args)
    classes = {}
    count = 0
    start = time.time()
    if args.format == "csv":
        sys.stdout.write(to_csv([], COLUMNS))
    for t, phi in enumerate_tsr(args.m, args.n, ctx, args.filter, args.ceiling):
        if phi not in classes:
            classes[phi] = classify_poly(phi)
        record = tsr_record(t, phi, classes[phi])
        count += 1
        if args.format == "csv":
            record.update(g=str(t.g), A=str(t.A))
            sys.stdout.write(to_csv([record], COLUMNS, header=False))
        else:
            emit_lines([record])
    verbose_print(f"  Enumerated {count} TSRs in {time.time() - start:.2f}s")
    return 0
