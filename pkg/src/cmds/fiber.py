import time

from ..tsr import fiber_count
from .shared import emit, field_arg, poly_arg, verbose_print

COLUMNS = ("poly", "m", "n", "q", "bruteforce", "formula", "match")


def fiber(args):
    """Counts the TSRs with characteristic polynomial --poly; exit 2 when modes disagree."""

    ctx = field_arg(args)
    f = poly_arg(args, ctx)
    row = {"poly": str(f), "m": args.m, "n": args.n, "q": ctx.order}
    modes = ("bruteforce", "formula") if args.mode == "both" else (args.mode,)
    for mode in modes:
        start = time.time()
        row[mode] = fiber_count(f, args.m, args.n, mode, args.ceiling)
        verbose_print(f"  {mode} fiber in {time.time() - start:.2f}s")
    status = 0
    if args.mode == "both":
        row["match"] = row["bruteforce"] == row["formula"]
        status = 0 if row["match"] else 2
    emit([row], args.format, COLUMNS)
    return status
