from ..srim import enumerate_srim, srim_to_tsr
from ..tsr import tsr_char_poly
from .shared import emit, field_arg

COLUMNS = ("f", "h1", "h", "g", "A", "phi")


def _row(record):
    return {
        "f": str(record.f),
        "h1": str(record.h1),
        "h": str(record.h),
        "g": str(record.tsr.g),
        "A": str(record.tsr.A),
        "phi": str(tsr_char_poly(record.tsr)),
    }


def srim(args):
    """Lists srim polynomials of degree --degree, or the TSRs they give with --to-tsr."""

    ctx = field_arg(args)
    polys = list(enumerate_srim(args.degree, ctx))

    if not args.to_tsr:
        if args.format == "text":
            for f in polys:
                print(f)
        elif args.format == "csv":
            emit([{"f": str(f)} for f in polys], "csv", ("f",))
        else:
            emit([str(f) for f in polys], "json", None)
        return 0

    records = [srim_to_tsr(f) for f in polys]
    if args.format == "json":
        emit([r.to_json() for r in records], "json", None)
    elif args.format == "csv":
        emit([_row(r) for r in records], "csv", COLUMNS)
    else:
        for r in records:
            row = _row(r)
            print(" ".join(f"{k}={row[k]}" for k in COLUMNS))
    return 0
