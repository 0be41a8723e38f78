from ..tsr import decompose
from .shared import emit, field_arg, poly_arg


def decompose_poly(args):
    ctx = field_arg(args)
    f = poly_arg(args, ctx)
    found = decompose(f, args.m, args.n)
    rows = [{"g": str(d.g), "h": str(d.h)} for d in found]
    if args.format == "csv":
        emit(rows, "csv", ("g", "h"))
        return 0
    result = {"poly": str(f), "m": args.m, "n": args.n, "q": ctx.order, "decompositions": rows}
    if not found:
        result["note"] = f"not ({args.m},{args.n})-decomposable"
    emit(result, "json", None)
    return 0
