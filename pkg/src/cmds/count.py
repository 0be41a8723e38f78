import time

from ..counting import (
    REPORT_COLUMNS,
    CountReport,
    carlitz_srim,
    edge_counts,
    enumerated_n_chi,
    enumerated_sigma,
    enumerated_tsr_count,
    n_chi,
    sigma_lfsr_counts,
    tsri_m2,
    tsri_via_S,
)
from ..errors import UsageError
from ..srim import enumerate_srim
from .shared import emit, field_arg, poly_arg, verbose_print


def _require(args, *names):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"--what {args.what} needs {', '.join(missing)}")


def _tsr_closed(args, q, ctx, which):
    m, n = args.m, args.n
    if m == 1 or n == 1:
        return f"edge_{which}", edge_counts(m, n, q, which)
    if which == "tsrp":
        raise UsageError("TSRP has a closed form only for m = 1 or n = 1; use --mode enumerate")
    if n == 2:
        return "tsri_m2", tsri_m2(m, q)
    return "tsri_via_S", tsri_via_S(m, n, ctx)


def build_report(args, ctx):
    """The CountReport for the requested count, closed form and/or enumeration."""

    q = ctx.order
    closed = args.mode in ("closed", "both")
    enumerated = args.mode in ("enumerate", "both")
    value, oracle, informational, note = None, None, False, ""

    if args.what in ("tsri", "tsrp"):
        _require(args, "m", "n")
        m, n = args.m, args.n
        label = args.what
        if closed:
            label, value = _tsr_closed(args, q, ctx, args.what)
        if enumerated:
            flt = "irreducible" if args.what == "tsri" else "primitive"
            oracle = enumerated_tsr_count(m, n, ctx, flt, args.ceiling)
    elif args.what == "srim":
        _require(args, "m")
        m, n, label = args.m, 2, "carlitz_srim"
        if closed:
            value = carlitz_srim(m, q)
        if enumerated:
            oracle = sum(1 for _ in enumerate_srim(2 * m, ctx))
    elif args.what == "nchi":
        f = poly_arg(args, ctx)
        m, n, label, note = f.degree, 1, "n_chi", str(f)
        if closed:
            value = n_chi(f)
        if enumerated:
            oracle = enumerated_n_chi(f, args.ceiling)
    else:
        _require(args, "m", "n")
        m, n = args.m, args.n
        label = f"sigma_{args.which}"
        if closed:
            value = sigma_lfsr_counts(m, n, q, args.which)
        if enumerated:
            oracle = enumerated_sigma(m, n, q, args.which, args.ceiling)
        if args.which == "irreducible":
            informational = True
            note = "displayed without the 1/mn normalization"

    return CountReport(label, m, n, q, value, oracle, informational=informational, note=note)


def count(args):
    ctx = field_arg(args)
    start = time.time()
    report = build_report(args, ctx)
    verbose_print(f"  Counted {report.label} in {time.time() - start:.2f}s")
    emit([report.to_json()], args.format, REPORT_COLUMNS)
    return 2 if report.failed else 0
