"""The verification sweep: every closed form next to its brute-force oracle.

A suite is a grid of cells (check, m, n, q). Each cell is pure and produces
CountReports; cells may run in a process pool, and the report is sorted
canonically afterwards so its digest does not depend on the worker count.
"""

import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..constants import FIELD_CEILING, enumeration_ceiling
from ..counting import (
    REPORT_COLUMNS,
    CountReport,
    bounds,
    carlitz_m1_oracle,
    carlitz_srim,
    edge_counts,
    enumerated_sigma,
    enumerated_tsr_count,
    n_chi,
    N_q_m2,
    n_q_m2_cases,
    sigma_lfsr_counts,
    tsri_m2,
    tsri_via_S,
    v_count,
    v_count_recurrence,
)
from ..fields import enumerate_elements, field_of_order
from ..matrices import char_poly, enumerate_matrices, gl_order
from ..polynomials import Poly, enumerate_monic, is_irreducible
from ..srim import delta_srim_check, enumerate_srim, srim_to_tsr
from ..tsr import (
    assemble,
    block_primitivity,
    classify_poly,
    decompose,
    delta_via_gamma,
    enumerate_S,
    enumerate_tsr,
    fiber_count,
    proof_partitions,
    tsr_candidates,
    tsr_char_poly,
    tsr_from_matrix,
)
from ..utils import canonical_json, sha256_hex
from .shared import emit, verbose_print

TSR_GRID = [(1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3), (3, 2)]
HEAVY_TSR_CELLS = {(3, 1, 3), (3, 2, 3)}
NQ_CELLS = [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4), (2, 5)]
SUITES = ("small", "full")


def _report(label, m, n, q, closed, enumerated, **kwargs):
    return CountReport(label, m, n, q, closed, enumerated, **kwargs)


def _holds(label, m, n, q, ok, note=""):
    return CountReport(label, m, n, q, 1, int(bool(ok)), note=note)


# Checks. Each takes (m, n, q, ceiling, field_ceiling) and returns reports.


def check_nonattainable(m, n, q, ceiling, field_ceiling):
    ctx = field_of_order(q)
    f = Poly(ctx, [1, 1, 0, 0, 1])
    return [
        _report("nonattainable_decompose", m, n, q, 0, len(decompose(f, m, n)), note=str(f)),
        _report("nonattainable_fiber", m, n, q, 0, fiber_count(f, m, n, "bruteforce", ceiling), note=str(f)),
    ]


def check_tsr_grid(m, n, q, ceiling, field_ceiling):
    """One pass over TSR*(m, n; q) feeding the fiber, block and bound checks."""

    ctx = field_of_order(q)
    fibers = Counter()
    classes = {}
    total = fast_ok = roundtrip_ok = 0
    irreducible = irreducible_block = 0
    primitive = twisted_ok = plain_ok = 0
    for t, phi in enumerate_tsr(m, n, ctx, "all", ceiling):
        total += 1
        fibers[phi] += 1
        if phi not in classes:
            classes[phi] = classify_poly(phi)
        cls = classes[phi]
        T = assemble(t)
        if char_poly(T) == tsr_char_poly(t):
            fast_ok += 1
        if tsr_from_matrix(T, m, n) == t:
            roundtrip_ok += 1
        if cls.is_irreducible:
            irreducible += 1
            irreducible_block += is_irreducible(char_poly(t.A))
        if cls.is_primitive:
            primitive += 1
            twisted, plain = block_primitivity(t)
            twisted_ok += twisted
            plain_ok += plain

    expected = gl_order(m, q) // (q**m - 1)
    attained = [phi for phi in fibers if classes[phi].is_irreducible]
    sizes = {fibers[phi] for phi in attained}
    worst = next((s for s in sorted(sizes) if s != expected), expected)
    formula_ok = sum(1 for phi in attained if fiber_count(phi, m, n, "formula") == fibers[phi])
    tsri_upper, tsrp_upper = bounds(m, n, q)

    reports = [
        _report("fiber_size", m, n, q, expected, worst, note=f"{len(attained)} irreducible phi"),
        _report("fiber_formula", m, n, q, len(attained), formula_ok),
        _report("fast_char_poly", m, n, q, total, fast_ok),
        _report("matrix_roundtrip", m, n, q, total, roundtrip_ok),
        _report("partition_sanity", m, n, q, tsr_candidates(m, n, q), sum(fibers.values())),
        _report("irreducible_block", m, n, q, irreducible, irreducible_block),
        _report("primitive_block_twisted", m, n, q, primitive, twisted_ok),
        _holds("tsri_bound", m, n, q, irreducible <= tsri_upper, f"{irreducible} <= {tsri_upper}"),
        _holds("tsrp_bound", m, n, q, primitive <= tsrp_upper, f"{primitive} <= {tsrp_upper}"),
    ]
    if q % 2 == 0 or n % 2:
        reports.append(_report("primitive_block_plain", m, n, q, primitive, plain_ok))
    if m == 1 or n == 1:
        reports.append(_report("edge_tsri", m, n, q, edge_counts(m, n, q, "tsri"), irreducible))
        reports.append(_report("edge_tsrp", m, n, q, edge_counts(m, n, q, "tsrp"), primitive))
    if n == 2 and m > 1:
        reports.append(_report("tsri_m2", m, n, q, tsri_m2(m, q), irreducible))
    return reports


def check_edge(m, n, q, ceiling, field_ceiling):
    ctx = field_of_order(q)
    return [
        _report(f"edge_{which}", m, n, q, edge_counts(m, n, q, which),
                enumerated_tsr_count(m, n, ctx, flt, ceiling))
        for which, flt in (("tsri", "irreducible"), ("tsrp", "primitive"))
    ]


def check_n_chi(m, n, q, ceiling, field_ceiling):
    """Every monic f of degree m against the char poly census of M_m(GF(q))."""

    ctx = field_of_order(q)
    census = Counter(char_poly(a) for a in enumerate_matrices(m, ctx, ceiling))
    reports = [_report("n_chi", m, n, q, n_chi(f), census[f], note=str(f)) for f in enumerate_monic(ctx, m)]
    closed_total = sum(n_chi(f) for f in enumerate_monic(ctx, m))
    reports.append(_report("n_chi_total", m, n, q, closed_total, sum(census.values())))
    return reports


def check_nq_m2(m, n, q, ceiling, field_ceiling):
    ctx = field_of_order(q)
    size = sum(1 for _ in enumerate_S(m, 2, ctx, field_ceiling))
    v = len(proof_partitions(m, 1, ctx, field_ceiling).V)
    images = delta_via_gamma(m, 2, ctx, field_ceiling)
    regular = sum(1 for f, hits in images.items() if hits == m and is_irreducible(f))
    return [
        _report("N_q_m2", m, 2, q, N_q_m2(m, q), size),
        _report("N_q_m2_cases", m, 2, q, n_q_m2_cases(m, q), size),
        _report("v_count", m, 2, q, v_count(m, q), v),
        _report("v_count_recurrence", m, 2, q, v_count_recurrence(m, q), v),
        _report("tsri_via_S", m, 2, q, tsri_m2(m, q), tsri_via_S(m, 2, ctx, field_ceiling)),
        _report("gamma_fibers", m, 2, q, size // m, regular, note="images hit exactly m times"),
    ]


def check_carlitz(m, n, q, ceiling, field_ceiling):
    ctx = field_of_order(q)
    reports = [_report("carlitz_srim", m, 2, q, carlitz_srim(m, q), sum(1 for _ in enumerate_srim(2 * m, ctx)))]
    if m == 1:
        reports.append(_report("carlitz_m1", m, 2, q, carlitz_srim(m, q), carlitz_m1_oracle(q)))
    return reports


def check_srim_tsr(m, n, q, ceiling, field_ceiling):
    ctx = field_of_order(q)
    polys = list(enumerate_srim(2 * m, ctx))
    records = [srim_to_tsr(f) for f in polys]
    built = sum(1 for r in records if classify_poly(tsr_char_poly(r.tsr)).is_irreducible)
    distinct = len({tsr_char_poly(r.tsr) for r in records})
    return [
        _report("srim_to_tsr", m, 2, q, len(polys), built),
        _report("srim_injective", m, 2, q, len(polys), distinct),
    ]


def check_delta_srim(m, n, q, ceiling, field_ceiling):
    return [_holds("delta_srim", m, 2, q, delta_srim_check(m, ceiling=ceiling))]


def check_partitions(m, n, q, ceiling, field_ceiling):
    """Z = X + Y = U + V, x_t = 2 u_t, y_2t = 2 v_t and the emptiness criterion, t = m."""

    ctx = field_of_order(q)
    reports = []
    for a in enumerate_elements(ctx):
        note = f"a={a}"
        parts = proof_partitions(m, a, ctx, field_ceiling)
        reports.append(_holds("partition_union", m, 2, q, parts.is_consistent(), note))
        if q % 2 == 0 and a.code == 0:
            reports.append(_report("v_empty", m, 2, q, 0, len(parts.V), note=note))
            continue
        sizes = parts.sizes
        reports.append(_report("x_equals_2u", m, 2, q, 2 * sizes["u"], sizes["x"], note=note))
        reports.append(_report("v_count_per_a", m, 2, q, v_count(m, q), sizes["v"], note=note))
        if q ** (2 * m) <= field_ceiling:
            doubled = proof_partitions(2 * m, a, ctx, field_ceiling).sizes
            reports.append(_report("y_equals_2v", m, 2, q, 2 * sizes["v"], doubled["y"], note=note))
    return reports


def check_sigma(m, n, q, ceiling, field_ceiling):
    reports = [
        _report("sigma_primitive", m, n, q, sigma_lfsr_counts(m, n, q, "primitive"),
                enumerated_sigma(m, n, q, "primitive", ceiling))
    ]
    if m == 1:
        reports.append(
            _report("sigma_irreducible", m, n, q, sigma_lfsr_counts(m, n, q, "irreducible"),
                    enumerated_sigma(m, n, q, "irreducible", ceiling), informational=True,
                    note="displayed without the 1/mn normalization")
        )
    return reports


CHECKS = {
    "nonattainable": check_nonattainable,
    "tsr_grid": check_tsr_grid,
    "edge": check_edge,
    "n_chi": check_n_chi,
    "nq_m2": check_nq_m2,
    "carlitz": check_carlitz,
    "srim_tsr": check_srim_tsr,
    "delta_srim": check_delta_srim,
    "partitions": check_partitions,
    "sigma": check_sigma,
}


def suite_grid(name):
    full = name == "full"
    grid = [("nonattainable", 2, 2, 2)]
    for q in (2, 3):
        for m, n in TSR_GRID:
            if full or (m, n, q) not in HEAVY_TSR_CELLS:
                grid.append(("tsr_grid", m, n, q))
    grid.append(("tsr_grid", 2, 2, 4))
    grid += [("edge", 1, 4, q) for q in (2, 3)]
    grid += [("n_chi", 2, 1, q) for q in (2, 3)]
    grid += [("nq_m2", m, 2, q) for m, q in NQ_CELLS]
    grid += [("carlitz", m, 2, q) for m in (1, 2, 3, 4) for q in (2, 3, 4, 5)]
    grid += [("srim_tsr", m, 2, q) for m in (1, 2, 3, 4) for q in (2, 3)]
    grid += [("delta_srim", m, 2, 2) for m in ((1, 2, 3, 4) if full else (1, 2, 3))]
    grid += [("partitions", t, 2, q) for t in (2, 3, 4) for q in (2, 3)]
    grid += [("sigma", 1, n, 2) for n in (2, 3, 4)] + [("sigma", 2, 1, 2)]
    return grid


def run_cell(job):
    (check, m, n, q), ceiling, field_ceiling = job
    return CHECKS[check](m, n, q, ceiling, field_ceiling)


@dataclass
class VerifySuite:
    name: str
    grid: list
    ceiling: int
    field_ceiling: int = FIELD_CEILING
    reports: list = field(default_factory=list)

    @classmethod
    def build(cls, name, ceiling=None):
        # y_2t at q = 3, t = 4 lives in GF(3^8)
        field_ceiling = 3**8 if name == "full" else FIELD_CEILING
        if ceiling is None:
            ceiling = enumeration_ceiling()
        return cls(name, suite_grid(name), ceiling, field_ceiling)

    def run(self, jobs=1):
        jobs_list = [(cell, self.ceiling, self.field_ceiling) for cell in self.grid]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(run_cell, jobs_list))
        else:
            results = []
            for job in jobs_list:
                start = time.time()
                results.append(run_cell(job))
                verbose_print(f"  {job[0]} in {time.time() - start:.2f}s")
        self.reports = sorted((r for cell in results for r in cell), key=lambda r: r.sort_key)
        return self.reports

    @property
    def failures(self):
        return [r for r in self.reports if r.failed]

    @property
    def ok(self):
        return not self.failures

    def rows(self):
        return [r.to_json() for r in self.reports]

    def digest(self):
        return sha256_hex(canonical_json(self.rows()))


def verify(args):
    """Runs the verification suite; exit 0 iff every gating row matches."""

    suite = VerifySuite.build(args.suite, args.ceiling)
    print(f"Verifying suite {suite.name} ({len(suite.grid)} cells)...", file=sys.stderr)
    start = time.time()
    suite.run(args.jobs)
    verbose_print(f"  Verified in {time.time() - start:.2f}s")
    emit(suite.rows(), args.format, REPORT_COLUMNS)
    failures = suite.failures
    print(f"  {len(suite.reports)} checks, {len(failures)} mismatches", file=sys.stderr)
    print(f"  Report digest: {suite.digest()}", file=sys.stderr)
    for r in failures:
        print(f"  MISMATCH {r.label} {r.params}: {r.closed_form} != {r.enumerated} {r.note}", file=sys.stderr)
    return 0 if suite.ok else 2
