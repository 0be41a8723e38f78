"""Closed-form TSR counts and the brute-force oracles they are checked against.

Every closed form is exact integer arithmetic: rational factors are cleared
before dividing and each division goes through `exact_div`.
"""

from dataclasses import asdict, dataclass
from typing import Optional

from .errors import DomainBound, UsageError
from .fields import enumerate_elements, field_of_order
from .integers import check_limit, divisors, euler_phi, exact_div, mobius, prime_power, split_two_power
from .matrices import char_poly, companion, enumerate_matrices, gl_order
from .polynomials import count_irreducible, count_primitive, enumerate_monic, factor, is_irreducible, is_primitive_poly
from .tsr import check_dims, enumerate_S, enumerate_tsr

REPORT_COLUMNS = ("label", "m", "n", "q", "closed_form", "enumerated", "match", "informational", "note")


@dataclass
class CountReport:
    """One closed form at one (m, n, q), optionally next to its enumerated value."""

    label: str
    m: int
    n: int
    q: int
    closed_form: Optional[int]
    enumerated: Optional[int] = None
    match: Optional[bool] = None
    informational: bool = False
    note: str = ""

    def __post_init__(self):
        if self.enumerated is not None and self.closed_form is not None:
            self.match = self.closed_form == self.enumerated

    @property
    def params(self):
        return (self.m, self.n, self.q)

    @property
    def sort_key(self):
        return (self.label, self.m, self.n, self.q, self.note)

    @property
    def failed(self):
        return self.match is False and not self.informational

    def to_json(self):
        return asdict(self)


def _even(q):
    """(1 + (-1)^q) / 2."""

    return 1 if q % 2 == 0 else 0


def _check_q(q):
    if prime_power(q) is None:
        raise UsageError(f"{q} is not a prime power")


# Matrices with a given characteristic polynomial


def n_chi(f):
    """Number of n x n matrices over GF(q) with characteristic polynomial f.

    q^(n^2-n) F(q, n) / prod_i F(q^(d_i), m_i) with F(Q, r) = prod_{j<=r} (1 - Q^-j),
    each F written as prod (Q^j - 1) / Q^(r(r+1)/2).
    """

    if f.degree < 1 or not f.is_monic():
        raise UsageError(f"{f} must be monic of degree >= 1")
    q = f.ctx.order
    n = f.degree
    num = q ** (n * n - n)
    den = q ** (n * (n + 1) // 2)
    for i in range(1, n + 1):
        num *= q**i - 1
    for p, mult in factor(f):
        Q = q**p.degree
        num *= Q ** (mult * (mult + 1) // 2)
        for j in range(1, mult + 1):
            den *= Q**j - 1
    return check_limit(exact_div(num, den, "N_chi"), "N_chi")


def enumerated_n_chi(f, ceiling=None):
    kwargs = {} if ceiling is None else {"ceiling": ceiling}
    return sum(1 for a in enumerate_matrices(f.degree, f.ctx, **kwargs) if char_poly(a) == f)


# The edge cases m = 1 and n = 1


def _fiber(m, q):
    return exact_div(gl_order(m, q), q**m - 1, "fiber size")


def _which(which, allowed):
    key = which.lower()
    if key not in allowed:
        raise UsageError(f"expected one of {', '.join(allowed)}, got {which!r}")
    return key


def edge_counts(m, n, q, which):
    check_dims(m, n)
    if m != 1 and n != 1:
        raise DomainBound(f"edge counts need m = 1 or n = 1, got ({m}, {n})")
    _check_q(q)
    which = _which(which, ("tsri", "tsrp"))
    count = count_irreducible if which == "tsri" else count_primitive
    if m == 1:
        return count(n, q)
    return _fiber(m, q) * count(m, q)


# S_q(m, n) and the order-two counts


def tsri_via_S(m, n, ctx, field_ceiling=None):
    kwargs = {} if field_ceiling is None else {"field_ceiling": field_ceiling}
    size = sum(1 for _ in enumerate_S(m, n, ctx, **kwargs))
    return exact_div(size, m, "|S_q(m,n)| / m") * _fiber(m, ctx.order)


def z_count(t, q):
    """Elements of GF(q^t) generating it over GF(q)."""

    return sum(mobius(d) * q ** (t // d) for d in divisors(t))


def y2_count(q):
    return q - 1 if q % 2 else q


def _check_m2(m, q):
    if m <= 1:
        raise DomainBound(f"order-two counts need m > 1, got {m}")
    _check_q(q)
    check_limit(q**m, f"{q}^{m}")


def N_q_m2(m, q):
    """|S_q(m, 2)| in the compact form with floor(1/l) and parity indicators."""

    _check_m2(m, q)
    k, l = split_two_power(m)
    correction = 1 if l == 1 and q % 2 else 0
    total = (q - _even(q)) * (l * count_irreducible(l, q ** (2**k)) - correction)
    return exact_div(total, 2, "N_q(m,2)")


n_q_m2 = N_q_m2


def n_q_m2_cases(m, q):
    """The same count, case by case on l = 1 / l > 1 and the parity of q."""

    _check_m2(m, q)
    k, l = split_two_power(m)
    if l == 1:
        if q % 2 == 0:
            return exact_div((q - 1) * q**m, 2)
        return exact_div(q * (q**m - 1), 2)
    half = exact_div(l * count_irreducible(l, q ** (2**k)), 2)
    return half * (q - 1) if q % 2 == 0 else half * q


def v_count(m, q):
    """|V_m(a)| for any a with a != 0 when q is even."""

    return exact_div(N_q_m2(m, q), q - _even(q), "|V_m(a)|")


def _y_count(m, q):
    if m % 2:
        return 0
    if m == 2:
        return y2_count(q)
    return z_count(m // 2, q) + _y_count(m // 2, q)


def v_count_recurrence(m, q):
    """(z_m + y_m) / 2 with y_m = z_{m/2} + y_{m/2}, y_odd = 0 and the base y_2."""

    _check_m2(m, q)
    return exact_div(z_count(m, q) + _y_count(m, q), 2, "v_m")


def tsri_m2(m, q):
    _check_m2(m, q)
    k, l = split_two_power(m)
    correction = 1 if l == 1 and q % 2 else 0
    moebius_sum = sum(mobius(d) * q ** (m // d) for d in divisors(l))
    num = (q - _even(q)) * (moebius_sum - correction) * gl_order(m, q)
    return check_limit(exact_div(num, 2 * m * (q**m - 1), "|TSRI(m,2;q)|"), "|TSRI(m,2;q)|")


def carlitz_srim(m, q):
    """Self-reciprocal irreducible monic polynomials of degree 2m over GF(q)."""

    if m < 1:
        raise UsageError(f"m must be positive, got {m}")
    _check_q(q)
    if m == 1:
        # values from the b -> X^2 + bX + 1 count; the displayed formula agrees
        return (q - 1) // 2 if q % 2 else q // 2
    check_limit(q ** (2 * m), f"{q}^{2 * m}")
    k, l = split_two_power(m)
    correction = 1 if l == 1 and q % 2 else 0
    return exact_div(l * count_irreducible(l, q ** (2**k)) - correction, 2 * m, "srim count")


def carlitz_m1_oracle(q):
    """b in GF(q) outside {c + 1/c : c != 0}, i.e. X^2 + bX + 1 irreducible."""

    ctx = field_of_order(q)
    image = {c + c.inv() for c in enumerate_elements(ctx) if c}
    return q - len(image)


# Bounds and sigma-LFSR counts


def bounds(m, n, q):
    check_dims(m, n)
    _check_q(q)
    fiber = _fiber(m, q)
    tail = q ** (n - 1)
    return (
        check_limit(fiber * count_irreducible(m, q) * tail, "TSRI bound"),
        check_limit(fiber * count_primitive(m, q) * tail, "TSRP bound"),
    )


def sigma_lfsr_counts(m, n, q, which):
    """The two sigma-LFSR closed forms; the irreducible one as displayed, without 1/mn."""

    if m < 1 or n < 1:
        raise UsageError(f"m and n must be positive, got ({m}, {n})")
    _check_q(q)
    which = _which(which, ("primitive", "irreducible"))
    mn = m * n
    check_limit(q**mn, f"{q}^{mn}")
    tail = q ** (m * (m - 1) * (n - 1))
    for i in range(1, m):
        tail *= q**m - q**i
    if which == "primitive":
        head = exact_div(euler_phi(q**mn - 1), mn, "phi(q^mn - 1) / mn")
    else:
        head = sum(mobius(d) * q ** (mn // d) for d in divisors(mn))
    return check_limit(head * tail, "sigma-LFSR count")


def enumerated_sigma(m, n, q, which, ceiling=None):
    """Brute force for the degenerate shapes: companion matrices (m = 1) or all of M_m (n = 1)."""

    which = _which(which, ("primitive", "irreducible"))
    ctx = field_of_order(q)

    def keep(f):
        if f.constant_code() == 0:
            return False
        return is_primitive_poly(f) if which == "primitive" else is_irreducible(f)

    if m == 1:
        return sum(1 for f in enumerate_monic(ctx, n) if keep(char_poly(companion(f))))
    if n == 1:
        kwargs = {} if ceiling is None else {"ceiling": ceiling}
        return sum(1 for a in enumerate_matrices(m, ctx, **kwargs) if keep(char_poly(a)))
    raise DomainBound("sigma-LFSR enumeration covers m = 1 or n = 1 only")


def enumerated_tsr_count(m, n, ctx, filter="irreducible", ceiling=None):
    return sum(1 for _ in enumerate_tsr(m, n, ctx, filter, ceiling))
