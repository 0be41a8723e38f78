"""Self-reciprocal irreducible monic (srim) polynomials and their order-two TSRs.

A monic palindrome f of degree 2m is X^m h1(X + 1/X) for a unique monic h1 of
degree m. With h(X) = h1(X + 2), the TSR with g = 1 + X and A = companion(h)
has characteristic polynomial f(X + 1).
"""

from dataclasses import dataclass

from .constants import SRIM_CEILING
from .errors import (
    CeilingExceeded,
    InternalInconsistency,
    NoRepresentation,
    NotMonic,
    NotSelfReciprocal,
    OddDegree,
    Reducible,
    UsageError,
)
from .fields import make_prime_field
from .matrices import companion
from .notation import poly_to_json, tsr_to_json
from .polynomials import Poly, is_irreducible, is_self_reciprocal, shift_compose
from .tsr import TsrStar, enumerate_tsr, tsr_char_poly


@dataclass(frozen=True)
class SrimRecord:
    f: Poly
    h1: Poly
    h: Poly
    tsr: TsrStar

    def to_json(self):
        return {
            "f": poly_to_json(self.f),
            "h1": poly_to_json(self.h1),
            "h": poly_to_json(self.h),
            "tsr": tsr_to_json(self.tsr),
            "phi": str(tsr_char_poly(self.tsr)),
        }


def _half_degree(two_m):
    if two_m < 2:
        raise UsageError(f"degree must be at least 2, got {two_m}")
    if two_m % 2:
        raise OddDegree(f"self-reciprocal irreducibles of degree {two_m} > 1 do not exist")
    return two_m // 2


def enumerate_palindromes(two_m, ctx, ceiling=SRIM_CEILING):
    """Monic self-reciprocal polynomials of degree 2m; c_1 varies fastest."""

    m = _half_degree(two_m)
    Q = ctx.order
    count = Q**m
    if count > ceiling:
        raise CeilingExceeded(f"{count} palindromic candidates exceed {ceiling}")
    for idx in range(count):
        half = [1]
        for _ in range(m):
            idx, c = divmod(idx, Q)
            half.append(c)
        yield Poly._raw(ctx, half + half[-2::-1])


def enumerate_srim(two_m, ctx, ceiling=SRIM_CEILING):
    """srim polynomials of degree 2m in polynomial order."""

    found = [f for f in enumerate_palindromes(two_m, ctx, ceiling) if is_irreducible(f)]
    return iter(sorted(found, key=Poly.sort_key))


def _basis(ctx, m, j):
    """X^(m-j) (X^2 + 1)^j."""

    return Poly.monomial(ctx, m - j) * Poly._raw(ctx, (1, 0, 1)) ** j


def q_transform_expand(h1):
    """X^m h1(X + 1/X) for h1 of degree m."""

    ctx = h1.ctx
    m = h1.degree
    result = Poly.zero(ctx)
    for j, c in enumerate(h1.codes):
        if c:
            result = result + _basis(ctx, m, j).scale(c)
    return result


def q_transform_decompose(f):
    """The monic h1 of degree m with f = X^m h1(X + 1/X)."""

    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    m = _half_degree(f.degree)
    if not is_self_reciprocal(f):
        raise NotSelfReciprocal(f"{f} is not self-reciprocal")
    ctx = f.ctx
    rest = f
    h1 = [0] * (m + 1)
    # X^(m-j)(X^2+1)^j is monic of degree m + j
    for j in range(m, -1, -1):
        c = rest.coeff(m + j).code
        if c:
            h1[j] = c
            rest = rest - _basis(ctx, m, j).scale(c)
    if not rest.is_zero():
        raise NoRepresentation(f"{f} is not of the form X^m h1(X + 1/X)")
    result = Poly._raw(ctx, h1)
    assert q_transform_expand(result) == f, f"re-expansion of {result} does not give {f}"
    return result


def srim_to_tsr(f):
    h1 = q_transform_decompose(f)
    if not is_irreducible(f):
        raise Reducible(f"{f} is self-reciprocal but not irreducible")
    ctx = f.ctx
    m = h1.degree
    h = shift_compose(h1, 2)
    t = TsrStar(m, 2, ctx, Poly._raw(ctx, (1, 1)), companion(h))
    phi = tsr_char_poly(t)
    if phi != shift_compose(f, 1):
        raise InternalInconsistency(f"TSR built from {f} has characteristic polynomial {phi}")
    return SrimRecord(f, h1, h, t)


def delta_srim_check(m, ctx=None, ceiling=None):
    """{phi_T : T in TSRI(m, 2; 2)} == {f(X + 1) : f srim of degree 2m}."""

    ctx = ctx or make_prime_field(2)
    if ctx.order != 2:
        raise UsageError("the srim / TSRI(m,2) correspondence is stated over GF(2) only")
    attained = {phi for _, phi in enumerate_tsr(m, 2, ctx, "irreducible", ceiling)}
    shifted = {shift_compose(f, 1) for f in enumerate_srim(2 * m, ctx)}
    return attained == shifted
