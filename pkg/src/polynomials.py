"""Dense univariate polynomials over a FieldCtx.

Coefficients are kept as element codes, lowest degree first, with no trailing
zeros. The zero polynomial has an empty code tuple and degree -1.
"""

import random
from math import lcm

from .constants import INT_LIMIT
from .errors import (
    BadG,
    BadH,
    CoefficientNotInBase,
    ConstantPolynomial,
    CtxMismatch,
    DivisionByZero,
    FactorizationOverflow,
    NotMonic,
    Overflow,
    UsageError,
    VanishesAtZero,
    ZeroPolynomial,
)
from .fields import FieldElem, format_terms, is_primitive_element
from .integers import (  # noqa: F401  (re-exported integer helpers)
    check_limit,
    divisors,
    euler_phi,
    exact_div,
    factor_integer,
    mobius,
    prime_divisors,
    prime_power,
)

# Equal-degree splitting falls back from trial division to Cantor-Zassenhaus
# with seeded random candidates beyond these sizes.
EDF_TRIAL_DEGREE = 8
EDF_TRIAL_LIMIT = 4096
EDF_SEED = 0x7572
EDF_MAX_TRIES = 256


def _normalize(codes):
    end = len(codes)
    while end and codes[end - 1] == 0:
        end -= 1
    return tuple(codes[:end])


class Poly:
    __slots__ = ("ctx", "codes")

    def __init__(self, ctx, coeffs=()):
        self.ctx = ctx
        self.codes = _normalize([ctx.code_of(c) for c in coeffs])

    @classmethod
    def _raw(cls, ctx, codes):
        poly = cls.__new__(cls)
        poly.ctx = ctx
        poly.codes = _normalize(codes)
        return poly

    @classmethod
    def zero(cls, ctx):
        return cls._raw(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls._raw(ctx, (1,))

    @classmethod
    def x(cls, ctx):
        return cls._raw(ctx, (0, 1))

    @classmethod
    def constant(cls, ctx, c):
        return cls(ctx, [ctx.element(c)])

    @classmethod
    def monomial(cls, ctx, exp, c=1):
        return cls._raw(ctx, [0] * exp + [ctx.element(c).code])

    # Shape

    @property
    def degree(self):
        return len(self.codes) - 1

    def is_zero(self):
        return not self.codes

    @property
    def lead(self):
        return self.codes[-1] if self.codes else 0

    @property
    def leading(self):
        return FieldElem(self.ctx, self.lead)

    @property
    def coeffs(self):
        return tuple(FieldElem(self.ctx, c) for c in self.codes)

    def coeff(self, i):
        return FieldElem(self.ctx, self.codes[i] if 0 <= i < len(self.codes) else 0)

    def constant_code(self):
        return self.codes[0] if self.codes else 0

    def is_monic(self):
        return bool(self.codes) and self.codes[-1] == 1

    def monic(self):
        if not self.codes:
            return self
        inv = self.ctx.inv(self.lead)
        return self.scale(inv)

    @property
    def index(self):
        """Position of a monic polynomial among the monics of its degree."""

        Q = self.ctx.order
        idx = 0
        for c in reversed(self.codes[:-1]):
            idx = idx * Q + c
        return idx

    def sort_key(self):
        return (self.degree, self.index)

    # Arithmetic

    def _check(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise CtxMismatch("polynomials over different fields")
            return other
        if isinstance(other, (FieldElem, int)):
            return Poly.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.ctx
        a, b = self.codes, other.codes
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly._raw(ctx, out)

    __radd__ = __add__

    def __neg__(self):
        ctx = self.ctx
        return Poly._raw(ctx, [ctx.neg(c) for c in self.codes])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, code):
        ctx = self.ctx
        return Poly._raw(ctx, [ctx.mul(c, code) for c in self.codes])

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            return self.scale(self.ctx.element(other).code)
        if isinstance(other, int):
            return self.scale(other % self.ctx.p)
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.ctx
        a, b = self.codes, other.codes
        if not a or not b:
            return Poly.zero(ctx)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
        return Poly._raw(ctx, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        ctx = self.ctx
        rem = list(self.codes)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly.zero(ctx), self
        inv = ctx.inv(other.lead)
        quot = [0] * (len(rem) - db)
        bcodes = other.codes
        for d in range(len(rem) - 1, db - 1, -1):
            c = rem[d]
            if c == 0:
                continue
            factor = ctx.mul(c, inv)
            quot[d - db] = factor
            for i in range(db + 1):
                if bcodes[i]:
                    rem[d - db + i] = ctx.sub(rem[d - db + i], ctx.mul(factor, bcodes[i]))
        return Poly._raw(ctx, quot), Poly._raw(ctx, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.codes))

    def __call__(self, x):
        ctx = self.ctx
        xc = ctx.element(x).code
        acc = 0
        for c in reversed(self.codes):
            acc = ctx.add(ctx.mul(acc, xc), c)
        return FieldElem(ctx, acc)

    def derivative(self):
        ctx = self.ctx
        return Poly._raw(
            ctx, [ctx.mul(c, i % ctx.p) for i, c in enumerate(self.codes)][1:]
        )

    def __str__(self):
        ctx = self.ctx
        terms = [(i, ctx.format_code(c)) for i, c in enumerate(self.codes) if c]
        return format_terms(terms, "x")

    def __repr__(self):
        return f"Poly({self}, GF({self.ctx.order}))"


def poly_gcd(a, b):
    """Monic gcd (the zero polynomial when both inputs are zero)."""

    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def powmod(f, e, m):
    result = Poly.one(f.ctx) % m
    base = f % m
    while e:
        if e & 1:
            result = (result * base) % m
        e >>= 1
        if e:
            base = (base * base) % m
    return result


def shift_compose(f, c):
    """f(X + c)."""

    ctx = f.ctx
    shift = Poly._raw(ctx, (ctx.element(c).code, 1))
    result = Poly.zero(ctx)
    for code in reversed(f.codes):
        result = result * shift + Poly._raw(ctx, (code,))
    return result


def scale_variable(f, c):
    """f(cX)."""

    ctx = f.ctx
    cc = ctx.element(c).code
    out, power = [], 1
    for code in f.codes:
        out.append(ctx.mul(code, power))
        power = ctx.mul(power, cc)
    return Poly._raw(ctx, out)


def reciprocal(f):
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no reciprocal")
    return Poly._raw(f.ctx, f.codes[::-1])


def is_self_reciprocal(f):
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    return reciprocal(f) == f


def embed(f, ctx):
    if not ctx.contains(f.ctx):
        raise CtxMismatch(f"GF({f.ctx.order}) is not a tower level of GF({ctx.order})")
    return Poly._raw(ctx, f.codes)


def restrict(f, sub):
    """Re-expresses f over the tower level `sub`; every coefficient must lie there."""

    if not f.ctx.contains(sub):
        raise CtxMismatch(f"GF({sub.order}) is not a tower level of GF({f.ctx.order})")
    for c in f.codes:
        if c >= sub.order:
            raise CoefficientNotInBase(
                f"coefficient {f.ctx.format_code(c)} of {f} is not in GF({sub.order})"
            )
    return Poly._raw(sub, f.codes)


def mn_compose(g, h, m, n):
    """g^m h(X^n / g) = sum_j h_j g^(m-j) X^(nj)."""

    if g.ctx != h.ctx:
        raise CtxMismatch("g and h live over different fields")
    if g.constant_code() != 1 or g.degree > n - 1:
        raise BadG(f"g = {g} needs g(0) = 1 and degree <= {n - 1}")
    if not h.is_monic() or h.degree != m or h.constant_code() == 0:
        raise BadH(f"h = {h} needs to be monic of degree {m} with h(0) != 0")
    ctx = g.ctx
    g_powers = [Poly.one(ctx)]
    for _ in range(m):
        g_powers.append(g_powers[-1] * g)
    result = Poly.zero(ctx)
    for j, hj in enumerate(h.codes):
        if hj:
            term = g_powers[m - j].scale(hj)
            result = result + Poly._raw(ctx, [0] * (n * j) + list(term.codes))
    return result


def is_irreducible(f):
    """Rabin's test: X^(q^d) = X mod f and gcd(X^(q^(d/r)) - X, f) = 1 for primes r | d."""

    if f.degree < 1:
        raise ConstantPolynomial(f"{f} is constant")
    d = f.degree
    if d == 1:
        return True
    f = f.monic()
    q = f.ctx.order
    x = Poly.x(f.ctx)
    frob = [x]
    for _ in range(d):
        frob.append(powmod(frob[-1], q, f))
    if frob[d] != x:
        return False
    for r in prime_divisors(d):
        if poly_gcd(frob[d // r] - x, f).degree != 0:
            return False
    return True


def _pth_root(f):
    ctx = f.ctx
    p = ctx.p
    e = ctx.order // p
    return Poly._raw(ctx, [ctx.pow(c, e) for c in f.codes[::p]])


def _squarefree(f):
    out = []
    i = 1
    c = poly_gcd(f, f.derivative())
    w = f // c
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        p = f.ctx.p
        out.extend((g, e * p) for g, e in _squarefree(_pth_root(c)))
    return out


def _distinct_degree(f):
    ctx = f.ctx
    q = ctx.order
    x = Poly.x(ctx)
    out = []
    rest = f
    h = x % rest
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = powmod(h, q, rest)
        g = poly_gcd(h - x, rest)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _split_candidates(ctx, max_degree, rng):
    """Random polynomials of degree 1..max_degree; each splits with probability >= 1/2."""

    Q = ctx.order
    for _ in range(EDF_MAX_TRIES):
        codes = [rng.randrange(Q) for _ in range(max_degree + 1)]
        if any(codes[1:]):
            yield Poly._raw(ctx, codes)


def _equal_degree(g, d):
    if g.degree == d:
        return [g]
    ctx = g.ctx
    q = ctx.order
    if d <= EDF_TRIAL_DEGREE and q**d <= EDF_TRIAL_LIMIT:
        out, rest = [], g
        for cand in enumerate_monic_irreducible(ctx, d):
            quot, rem = divmod(rest, cand)
            if rem.is_zero():
                out.append(cand)
                rest = quot
            if rest.degree <= d:
                break
        if rest.degree == d:
            out.append(rest)
        return out
    rng = random.Random(EDF_SEED)
    for a in _split_candidates(ctx, g.degree - 1, rng):
        if q % 2:
            b = powmod(a, (q**d - 1) // 2, g) - Poly.one(ctx)
        else:
            b = Poly.zero(ctx)
            term = a % g
            for _ in range(ctx.absolute_degree * d):
                b = b + term
                term = (term * term) % g
        h = poly_gcd(b, g)
        if 0 < h.degree < g.degree:
            return _equal_degree(h, d) + _equal_degree(g // h, d)
    raise AssertionError(f"no splitting polynomial found for {g}")


def factor(f):
    """[(irreducible, multiplicity), ...] sorted by (degree, enumeration index)."""

    if f.degree < 1:
        raise ConstantPolynomial(f"{f} is constant")
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    result = []
    for part, mult in _squarefree(f):
        for block, d in _distinct_degree(part):
            for irreducible in _equal_degree(block, d):
                result.append((irreducible, mult))
    return sorted(result, key=lambda pair: pair[0].sort_key())


def enumerate_monic(ctx, d):
    """All monic polynomials of degree d; c_0 varies fastest."""

    if d < 1:
        raise UsageError(f"degree must be >= 1, got {d}")
    Q = ctx.order
    for idx in range(Q**d):
        codes = []
        for _ in range(d):
            idx, c = divmod(idx, Q)
            codes.append(c)
        codes.append(1)
        yield Poly._raw(ctx, codes)


def enumerate_monic_irreducible(ctx, d):
    for f in enumerate_monic(ctx, d):
        if is_irreducible(f):
            yield f


def enumerate_primitive(ctx, d):
    for f in enumerate_monic(ctx, d):
        if f.constant_code() != 0 and is_primitive_poly(f):
            yield f


def _check_order_input(f):
    if f.degree < 1:
        raise ConstantPolynomial(f"{f} is constant")
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    if f.constant_code() == 0:
        raise VanishesAtZero(f"{f} vanishes at zero")


def _irreducible_order(f):
    ctx = f.ctx
    n = ctx.order**f.degree - 1
    if n >= INT_LIMIT:
        raise FactorizationOverflow(f"cannot factor q^d - 1 = {n}")
    one = Poly.one(ctx)
    x = Poly.x(ctx)
    for prime, exp in factor_integer(n):
        for _ in range(exp):
            if powmod(x, n // prime, f) == one:
                n //= prime
            else:
                break
    return n


def poly_order(f):
    """Multiplicative order of X modulo f."""

    _check_order_input(f)
    if is_irreducible(f):
        return _irreducible_order(f)
    p = f.ctx.p
    parts = factor(f)
    order = 1
    for g, _ in parts:
        order = lcm(order, _irreducible_order(g))
    top = max(mult for _, mult in parts)
    power = 1
    while power < top:
        power *= p
    return order * power


def is_primitive_poly(f):
    _check_order_input(f)
    if not is_irreducible(f):
        return False
    return poly_order(f) == f.ctx.order**f.degree - 1


def constant_term_is_primitive(f):
    """(-1)^deg f * f(0) is a primitive element; holds for every primitive f."""

    c = f.coeff(0)
    if f.degree % 2:
        c = -c
    return is_primitive_element(c)


def _check_prime_power(q):
    if prime_power(q) is None:
        raise UsageError(f"{q} is not a prime power")


def count_irreducible(r, q):
    """(1/r) sum_{d|r} mu(d) q^(r/d)."""

    _check_prime_power(q)
    if r < 1:
        raise UsageError(f"degree must be >= 1, got {r}")
    check_limit(q**r, f"{q}^{r}")
    total = sum(mobius(d) * q ** (r // d) for d in divisors(r))
    return exact_div(total, r, "irreducible count")


def count_primitive(r, q):
    """phi(q^r - 1) / r."""

    _check_prime_power(q)
    if r < 1:
        raise UsageError(f"degree must be >= 1, got {r}")
    n = q**r - 1
    if n >= INT_LIMIT:
        raise Overflow(f"{q}^{r} - 1 does not fit in 63 bits")
    return exact_div(euler_phi(n), r, "primitive count")
