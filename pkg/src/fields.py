"""Finite fields GF(p^k) built as towers of simple extensions over GF(p).

An element is stored as an integer code. For an extension of degree k over a
base of order Q, the element c_0 + c_1 t + ... + c_{k-1} t^{k-1} has code
sum(code(c_i) * Q^i). Enumeration order is code order (least significant
coordinate fastest) and embedding a base element into an extension leaves its
code unchanged.
"""

import functools

from .constants import GENERATOR_SYMBOLS, INT_LIMIT, PRIME_LIMIT, TABLE_LIMIT
from .errors import (
    CoefficientNotInBase,
    ConstantPolynomial,
    CtxMismatch,
    DivisionByZero,
    FactorizationOverflow,
    NotASubfield,
    NotMonic,
    NotPrime,
    Reducible,
    TooLarge,
    ZeroElement,
)
from .integers import factor_integer, is_prime, prime_power


def format_terms(terms, var):
    """Joins (exponent, coefficient text) pairs into `c*var^e + ...`, highest first."""

    parts = []
    for exp, coeff in sorted(terms, key=lambda term: -term[0]):
        if exp == 0:
            parts.append(coeff)
            continue
        monomial = var if exp == 1 else f"{var}^{exp}"
        if coeff == "1":
            parts.append(monomial)
        elif "+" in coeff:
            parts.append(f"({coeff})*{monomial}")
        else:
            parts.append(f"{coeff}*{monomial}")
    return "+".join(parts) if parts else "0"


class FieldCtx:
    """A prime field (base is None) or a simple extension base[t]/(modulus)."""

    def __init__(self, p, base=None, modulus=None):
        self.p = p
        self.base = base
        if base is None:
            self.modulus = None
            self.degree = 1
            self.order = p
            self.depth = 0
            self.absolute_degree = 1
            self._key = (p,)
        else:
            self.modulus = tuple(modulus)
            self.degree = len(self.modulus) - 1
            self.order = base.order**self.degree
            self.depth = base.depth + 1
            self.absolute_degree = base.absolute_degree * self.degree
            self._key = (base._key, self.modulus)
        self._hash = hash(self._key)
        # log/antilog tables, built on first multiplication
        self._exp = None
        self._log = None

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.base is None:
            return f"FieldCtx(GF({self.p}))"
        return f"FieldCtx(GF({self.order}), depth={self.depth}, modulus={list(self.modulus)})"

    @property
    def is_prime_field(self):
        return self.base is None

    @property
    def symbol(self):
        if self.depth == 0:
            return None
        if self.depth <= len(GENERATOR_SYMBOLS):
            return GENERATOR_SYMBOLS[self.depth - 1]
        return f"t{self.depth}"

    def tower(self):
        """Contexts from the prime field up to (and including) this one."""

        levels = []
        ctx = self
        while ctx is not None:
            levels.append(ctx)
            ctx = ctx.base
        return levels[::-1]

    def subfield(self, q):
        """The tower level of order q, or None."""

        for level in self.tower():
            if level.order == q:
                return level
        return None

    def contains(self, other):
        return other in self.tower()

    # Elements

    def element(self, x):
        if isinstance(x, FieldElem):
            if x.ctx == self:
                return x
            if self.contains(x.ctx):
                return FieldElem(self, x.code)
            raise CtxMismatch(f"{x!r} does not belong to {self!r}")
        if isinstance(x, int):
            return FieldElem(self, x % self.p)
        raise TypeError(f"cannot coerce {type(x).__name__} into a field element")

    def code_of(self, x):
        """Code of a FieldElem of this tower, or of an int taken as a code."""

        if isinstance(x, FieldElem):
            return self.element(x).code
        if self.base is None:
            return x % self.p
        if 0 <= x < self.order:
            return x
        raise ValueError(f"code {x} out of range for GF({self.order})")

    @property
    def zero(self):
        return FieldElem(self, 0)

    @property
    def one(self):
        return FieldElem(self, 1)

    @property
    def gen(self):
        """The adjoined root t (the element 1 of a prime field has no generator)."""

        if self.base is None:
            return FieldElem(self, 1)
        return FieldElem(self, self.base.order)

    def coords(self, code):
        """Base-field codes (c_0, ..., c_{k-1}) of an extension element."""

        Q = self.base.order
        out = []
        for _ in range(self.degree):
            code, c = divmod(code, Q)
            out.append(c)
        return out

    def encode(self, coords):
        Q = self.base.order
        code = 0
        for c in reversed(coords):
            code = code * Q + c
        return code

    def format_code(self, code):
        if self.base is None:
            return str(code)
        terms = [
            (i, self.base.format_code(c)) for i, c in enumerate(self.coords(code)) if c
        ]
        return format_terms(terms, self.symbol)

    # Code-level arithmetic

    def add(self, a, b):
        p = self.p
        if self.base is None:
            return (a + b) % p
        if p == 2:
            return a ^ b
        result, scale = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            result += ((da + db) % p) * scale
            scale *= p
        return result

    def neg(self, a):
        p = self.p
        if self.base is None:
            return (-a) % p
        if p == 2:
            return a
        result, scale = 0, 1
        while a:
            a, da = divmod(a, p)
            result += ((-da) % p) * scale
            scale *= p
        return result

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.base is None:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is None and self.order <= TABLE_LIMIT:
            self._build_tables()
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._mul_structural(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        if self._log is None and self.order <= TABLE_LIMIT:
            self._build_tables()
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.base is None:
            return pow(a, e, self.p)
        if self._log is None and self.order <= TABLE_LIMIT:
            self._build_tables()
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        result = 1
        while e:
            if e & 1:
                result = self._mul_structural(result, a)
            e >>= 1
            if e:
                a = self._mul_structural(a, a)
        return result

    def _mul_structural(self, a, b):
        base, k = self.base, self.degree
        xa, xb = self.coords(a), self.coords(b)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(xa):
            if ai == 0:
                continue
            for j, bj in enumerate(xb):
                if bj:
                    prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        mod = self.modulus
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                for i in range(k):
                    if mod[i]:
                        prod[d - k + i] = base.sub(prod[d - k + i], base.mul(c, mod[i]))
                prod[d] = 0
        return self.encode(prod[:k])

    def _build_tables(self):
        n = self.order - 1
        for candidate in range(2, self.order):
            exp = [1]
            x = candidate
            while x != 1 and len(exp) <= n:
                exp.append(x)
                x = self._mul_structural(x, candidate)
            if len(exp) == n:
                break
        log = [0] * self.order
        for i, e in enumerate(exp):
            log[e] = i
        self._exp, self._log = exp, log


class FieldElem:
    __slots__ = ("ctx", "code")

    def __init__(self, ctx, code):
        self.ctx = ctx
        self.code = code

    def _code_of(self, other):
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise CtxMismatch(f"{self!r} and {other!r} live in different fields")
            return other.code
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        b = self._code_of(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._code_of(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(self.code, b))

    def __rsub__(self, other):
        b = self._code_of(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(b, self.code))

    def __mul__(self, other):
        b = self._code_of(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._code_of(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.div(self.code, b))

    def __rtruediv__(self, other):
        b = self._code_of(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.div(b, self.code))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e):
        return FieldElem(self.ctx, self.ctx.pow(self.code, e))

    def inv(self):
        return FieldElem(self.ctx, self.ctx.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.code))

    def __bool__(self):
        return self.code != 0

    @property
    def coords(self):
        if self.ctx.base is None:
            return (self.code,)
        base = self.ctx.base
        return tuple(FieldElem(base, c) for c in self.ctx.coords(self.code))

    def __str__(self):
        return self.ctx.format_code(self.code)

    def __repr__(self):
        return f"FieldElem({self}, GF({self.ctx.order}))"


def make_prime_field(p):
    if p >= PRIME_LIMIT:
        raise TooLarge(f"prime fields are limited to p < 2^31, got {p}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return FieldCtx(p)


def extend(base, modulus):
    """The extension base[t]/(modulus) for a monic irreducible modulus over base."""

    from .polynomials import factor, is_irreducible

    if modulus.ctx != base:
        raise CtxMismatch("modulus must have coefficients in the base field")
    if modulus.degree < 1:
        raise ConstantPolynomial(f"modulus {modulus} has degree < 1")
    if not modulus.is_monic():
        raise NotMonic(f"modulus {modulus} is not monic")
    if base.order**modulus.degree >= INT_LIMIT:
        raise TooLarge(f"GF({base.order}^{modulus.degree}) exceeds 63-bit cardinality")
    if not is_irreducible(modulus):
        witness = factor(modulus)[0][0]
        raise Reducible(f"{modulus} is divisible by {witness}", witness=witness)
    return FieldCtx(base.p, base, modulus.codes)


@functools.lru_cache(maxsize=None)
def default_modulus(base, k):
    """First monic irreducible of degree k over base in enumeration order."""

    from .polynomials import enumerate_monic, is_irreducible

    for f in enumerate_monic(base, k):
        if is_irreducible(f):
            return f
    raise AssertionError(f"no irreducible of degree {k} over GF({base.order})")


def default_extension(base, k):
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if k == 1:
        return base
    return extend(base, default_modulus(base, k))


def field_of_order(q):
    """Default field of order q: GF(p) extended once by degree j when q = p^j."""

    pp = prime_power(q)
    if pp is None:
        raise NotPrime(f"{q} is not a prime power")
    p, j = pp
    return default_extension(make_prime_field(p), j)


def enumerate_elements(ctx):
    for code in range(ctx.order):
        yield FieldElem(ctx, code)


def frobenius(alpha, q):
    return alpha**q


def _check_subfield(ctx, q):
    pp = prime_power(q)
    if pp is None or pp[0] != ctx.p or ctx.absolute_degree % pp[1] != 0:
        raise NotASubfield(f"GF({q}) is not a subfield of GF({ctx.order})")


def degree_over(alpha, q):
    """Smallest d >= 1 with alpha^(q^d) = alpha, i.e. [GF(q)(alpha) : GF(q)]."""

    _check_subfield(alpha.ctx, q)
    d = 1
    x = alpha**q
    while x != alpha:
        x = x**q
        d += 1
    return d


def conjugates(alpha, q):
    d = degree_over(alpha, q)
    out = [alpha]
    for _ in range(d - 1):
        out.append(out[-1] ** q)
    return out


def _prime_digits(code, p, k):
    out = []
    for _ in range(k):
        code, c = divmod(code, p)
        out.append(c)
    return out


@functools.lru_cache(maxsize=None)
def _subfield_map(ctx, target):
    """Sends codes of the order-|target| subfield of ctx to codes of target.

    target is a single extension of the prime field. Base-p digits of a code
    are GF(p)-coordinates, so each image is a linear solve against the powers
    of the smallest root in ctx of target's modulus.
    """

    from .matrices import Matrix, solve
    from .polynomials import Poly, embed, factor

    prime = target.base
    moduli = factor(embed(Poly._raw(prime, target.modulus), ctx))
    beta = next(-g.coeff(0) for g, _ in moduli if g.degree == 1)
    p, k, j = ctx.p, ctx.absolute_degree, target.degree
    powers = [ctx.one]
    for _ in range(j - 1):
        powers.append(powers[-1] * beta)
    digits = [_prime_digits(b.code, p, k) for b in powers]
    basis = Matrix._raw(prime, [[digits[i][r] for i in range(j)] for r in range(k)])

    def convert(code):
        x = solve(basis, _prime_digits(code, p, k))
        if x is None:
            raise CoefficientNotInBase(f"{ctx.format_code(code)} is not in GF({target.order})")
        return target.encode(x)

    return convert


def minimal_poly_over(alpha, q):
    """prod (X - alpha^(q^i)) over the conjugates, returned over GF(q).

    That is the GF(q) tower level when there is one, and field_of_order(q)
    otherwise.
    """

    from .polynomials import Poly, restrict

    ctx = alpha.ctx
    _check_subfield(ctx, q)
    result = Poly.one(ctx)
    for c in conjugates(alpha, q):
        result = result * Poly(ctx, [ctx.neg(c.code), 1])
    sub = ctx.subfield(q)
    if sub is not None:
        return restrict(result, sub)
    target = field_of_order(q)
    convert = _subfield_map(ctx, target)
    return Poly._raw(target, [convert(c) for c in result.codes])


def multiplicative_order(alpha):
    if alpha.code == 0:
        raise ZeroElement("zero has no multiplicative order")
    n = alpha.ctx.order - 1
    if n >= INT_LIMIT:
        raise FactorizationOverflow(f"cannot factor q-1 = {n}")
    for prime, exp in factor_integer(n):
        for _ in range(exp):
            if alpha ** (n // prime) == 1:
                n //= prime
            else:
                break
    return n


def is_primitive_element(alpha):
    return alpha.code != 0 and multiplicative_order(alpha) == alpha.ctx.order - 1
