"""Transformation shift registers over GF(q).

A TSR of order n over GF(q^m) is the mn x mn block matrix

    [ 0   0  ...  0   c_0 B     ]
    [ I   0  ...  0   c_1 B     ]
    [ 0   I  ...  0   c_2 B     ]
    [ ...                       ]
    [ 0   0  ...  I   c_{n-1} B ]

with m x m blocks. The invertible ones are exactly the pairs (g, A) with
g = 1 + c_1 X + ... + c_{n-1} X^{n-1} and A invertible (TSR*), and their
characteristic polynomial is g^m h(X^n / g) for h = det(XI - A).
"""

from collections import Counter
from dataclasses import dataclass

from .constants import FIELD_CEILING, G_CEILING, enumeration_ceiling
from .errors import (
    BadG,
    CeilingExceeded,
    CtxMismatch,
    DimMismatch,
    DomainBound,
    InternalInconsistency,
    NotInvertible,
    NotMonic,
    NotUniquelyDecomposable,
    UsageError,
    VanishesAtZero,
    WrongDegree,
    WrongDegreeElement,
)
from .fields import FieldElem, default_extension, degree_over, enumerate_elements
from .matrices import Matrix, char_poly, enumerate_gl, gl_order, is_invertible, mat_vec, solve
from .polynomials import (
    Poly,
    embed,
    enumerate_monic,
    is_irreducible,
    is_primitive_poly,
    mn_compose,
    restrict,
    scale_variable,
)

FILTERS = ("all", "irreducible", "primitive")
FIBER_MODES = ("bruteforce", "formula")


def check_dims(m, n):
    if m < 1 or n < 1:
        raise UsageError(f"m and n must be positive, got ({m}, {n})")
    if max(m, n) == 1:
        raise DomainBound("TSRs need max(m, n) > 1")


def _check_g(g, n):
    if g.constant_code() != 1 or g.degree > n - 1:
        raise BadG(f"g = {g} needs g(0) = 1 and degree <= {n - 1}")


@dataclass(frozen=True)
class TsrStar:
    """An invertible TSR, identified by g_T and its top-right block A."""

    m: int
    n: int
    ctx: object
    g: Poly
    A: Matrix

    def __post_init__(self):
        check_dims(self.m, self.n)
        if self.g.ctx != self.ctx or self.A.ctx != self.ctx:
            raise CtxMismatch("g and A must live over the TSR's field")
        _check_g(self.g, self.n)
        if self.A.shape != (self.m, self.m):
            raise DimMismatch(f"A must be {self.m} x {self.m}, got {self.A.shape}")
        if not is_invertible(self.A):
            raise NotInvertible(f"A = {self.A} is singular")

    @classmethod
    def _trusted(cls, m, n, ctx, g, A):
        t = object.__new__(cls)
        for name, value in (("m", m), ("n", n), ("ctx", ctx), ("g", g), ("A", A)):
            object.__setattr__(t, name, value)
        return t

    @property
    def c(self):
        """(c_0, ..., c_{n-1}) codes, c_0 = 1."""

        codes = self.g.codes
        return tuple(codes[i] if i < len(codes) else 0 for i in range(self.n))


@dataclass(frozen=True)
class TsrGeneral:
    m: int
    n: int
    ctx: object
    c: tuple
    B: Matrix

    def __post_init__(self):
        check_dims(self.m, self.n)
        if len(self.c) != self.n:
            raise DimMismatch(f"need {self.n} feedback coefficients, got {len(self.c)}")
        if self.B.ctx != self.ctx:
            raise CtxMismatch("B must live over the TSR's field")
        if self.B.shape != (self.m, self.m):
            raise DimMismatch(f"B must be {self.m} x {self.m}, got {self.B.shape}")
        object.__setattr__(self, "c", tuple(self.ctx.code_of(x) for x in self.c))


@dataclass(frozen=True)
class Decomposition:
    g: Poly
    h: Poly


@dataclass(frozen=True)
class Classification:
    is_irreducible: bool
    is_primitive: bool


def _feedback(t):
    if isinstance(t, TsrStar):
        return t.c, t.A
    return t.c, t.B


def assemble(t):
    m, n, ctx = t.m, t.n, t.ctx
    coeffs, block = _feedback(t)
    size = m * n
    grid = [[0] * size for _ in range(size)]
    for b in range(1, n):
        for i in range(m):
            grid[b * m + i][(b - 1) * m + i] = 1
    last = (n - 1) * m
    for b, cb in enumerate(coeffs):
        if not cb:
            continue
        for i in range(m):
            for j in range(m):
                grid[b * m + i][last + j] = ctx.mul(cb, block.entries[i][j])
    return Matrix._raw(ctx, grid)


def tsr_from_matrix(T, m, n):
    """Recovers the TsrStar whose assembled matrix is T."""

    check_dims(m, n)
    ctx = T.ctx
    if T.shape != (m * n, m * n):
        raise DimMismatch(f"expected a {m * n} x {m * n} matrix, got {T.shape}")
    last = (n - 1) * m
    blocks = [
        [[T.entries[b * m + i][last + j] for j in range(m)] for i in range(m)] for b in range(n)
    ]
    A = Matrix._raw(ctx, blocks[0])
    pivot = next(((i, j) for i in range(m) for j in range(m) if A.entries[i][j]), None)
    if pivot is None:
        raise NotInvertible("the top block of T is zero")
    i0, j0 = pivot
    coeffs = [1]
    for b in range(1, n):
        coeffs.append(ctx.div(blocks[b][i0][j0], A.entries[i0][j0]))
    t = TsrStar(m, n, ctx, Poly._raw(ctx, coeffs), A)
    if assemble(t) != T:
        raise DimMismatch("matrix is not in TSR* block form")
    return t


def tsr_char_poly(t):
    return mn_compose(t.g, char_poly(t.A), t.m, t.n)


def classify_poly(phi):
    irreducible = phi.constant_code() != 0 and is_irreducible(phi)
    return Classification(irreducible, irreducible and is_primitive_poly(phi))


def classify(t):
    if isinstance(t, TsrGeneral):
        return classify_poly(char_poly(assemble(t)))
    return classify_poly(tsr_char_poly(t))


def block_twist(h, n):
    """(-1)^(m(n+1)) h((-1)^(n+1) X) for h of degree m; monic whenever h is."""

    ctx = h.ctx
    s = ctx.one if (n + 1) % 2 == 0 else -ctx.one
    return scale_variable(h, s).scale((s**h.degree).code)


def block_primitivity(t):
    """(twisted block char poly primitive, plain block char poly primitive)."""

    h = char_poly(t.A)
    return is_primitive_poly(block_twist(h, t.n)), is_primitive_poly(h)


# Register dynamics


def _state_codes(t, state):
    if len(state) != t.m * t.n:
        raise DimMismatch(f"state of length {len(state)} for a register of size {t.m * t.n}")
    return [t.ctx.code_of(x) for x in state]


def step(t, state):
    codes = mat_vec(assemble(t), _state_codes(t, state))
    return [FieldElem(t.ctx, c) for c in codes]


def sequence(t, seed, length):
    """`length` consecutive states starting at the seed."""

    T = assemble(t)
    codes = _state_codes(t, seed)
    out = []
    for _ in range(length):
        out.append([FieldElem(t.ctx, c) for c in codes])
        codes = mat_vec(T, codes)
    return out


def period(t, seed):
    """Least k >= 1 with T^k seed = seed (T is invertible, so the orbit is a cycle)."""

    T = assemble(t)
    start = _state_codes(t, seed)
    codes = mat_vec(T, start)
    k = 1
    while codes != start:
        codes = mat_vec(T, codes)
        k += 1
    return k


# Enumeration


def enumerate_g(ctx, n):
    """g = 1 + c_1 X + ... + c_{n-1} X^{n-1}; c_1 varies fastest."""

    Q = ctx.order
    count = Q ** (n - 1)
    if count > G_CEILING:
        raise CeilingExceeded(f"{count} candidate g exceed {G_CEILING}")
    for idx in range(count):
        codes = [1]
        for _ in range(n - 1):
            idx, c = divmod(idx, Q)
            codes.append(c)
        yield Poly._raw(ctx, codes)


def tsr_candidates(m, n, q):
    return gl_order(m, q) * q ** (n - 1)


def enumerate_tsr(m, n, ctx, filter="all", ceiling=None):
    """Streams (t, phi_T) over TSR*(m, n; q), g outer and A inner."""

    check_dims(m, n)
    if filter not in FILTERS:
        raise UsageError(f"filter must be one of {', '.join(FILTERS)}, got {filter!r}")
    if ceiling is None:
        ceiling = enumeration_ceiling()
    total = tsr_candidates(m, n, ctx.order)
    if total > ceiling:
        raise CeilingExceeded(f"{total} candidate TSRs exceed the ceiling {ceiling}")

    blocks = [(A, char_poly(A)) for A in enumerate_gl(m, ctx, ceiling=max(ceiling, total))]

    # many pairs share (g, char poly of A), hence phi_T
    seen = {}
    for g in enumerate_g(ctx, n):
        for A, h in blocks:
            key = (g, h)
            if key not in seen:
                phi = mn_compose(g, h, m, n)
                seen[key] = (phi, None if filter == "all" else classify_poly(phi))
            phi, cls = seen[key]
            if filter == "irreducible" and not cls.is_irreducible:
                continue
            if filter == "primitive" and not cls.is_primitive:
                continue
            yield TsrStar._trusted(m, n, ctx, g, A), phi


# Decomposition and fibers


def _check_decomposable_input(f, m, n):
    check_dims(m, n)
    if f.degree != m * n:
        raise WrongDegree(f"{f} has degree {f.degree}, expected {m * n}")
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    if f.constant_code() == 0:
        raise VanishesAtZero(f"{f} vanishes at zero")


def decompose(f, m, n):
    """All (g, h) with f = g^m h(X^n / g), one linear solve per candidate g."""

    _check_decomposable_input(f, m, n)
    ctx = f.ctx
    mn = m * n
    target = list(f.codes[:mn])
    found = []
    for g in enumerate_g(ctx, n):
        powers = [Poly.one(ctx)]
        for _ in range(m):
            powers.append(powers[-1] * g)
        # unknown h_j multiplies g^(m-j) X^(nj), j < m; h_m = 1 contributes X^(mn)
        columns = []
        for j in range(m):
            col = [0] * mn
            for i, c in enumerate(powers[m - j].codes):
                col[n * j + i] = c
            columns.append(col)
        system = Matrix._raw(ctx, [list(row) for row in zip(*columns)])
        sol = solve(system, target)
        if sol is None or sol[0] == 0:
            continue
        h = Poly._raw(ctx, sol + [1])
        if mn_compose(g, h, m, n) != f:
            raise InternalInconsistency(f"solved h = {h} does not reproduce {f}")
        found.append(Decomposition(g, h))
    return found


def decompose_exhaustive(f, m, n):
    """The (g, h) double loop; an oracle for `decompose` at small sizes."""

    _check_decomposable_input(f, m, n)
    return [
        Decomposition(g, h)
        for g in enumerate_g(f.ctx, n)
        for h in enumerate_monic(f.ctx, m)
        if h.constant_code() and mn_compose(g, h, m, n) == f
    ]


def fiber_count(f, m, n, mode="bruteforce", ceiling=None):
    if mode not in FIBER_MODES:
        raise UsageError(f"mode must be one of {', '.join(FIBER_MODES)}, got {mode!r}")
    _check_decomposable_input(f, m, n)
    if mode == "formula":
        from .counting import n_chi

        found = decompose(f, m, n)
        if len(found) != 1:
            raise NotUniquelyDecomposable(
                f"{f} has {len(found)} ({m},{n})-decompositions; the fiber formula needs exactly one"
            )
        return n_chi(found[0].h)
    return sum(1 for _, phi in enumerate_tsr(m, n, f.ctx, "all", ceiling) if phi == f)


def fiber_sizes(m, n, ctx, ceiling=None):
    """phi -> number of TSRs with that characteristic polynomial."""

    return Counter(phi for _, phi in enumerate_tsr(m, n, ctx, "all", ceiling))


# The map Gamma and the sets S_q(m, n)


def _extension_for(m, ctx, ceiling):
    size = ctx.order**m
    if size > ceiling:
        raise CeilingExceeded(f"GF({ctx.order}^{m}) has {size} elements, over the ceiling {ceiling}")
    return default_extension(ctx, m)


def gamma(lam, g, n):
    """prod_i (X^n - lam^(q^i) g) over the conjugates of lam, read back over GF(q)."""

    big, small = lam.ctx, g.ctx
    if not big.contains(small):
        raise CtxMismatch(f"GF({small.order}) is not a tower level of GF({big.order})")
    _check_g(g, n)
    q = small.order
    m = degree_over(lam, q)
    if small.order**m != big.order:
        raise WrongDegreeElement(f"{lam} has degree {m} over GF({q}), not [GF({big.order}) : GF({q})]")
    gb = embed(g, big)
    xn = Poly.monomial(big, n)
    result = Poly.one(big)
    mu = lam
    for _ in range(m):
        result = result * (xn - gb * mu)
        mu = mu**q
    return restrict(result, small)


def enumerate_S(m, n, ctx, field_ceiling=FIELD_CEILING):
    """(lam, g) with lam of degree m over GF(q) and X^n - lam g irreducible over GF(q^m)."""

    check_dims(m, n)
    big = _extension_for(m, ctx, field_ceiling)
    q = ctx.order
    gs = [(g, embed(g, big)) for g in enumerate_g(ctx, n)]
    xn = Poly.monomial(big, n)
    for lam in enumerate_elements(big):
        if lam.code == 0 or degree_over(lam, q) != m:
            continue
        for g, gb in gs:
            if is_irreducible(xn - gb * lam):
                yield lam, g


def delta_via_gamma(m, n, ctx, field_ceiling=FIELD_CEILING):
    """Images of Gamma over S_q(m, n) with hit counts, in polynomial order."""

    hits = Counter(gamma(lam, g, n) for lam, g in enumerate_S(m, n, ctx, field_ceiling))
    return dict(sorted(hits.items(), key=lambda item: item[0].sort_key()))


def gamma_fiber(f, m, n, field_ceiling=FIELD_CEILING):
    """Gamma^{-1}(f) for an irreducible decomposable f: the pairs (mu, g), mu over the roots of h."""

    found = decompose(f, m, n)
    if len(found) != 1:
        raise NotUniquelyDecomposable(f"{f} has {len(found)} ({m},{n})-decompositions")
    g, h = found[0].g, found[0].h
    big = _extension_for(m, f.ctx, field_ceiling)
    hb = embed(h, big)
    roots = [mu for mu in enumerate_elements(big) if hb(mu) == 0]
    return [(mu, g) for mu in roots if degree_over(mu, f.ctx.order) == m]


# Order-two machinery: V_t(a) and the partition sets


@dataclass(frozen=True)
class Partitions:
    """Z = X + Y = U + V inside GF(q^t), for the map alpha -> alpha^2 + a alpha."""

    Z: frozenset
    X: frozenset
    Y: frozenset
    U: frozenset
    V: frozenset

    @property
    def sizes(self):
        return {"z": len(self.Z), "x": len(self.X), "y": len(self.Y), "u": len(self.U), "v": len(self.V)}

    def is_consistent(self):
        return (
            self.X | self.Y == self.Z
            and not self.X & self.Y
            and self.U | self.V == self.Z
            and not self.U & self.V
        )


def proof_partitions(t, a, ctx, field_ceiling=FIELD_CEILING):
    if t <= 1:
        raise DomainBound(f"t must exceed 1, got {t}")
    big = _extension_for(t, ctx, field_ceiling)
    a = big.element(ctx.element(a))
    q = ctx.order
    degree = {}

    def deg(x):
        if x.code not in degree:
            degree[x.code] = degree_over(x, q)
        return degree[x.code]

    Z, X, Y, image = set(), set(), set(), set()
    for alpha in enumerate_elements(big):
        value = alpha * alpha + a * alpha
        image.add(value)
        full = deg(value) == t
        if full:
            X.add(alpha)
        if deg(alpha) == t:
            Z.add(alpha)
            if not full:
                Y.add(alpha)
    U = {value for value in image if deg(value) == t}
    V = Z - image
    return Partitions(frozenset(Z), frozenset(X), frozenset(Y), frozenset(U), frozenset(V))


def enumerate_V(t, a, ctx, field_ceiling=FIELD_CEILING):
    """alpha of degree t with X^2 + aX - alpha irreducible over GF(q^t)."""

    return proof_partitions(t, a, ctx, field_ceiling).V
