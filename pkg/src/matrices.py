"""Dense matrices over a FieldCtx, entries stored row-major as element codes."""

import itertools

from .constants import GL_CEILING, INT_LIMIT
from .errors import CeilingExceeded, CtxMismatch, DimMismatch, NotMonic, NotSquare, Overflow
from .fields import FieldElem
from .polynomials import Poly


class Matrix:
    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx, entries):
        grid = [tuple(ctx.code_of(e) for e in row) for row in entries]
        if any(len(row) != len(grid[0]) for row in grid):
            raise DimMismatch("ragged matrix rows")
        self.ctx = ctx
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else 0
        self.entries = tuple(grid)

    @classmethod
    def _raw(cls, ctx, grid):
        mat = cls.__new__(cls)
        mat.ctx = ctx
        mat.rows = len(grid)
        mat.cols = len(grid[0]) if grid else 0
        mat.entries = tuple(tuple(row) for row in grid)
        return mat

    @classmethod
    def zero(cls, ctx, rows, cols):
        return cls._raw(ctx, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, ctx, n):
        return cls._raw(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, pos):
        i, j = pos
        return FieldElem(self.ctx, self.entries[i][j])

    @property
    def is_square(self):
        return self.rows == self.cols

    def _same_field(self, other):
        if other.ctx != self.ctx:
            raise CtxMismatch("matrices over different fields")

    def __add__(self, other):
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimMismatch(f"cannot add {self.shape} and {other.shape}")
        add = self.ctx.add
        return Matrix._raw(
            self.ctx,
            [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
        )

    def __neg__(self):
        neg = self.ctx.neg
        return Matrix._raw(self.ctx, [[neg(a) for a in row] for row in self.entries])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        code = self.ctx.element(c).code
        mul = self.ctx.mul
        return Matrix._raw(self.ctx, [[mul(a, code) for a in row] for row in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        self._same_field(other)
        if self.cols != other.rows:
            raise DimMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = add(acc, mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        return Matrix._raw(ctx, out)

    __rmul__ = scale

    def __pow__(self, e):
        if not self.is_square:
            raise NotSquare(f"{self.shape} matrix has no powers")
        result = Matrix.identity(self.ctx, self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def transpose(self):
        return Matrix._raw(self.ctx, [list(col) for col in zip(*self.entries)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.ctx == other.ctx and self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.entries))

    def __str__(self):
        fmt = self.ctx.format_code
        return "[" + ", ".join("[" + ", ".join(fmt(a) for a in row) + "]" for row in self.entries) + "]"

    def __repr__(self):
        return f"Matrix({self}, GF({self.ctx.order}))"


def mat_vec(a, vector):
    """a * v for a vector of codes; returns codes."""

    if a.cols != len(vector):
        raise DimMismatch(f"{a.shape} matrix applied to a vector of length {len(vector)}")
    add, mul = a.ctx.add, a.ctx.mul
    out = []
    for row in a.entries:
        acc = 0
        for x, y in zip(row, vector):
            if x and y:
                acc = add(acc, mul(x, y))
        out.append(acc)
    return out


def _require_square(a):
    if not a.is_square:
        raise NotSquare(f"{a.shape} matrix is not square")


def det(a):
    """Determinant by Gaussian elimination, searching each column for a nonzero pivot."""

    _require_square(a)
    ctx = a.ctx
    n = a.rows
    rows = [list(r) for r in a.entries]
    result = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return FieldElem(ctx, 0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            result = ctx.neg(result)
        pv = rows[col][col]
        result = ctx.mul(result, pv)
        inv = ctx.inv(pv)
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = ctx.mul(rows[r][col], inv)
                rows[r] = [
                    ctx.sub(x, ctx.mul(factor, y)) if y else x
                    for x, y in zip(rows[r], rows[col])
                ]
    return FieldElem(ctx, result)


def hessenberg(a):
    """An upper Hessenberg matrix similar to a."""

    _require_square(a)
    ctx = a.ctx
    n = a.rows
    h = [list(r) for r in a.entries]
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if h[i][j]), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            h[pivot], h[j + 1] = h[j + 1], h[pivot]
            for row in h:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        inv = ctx.inv(h[j + 1][j])
        for i in range(j + 2, n):
            if not h[i][j]:
                continue
            u = ctx.mul(h[i][j], inv)
            h[i] = [ctx.sub(x, ctx.mul(u, y)) if y else x for x, y in zip(h[i], h[j + 1])]
            for row in h:
                if row[i]:
                    row[j + 1] = ctx.add(row[j + 1], ctx.mul(u, row[i]))
    return Matrix._raw(ctx, h)


def char_poly(a):
    """det(XI - a) via Hessenberg reduction and the Hessenberg determinant recurrence."""

    _require_square(a)
    ctx = a.ctx
    h = hessenberg(a).entries
    n = a.rows
    x = Poly.x(ctx)
    polys = [Poly.one(ctx)]
    for k in range(n):
        p = (x - Poly._raw(ctx, (h[k][k],))) * polys[k]
        t = 1
        for i in range(k - 1, -1, -1):
            t = ctx.mul(t, h[i + 1][i])
            if t == 0:
                break
            c = ctx.mul(h[i][k], t)
            if c:
                p = p - polys[i].scale(c)
        polys.append(p)
    return polys[n]


def companion(f):
    """Subdiagonal of ones, last column -f_0, ..., -f_{d-1}."""

    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    if f.degree < 1:
        raise NotMonic(f"{f} has degree < 1")
    ctx = f.ctx
    d = f.degree
    grid = [[0] * d for _ in range(d)]
    for i in range(1, d):
        grid[i][i - 1] = 1
    for i in range(d):
        grid[i][d - 1] = ctx.neg(f.codes[i])
    return Matrix._raw(ctx, grid)


def is_invertible(a):
    return det(a).code != 0


def gl_order(m, q):
    """|GL_m(GF(q))| = prod_{i<m} (q^m - q^i)."""

    order = 1
    for i in range(m):
        order *= q**m - q**i
    if order >= INT_LIMIT:
        raise Overflow(f"|GL_{m}(GF({q}))| does not fit in 63 bits")
    return order


def enumerate_matrices(m, ctx, ceiling=GL_CEILING):
    """All m x m matrices in lexicographic row-major order (last entry fastest)."""

    total = ctx.order ** (m * m)
    if total > ceiling:
        raise CeilingExceeded(f"{total} matrices of size {m} over GF({ctx.order}) exceed {ceiling}")
    for flat in itertools.product(range(ctx.order), repeat=m * m):
        yield Matrix._raw(ctx, [flat[i * m : (i + 1) * m] for i in range(m)])


def enumerate_gl(m, ctx, ceiling=GL_CEILING):
    """Invertible m x m matrices, filtered from the exhaustive scan."""

    size = gl_order(m, ctx.order)
    if size > ceiling:
        raise CeilingExceeded(f"|GL_{m}(GF({ctx.order}))| = {size} exceeds {ceiling}")
    # the scan itself visits q^(m^2) candidates
    for mat in enumerate_matrices(m, ctx, ceiling=max(ceiling, ctx.order ** (m * m))):
        if is_invertible(mat):
            yield mat


def solve(a, b):
    """The unique x with a x = b (codes), or None when inconsistent.

    `a` must have full column rank.
    """

    ctx = a.ctx
    if a.rows != len(b):
        raise DimMismatch(f"{a.shape} system with {len(b)} right-hand sides")
    rows = [list(r) + [v] for r, v in zip(a.entries, b)]
    n = a.cols
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            raise DimMismatch("system matrix is not of full column rank")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ctx.inv(rows[r][col])
        rows[r] = [ctx.mul(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [ctx.sub(x, ctx.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(r)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    return [rows[i][-1] for i in pivots]
