"""Text and JSON forms of fields, elements, polynomials, matrices and TSRs.

Field descriptors:

    p                  the prime field GF(p)
    q                  any prime power, the default field of that order
    base^k             the default degree-k extension of base (left-associative,
                       so 2^2^2 is the quadratic extension of GF(4))
    base^k:modulus     an explicit modulus over base; the modulus runs to the end
                       of the descriptor, so a base that itself has a modulus is
                       written in parentheses: (2^2:x^2+x+1)^2:x^2+x+t

Elements and polynomials share one expression grammar: integers, `+ - * ^`,
parentheses, the variable `x` and the generator symbols `t, u, v, ...` of the
tower levels. Juxtaposition multiplies (`2t` is `2*t`).
"""

import re

from .errors import ParseError, UsageError
from .fields import FieldElem, default_modulus, default_extension, extend, field_of_order
from .polynomials import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(.))")


def describe_field(ctx):
    if ctx.base is None:
        return str(ctx.p)
    base = describe_field(ctx.base)
    if ":" in base:
        base = f"({base})"
    if ctx.degree > 1 and ctx.modulus == default_modulus(ctx.base, ctx.degree).codes:
        return f"{base}^{ctx.degree}"
    return f"{base}^{ctx.degree}:{Poly._raw(ctx.base, ctx.modulus)}"


def _split_top(text, sep):
    """Index of the first `sep` outside parentheses, or -1."""

    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            return i
    return -1


def _rsplit_top(text, sep):
    depth = 0
    for i in range(len(text) - 1, -1, -1):
        ch = text[i]
        if ch == ")":
            depth += 1
        elif ch == "(":
            depth -= 1
        elif ch == sep and depth == 0:
            return i
    return -1


def parse_field(text):
    text = text.strip()
    if not text:
        raise ParseError("empty field descriptor")
    colon = _split_top(text, ":")
    head, modulus_text = (text, None) if colon < 0 else (text[:colon].strip(), text[colon + 1 :])
    caret = _rsplit_top(head, "^")
    if caret < 0:
        if modulus_text is not None:
            raise ParseError(f"a modulus needs a base^k head in {text!r}")
        if head.startswith("(") and head.endswith(")"):
            return parse_field(head[1:-1])
        if not head.isdigit():
            raise ParseError(f"bad field descriptor {text!r}")
        return field_of_order(int(head))
    degree_text = head[caret + 1 :].strip()
    if not degree_text.isdigit() or int(degree_text) < 1:
        raise ParseError(f"bad extension degree {degree_text!r} in {text!r}")
    base = parse_field(head[:caret])
    k = int(degree_text)
    if modulus_text is None:
        return default_extension(base, k)
    modulus = parse_poly(modulus_text, base)
    if modulus.degree != k:
        raise UsageError(f"modulus {modulus} has degree {modulus.degree}, expected {k}")
    return extend(base, modulus)


def _tokenize(text):
    tokens = []
    for number, name, other in _TOKEN.findall(text):
        if number:
            tokens.append(("num", int(number)))
        elif name:
            tokens.append(("name", name))
        elif other.strip():
            if other not in "+-*^()":
                raise ParseError(f"unexpected character {other!r} in {text!r}")
            tokens.append(("op", other))
    return tokens


class _Parser:
    """Recursive descent over the expression grammar, producing polynomials."""

    def __init__(self, text, ctx, allow_x):
        self.text = text
        self.ctx = ctx
        self.allow_x = allow_x
        self.tokens = _tokenize(text)
        self.pos = 0
        self.symbols = {level.symbol: level.gen.code for level in ctx.tower() if level.symbol}

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'a term'} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        result = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return result

    def expr(self):
        sign = None
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = self.take()[1]
        result = self.term()
        if sign == "-":
            result = -result
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.power()
        while True:
            kind, value = self.peek()
            if (kind, value) == ("op", "*"):
                self.take()
                result = result * self.power()
            elif kind in ("num", "name") or (kind, value) == ("op", "("):
                result = result * self.power()
            else:
                return result

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, exp = self.take()
            if kind != "num":
                raise ParseError(f"exponents must be integer literals in {self.text!r}")
            return base**exp
        return base

    def atom(self):
        kind, value = self.take()
        ctx = self.ctx
        if kind == "num":
            return Poly.constant(ctx, value)
        if kind == "name":
            if value == "x":
                if not self.allow_x:
                    raise ParseError(f"field elements cannot mention x: {self.text!r}")
                return Poly.x(ctx)
            if value not in self.symbols:
                raise ParseError(f"unknown symbol {value!r} for GF({ctx.order})")
            return Poly._raw(ctx, (self.symbols[value],))
        if value == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if value == "-":
            return -self.power()
        raise ParseError(f"unexpected {value!r} in {self.text!r}")


def parse_poly(text, ctx):
    return _Parser(text, ctx, allow_x=True).parse()


def parse_element(text, ctx):
    if isinstance(text, int):
        return ctx.element(text)
    return FieldElem(ctx, _Parser(str(text), ctx, allow_x=False).parse().constant_code())


def format_poly(f):
    return str(f)


# JSON forms


def poly_to_json(f):
    return {"field": describe_field(f.ctx), "coeffs": [str(c) for c in f.coeffs]}


def matrix_to_json(a):
    fmt = a.ctx.format_code
    return {
        "field": describe_field(a.ctx),
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[fmt(e) for e in row] for row in a.entries],
    }


def tsr_to_json(t):
    fmt = t.ctx.format_code
    g = list(t.g.codes) + [0] * (t.n - len(t.g.codes))
    return {
        "m": t.m,
        "n": t.n,
        "field": describe_field(t.ctx),
        "g": [fmt(c) for c in g],
        "A": [[fmt(e) for e in row] for row in t.A.entries],
    }


def poly_from_json(obj):
    ctx = parse_field(obj["field"])
    return Poly(ctx, [parse_element(c, ctx) for c in obj["coeffs"]])
