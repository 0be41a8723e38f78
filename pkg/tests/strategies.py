from hypothesis import strategies as st

from src.fields import FieldElem, field_of_order
from src.polynomials import Poly

SMALL_ORDERS = (2, 3, 4, 5, 7, 8, 9, 16, 25)


def P(ctx, *codes):
    """Polynomial from codes, lowest degree first."""

    return Poly._raw(ctx, codes)


fields = st.sampled_from(SMALL_ORDERS).map(field_of_order)


def elements(ctx, nonzero=False):
    return st.integers(1 if nonzero else 0, ctx.order - 1).map(lambda c: FieldElem(ctx, c))


@st.composite
def monic_polys(draw, ctx, min_degree=1, max_degree=5):
    d = draw(st.integers(min_degree, max_degree))
    codes = draw(st.lists(st.integers(0, ctx.order - 1), min_size=d, max_size=d))
    return Poly._raw(ctx, codes + [1])


@st.composite
def polys(draw, ctx, max_degree=5):
    codes = draw(st.lists(st.integers(0, ctx.order - 1), max_size=max_degree + 1))
    return Poly._raw(ctx, codes)


@st.composite
def field_and_elements(draw, count=2, nonzero=False):
    ctx = draw(fields)
    return (ctx, *[draw(elements(ctx, nonzero)) for _ in range(count)])
