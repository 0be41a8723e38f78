from itertools import islice

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import BadG, BadH, CoefficientNotInBase, NotMonic, VanishesAtZero
from src.fields import enumerate_elements, field_of_order
from src.polynomials import (
    Poly,
    constant_term_is_primitive,
    count_irreducible,
    count_primitive,
    embed,
    enumerate_monic,
    enumerate_monic_irreducible,
    enumerate_primitive,
    factor,
    is_irreducible,
    is_primitive_poly,
    is_self_reciprocal,
    mn_compose,
    poly_gcd,
    poly_order,
    reciprocal,
    restrict,
    scale_variable,
    shift_compose,
)

from strategies import P, elements, fields, monic_polys, polys


def test_arithmetic(gf2, gf3):
    f = P(gf2, 1, 0, 1)
    assert f * Poly.one(gf2) == f
    assert P(gf2, 1, 1, 0, 0, 1).derivative() == Poly.one(gf2)
    assert poly_gcd(P(gf3, 2, 0, 1), P(gf3, 2, 1)) == P(gf3, 2, 1)
    q, r = divmod(P(gf3, 1, 0, 0, 1), P(gf3, 1, 1))
    assert q * P(gf3, 1, 1) + r == P(gf3, 1, 0, 0, 1)


def test_text_form(gf2, gf4):
    assert str(P(gf2, 1, 1, 0, 0, 1)) == "x^4+x+1"
    assert str(P(gf4, 2, 3, 1)) == "x^2+(t+1)*x+t"
    assert str(Poly.zero(gf2)) == "0"


def test_shift_compose(gf2):
    assert shift_compose(P(gf2, 0, 0, 1), 1) == P(gf2, 1, 0, 1)
    assert shift_compose(P(gf2, 1, 0, 0, 1, 1), 1) == P(gf2, 1, 1, 1, 1, 1)


def test_scale_variable(gf3):
    # f(-X) flips odd coefficients
    assert scale_variable(P(gf3, 1, 1, 1), 2) == P(gf3, 1, 2, 1)


def test_reciprocal(gf2):
    assert reciprocal(P(gf2, 1, 1, 1)) == P(gf2, 1, 1, 1)
    assert reciprocal(P(gf2, 1, 1, 0, 0, 1)) == P(gf2, 1, 0, 0, 1, 1)
    assert is_self_reciprocal(P(gf2, 1, 1, 1, 1, 1))
    assert not is_self_reciprocal(P(gf2, 1, 1, 0, 0, 1))
    assert is_self_reciprocal(P(gf2, 1, 1))
    with pytest.raises(NotMonic):
        is_self_reciprocal(P(field_of_order(3), 1, 2))


def test_embed_restrict(gf2, gf4):
    f = P(gf2, 1, 1, 1)
    assert restrict(embed(f, gf4), gf2) == f
    with pytest.raises(CoefficientNotInBase):
        restrict(P(gf4, 2, 1), gf2)


def test_mn_compose(gf2):
    h = P(gf2, 1, 1, 1)
    assert mn_compose(Poly.one(gf2), h, 2, 3) == P(gf2, 1, 0, 0, 1, 0, 0, 1)
    assert mn_compose(P(gf2, 1, 1), h, 2, 2) == P(gf2, 1, 0, 0, 1, 1)
    with pytest.raises(BadG):
        mn_compose(P(gf2, 0, 1), h, 2, 2)
    with pytest.raises(BadG):
        mn_compose(P(gf2, 1, 1, 1), h, 2, 2)
    with pytest.raises(BadH):
        mn_compose(Poly.one(gf2), P(gf2, 0, 1, 1), 2, 2)


def test_mn_compose_order_two(gf3):
    # X^2 - lam(aX + 1) for m = 1
    lam, a = 2, 1
    g = P(gf3, 1, a)
    h = P(gf3, (-lam) % 3, 1)
    assert mn_compose(g, h, 1, 2) == P(gf3, (-lam) % 3, (-lam * a) % 3, 1)


def test_irreducible(gf2):
    assert is_irreducible(P(gf2, 1, 1, 1))
    assert is_irreducible(P(gf2, 1, 1, 1, 1, 1))
    assert not is_irreducible(P(gf2, 1, 0, 1, 0, 1))


def test_factor(gf2, gf3):
    assert factor(P(gf2, 0, 0, 1)) == [(P(gf2, 0, 1), 2)]
    assert factor(P(gf2, 1, 0, 1, 0, 1)) == [(P(gf2, 1, 1, 1), 2)]
    assert factor(P(gf3, 2, 2, 1)) == [(P(gf3, 2, 2, 1), 1)]
    f = P(gf3, 0, 1) * P(gf3, 1, 1) ** 3 * P(gf3, 1, 0, 1)
    assert factor(f) == [(P(gf3, 0, 1), 1), (P(gf3, 1, 1), 3), (P(gf3, 1, 0, 1), 1)]


@pytest.mark.parametrize("q", [16, 9])
def test_factor_large_equal_degree(q):
    # q^4 is past the trial-division limit, so the random splitting runs
    ctx = field_of_order(q)
    irreducibles = list(islice(enumerate_monic_irreducible(ctx, 4), 3))
    product = irreducibles[0] * irreducibles[1] * irreducibles[2]
    assert factor(product) == [(f, 1) for f in sorted(irreducibles, key=Poly.sort_key)]
    assert factor(product * irreducibles[1]) == [
        (f, 2 if f == irreducibles[1] else 1) for f in sorted(irreducibles, key=Poly.sort_key)
    ]


def test_enumeration(gf2, gf3):
    assert list(enumerate_monic_irreducible(gf2, 2)) == [P(gf2, 1, 1, 1)]
    assert len(list(enumerate_monic_irreducible(gf2, 4))) == 3
    assert len(list(enumerate_monic(gf3, 2))) == 9
    assert [f.index for f in enumerate_monic(gf3, 2)] == list(range(9))


def test_order_and_primitivity(gf2, gf3):
    assert poly_order(P(gf3, 2, 2, 1)) == 8
    assert is_primitive_poly(P(gf3, 2, 2, 1))
    assert poly_order(P(gf2, 1, 1, 1, 1, 1)) == 5
    assert not is_primitive_poly(P(gf2, 1, 1, 1, 1, 1))
    assert poly_order(P(gf2, 1, 0, 0, 1, 1)) == 15
    assert poly_order(P(gf2, 1, 0, 1)) == 2
    with pytest.raises(VanishesAtZero):
        poly_order(P(gf2, 0, 1, 1))


def test_counts(gf2):
    assert count_irreducible(4, 2) == 3
    assert count_primitive(4, 2) == 2
    for q in (2, 3, 4, 5):
        assert count_irreducible(1, q) == q
    assert len(list(enumerate_primitive(gf2, 4))) == 2


def test_primitive_constant_term(gf3):
    for d in (1, 2, 3):
        for f in enumerate_primitive(gf3, d):
            assert constant_term_is_primitive(f)


@pytest.mark.parametrize("q,r", [(2, 3), (2, 6), (3, 3), (4, 2), (5, 2)])
def test_counts_match_enumeration(q, r):
    ctx = field_of_order(q)
    assert count_irreducible(r, q) == sum(1 for _ in enumerate_monic_irreducible(ctx, r))
    assert count_primitive(r, q) == sum(1 for _ in enumerate_primitive(ctx, r))


@settings(max_examples=50)
@given(st.data())
def test_divmod(data):
    ctx = data.draw(fields)
    a = data.draw(polys(ctx))
    b = data.draw(monic_polys(ctx))
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=50)
@given(st.data())
def test_factor_reconstructs(data):
    ctx = data.draw(fields)
    f = data.draw(monic_polys(ctx, max_degree=6))
    product = Poly.one(ctx)
    for g, e in factor(f):
        assert is_irreducible(g)
        product = product * g**e
    assert product == f


@pytest.mark.parametrize("q", [2, 3])
def test_factor_agrees_with_irreducibility(q):
    ctx = field_of_order(q)
    for d in range(1, 7):
        for f in enumerate_monic(ctx, d):
            parts = factor(f)
            product = Poly.one(ctx)
            for g, e in parts:
                product = product * g**e
            assert product == f
            assert (parts == [(f, 1)]) == is_irreducible(f)


@pytest.mark.parametrize("q", [2, 3])
def test_self_reciprocal_irreducibles_have_even_degree(q):
    ctx = field_of_order(q)
    for d in range(2, 7):
        found = [f for f in enumerate_monic_irreducible(ctx, d) if is_self_reciprocal(f)]
        if d % 2:
            assert found == []
        else:
            assert found


@settings(max_examples=200)
@given(st.data())
def test_shift_compose_inverts(data):
    ctx = data.draw(fields)
    f = data.draw(polys(ctx))
    c = data.draw(elements(ctx))
    assert shift_compose(shift_compose(f, c), -c) == f


@settings(max_examples=100)
@given(st.data())
def test_mn_compose_pointwise(data):
    ctx = field_of_order(data.draw(st.sampled_from((2, 3, 4, 5, 7, 8, 9, 16))))
    m = data.draw(st.integers(1, 3))
    n = data.draw(st.integers(1, 4))
    tail = data.draw(st.lists(st.integers(0, ctx.order - 1), max_size=n - 1))
    g = P(ctx, 1, *tail)
    h0 = data.draw(st.integers(1, ctx.order - 1))
    middle = data.draw(st.lists(st.integers(0, ctx.order - 1), min_size=m - 1, max_size=m - 1))
    h = P(ctx, h0, *middle, 1)
    phi = mn_compose(g, h, m, n)
    for x in enumerate_elements(ctx):
        gx = g(x)
        if gx:
            assert phi(x) == gx**m * h(x**n / gx)
