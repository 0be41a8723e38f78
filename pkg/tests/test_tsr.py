import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import (
    BadG,
    CeilingExceeded,
    DimMismatch,
    DomainBound,
    NotInvertible,
    NotUniquelyDecomposable,
    WrongDegree,
    WrongDegreeElement,
)
from src.fields import default_extension, enumerate_elements, field_of_order
from src.matrices import Matrix, char_poly, companion, gl_order
from src.polynomials import Poly, is_irreducible, mn_compose
from src.tsr import (
    Classification,
    TsrGeneral,
    TsrStar,
    assemble,
    block_primitivity,
    block_twist,
    classify,
    decompose,
    decompose_exhaustive,
    delta_via_gamma,
    enumerate_g,
    enumerate_S,
    enumerate_tsr,
    enumerate_V,
    fiber_count,
    fiber_sizes,
    gamma,
    gamma_fiber,
    period,
    proof_partitions,
    sequence,
    step,
    tsr_char_poly,
    tsr_from_matrix,
)

from strategies import P


@pytest.fixture
def ternary_example(gf3):
    """The order-two register over GF(3) with primitive x^2-x-1."""

    return TsrStar(1, 2, gf3, P(gf3, 1, 1), Matrix(gf3, [[1]]))


@pytest.fixture
def binary_example(gf2):
    return TsrStar(2, 2, gf2, P(gf2, 1, 1), companion(P(gf2, 1, 1, 1)))


def test_validation(gf2):
    A = Matrix.identity(gf2, 2)
    with pytest.raises(DomainBound):
        TsrStar(1, 1, gf2, Poly.one(gf2), Matrix(gf2, [[1]]))
    with pytest.raises(BadG):
        TsrStar(2, 2, gf2, P(gf2, 0, 1), A)
    with pytest.raises(NotInvertible):
        TsrStar(2, 2, gf2, Poly.one(gf2), Matrix(gf2, [[1, 1], [1, 1]]))
    with pytest.raises(DimMismatch):
        TsrStar(3, 2, gf2, Poly.one(gf2), A)
    with pytest.raises(DomainBound):
        TsrGeneral(1, 1, gf2, (1,), Matrix(gf2, [[1]]))


def test_assemble(gf2, ternary_example, binary_example):
    assert assemble(ternary_example) == Matrix(ternary_example.ctx, [[0, 1], [1, 1]])
    T = assemble(binary_example)
    assert T == Matrix(gf2, [[0, 0, 0, 1], [0, 0, 1, 1], [1, 0, 0, 1], [0, 1, 1, 1]])
    A = binary_example.A
    assert assemble(TsrStar(2, 1, gf2, Poly.one(gf2), A)) == A


def test_assemble_general(gf2):
    B = Matrix(gf2, [[1, 1], [1, 1]])
    t = TsrGeneral(2, 2, gf2, (0, 1), B)
    T = assemble(t)
    assert [row[2:] for row in T.entries] == [(0, 0), (0, 0), (1, 1), (1, 1)]
    assert char_poly(T).constant_code() == 0
    assert classify(t) == Classification(False, False)


def test_tsr_from_matrix(binary_example):
    assert tsr_from_matrix(assemble(binary_example), 2, 2) == binary_example


def test_char_poly(gf2, ternary_example, binary_example):
    assert tsr_char_poly(ternary_example) == P(ternary_example.ctx, 2, 2, 1)
    assert tsr_char_poly(binary_example) == P(gf2, 1, 0, 0, 1, 1)
    A = companion(P(gf2, 1, 1, 1))
    assert tsr_char_poly(TsrStar(2, 3, gf2, Poly.one(gf2), A)) == P(gf2, 1, 0, 0, 1, 0, 0, 1)


def test_classify(gf2, ternary_example, binary_example):
    cls = classify(ternary_example)
    assert cls.is_irreducible and cls.is_primitive
    cls = classify(TsrStar(1, 2, gf2, Poly.one(gf2), Matrix(gf2, [[1]])))
    assert not cls.is_irreducible and not cls.is_primitive
    cls = classify(binary_example)
    assert cls.is_irreducible and cls.is_primitive


def test_primitive_register_with_non_primitive_block(ternary_example):
    # phi_T is primitive although the block polynomial x - 1 is not
    twisted, plain = block_primitivity(ternary_example)
    assert classify(ternary_example).is_primitive
    assert twisted and not plain


def test_block_twist(gf3):
    h = P(gf3, 2, 1)
    assert block_twist(h, 1) == h
    assert block_twist(h, 2) == P(gf3, 1, 1)


def test_dynamics(ternary_example, binary_example):
    ctx = ternary_example.ctx
    zero = [ctx.zero, ctx.zero]
    assert sequence(ternary_example, zero, 4) == [zero] * 4
    assert period(ternary_example, [1, 0]) == 8
    assert step(ternary_example, [1, 0]) == [ctx.zero, ctx.one]
    states = sequence(ternary_example, [1, 0], 9)
    assert states[8] == states[0] and len({tuple(s) for s in states[:8]}) == 8
    for seed in ([1, 0, 0, 0], [0, 1, 1, 0], [1, 1, 1, 1]):
        assert period(binary_example, seed) == 15


def test_enumerate_g(gf3):
    assert [g.codes for g in enumerate_g(gf3, 3)][:4] == [(1,), (1, 1), (1, 2), (1, 0, 1)]
    assert sum(1 for _ in enumerate_g(gf3, 1)) == 1


def test_enumerate_tsr_counts(gf2, gf3):
    assert sum(1 for _ in enumerate_tsr(2, 2, gf2)) == 12
    assert sum(1 for _ in enumerate_tsr(2, 2, gf2, "irreducible")) == 2
    assert sum(1 for _ in enumerate_tsr(2, 2, gf3, "irreducible")) == 36
    with pytest.raises(CeilingExceeded):
        list(enumerate_tsr(2, 2, gf3, ceiling=100))


def test_enumerate_tsr_order(gf2):
    pairs = [(t.g, t.A) for t, _ in enumerate_tsr(2, 2, gf2)]
    assert [g for g, _ in pairs] == [Poly.one(gf2)] * 6 + [P(gf2, 1, 1)] * 6
    assert pairs[0][1] == Matrix(gf2, [[0, 1], [1, 0]])


def test_ceiling_from_environment(gf3, monkeypatch):
    monkeypatch.setenv("TSRFORGE_CEILING", "50")
    with pytest.raises(CeilingExceeded):
        list(enumerate_tsr(2, 2, gf3))


def test_zero_ceiling_is_not_the_default(gf2):
    with pytest.raises(CeilingExceeded):
        list(enumerate_tsr(1, 2, gf2, ceiling=0))


def test_decompose(gf2):
    assert decompose(P(gf2, 1, 1, 0, 0, 1), 2, 2) == []
    found = decompose(P(gf2, 1, 0, 0, 1, 1), 2, 2)
    assert [(d.g, d.h) for d in found] == [(P(gf2, 1, 1), P(gf2, 1, 1, 1))]
    with pytest.raises(WrongDegree):
        decompose(P(gf2, 1, 1, 1), 2, 2)


def test_decompose_matches_exhaustive(gf3):
    for f in {phi for _, phi in enumerate_tsr(2, 2, gf3)}:
        assert decompose(f, 2, 2) == decompose_exhaustive(f, 2, 2)


def test_irreducible_decompositions_are_unique(gf3):
    for _, phi in enumerate_tsr(1, 3, gf3, "irreducible"):
        assert len(decompose(phi, 1, 3)) == 1


def test_fiber_count(gf2, gf3):
    f = P(gf2, 1, 0, 0, 1, 1)
    assert fiber_count(f, 2, 2, "bruteforce") == 2
    assert fiber_count(f, 2, 2, "formula") == 2
    assert fiber_count(P(gf2, 1, 1, 0, 0, 1), 2, 2) == 0
    assert fiber_count(P(gf3, 2, 2, 1), 1, 2) == 1
    with pytest.raises(NotUniquelyDecomposable):
        fiber_count(P(gf2, 1, 1, 0, 0, 1), 2, 2, "formula")


def test_fiber_sizes_partition(gf3):
    sizes = fiber_sizes(2, 2, gf3)
    assert sum(sizes.values()) == gl_order(2, 3) * 3
    for phi, size in sizes.items():
        if is_irreducible(phi):
            assert size == gl_order(2, 3) // 8


def test_gamma(gf2, gf4):
    t = gf4.gen
    g = P(gf2, 1, 1)
    assert gamma(t, g, 2) == P(gf2, 1, 0, 0, 1, 1)
    gf5 = field_of_order(5)
    lam = gf5.element(2)
    assert gamma(lam, P(gf5, 1, 3), 2) == P(gf5, 3, 4, 1)
    with pytest.raises(WrongDegreeElement):
        gamma(gf4.one, g, 2)


def test_enumerate_S(gf2, gf3):
    # x^2 - lam is a square in characteristic 2, so only g = 1 + x survives
    assert [(lam.code, g.codes) for lam, g in enumerate_S(2, 2, gf2)] == [(2, (1, 1)), (3, (1, 1))]
    assert sum(1 for _ in enumerate_S(2, 2, gf3)) == 12


def test_enumerate_S_for_m1(gf3):
    # m = 1: X^n - lam g is itself the image
    images = {gamma(lam, g, 3) for lam, g in enumerate_S(1, 3, gf3)}
    irreducible = {phi for _, phi in enumerate_tsr(1, 3, gf3, "irreducible")}
    assert images == irreducible


@pytest.mark.parametrize("m,n,q", [(2, 2, 2), (2, 2, 3), (1, 3, 2), (2, 3, 2)])
def test_gamma_images_are_irreducible_register_polys(m, n, q):
    ctx = field_of_order(q)
    images = delta_via_gamma(m, n, ctx)
    attained = {phi for _, phi in enumerate_tsr(m, n, ctx, "irreducible")}
    assert set(images) == attained
    assert set(images.values()) == {m}


def test_gamma_fiber(gf2):
    f = P(gf2, 1, 0, 0, 1, 1)
    fiber = gamma_fiber(f, 2, 2)
    assert len(fiber) == 2
    for mu, g in fiber:
        assert gamma(mu, g, 2) == f


def test_partitions(gf2, gf3):
    assert enumerate_V(2, 0, gf2) == frozenset()
    V = enumerate_V(2, 1, gf2)
    assert len(V) == 2
    big = default_extension(gf2, 2)
    assert V == frozenset(a for a in enumerate_elements(big) if a.code >= 2)
    with pytest.raises(DomainBound):
        proof_partitions(1, 1, gf2)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("t", [2, 3])
def test_partition_identities(t, q):
    ctx = field_of_order(q)
    for a in enumerate_elements(ctx):
        parts = proof_partitions(t, a, ctx)
        assert parts.is_consistent()
        if q % 2 == 0 and a.code == 0:
            assert not parts.V
            continue
        sizes = parts.sizes
        assert sizes["x"] == 2 * sizes["u"]
        assert proof_partitions(2 * t, a, ctx, 3**6).sizes["y"] == 2 * sizes["v"]


@pytest.mark.slow
def test_partition_identities_t4():
    ctx = field_of_order(3)
    for a in enumerate_elements(ctx):
        sizes = proof_partitions(4, a, ctx).sizes
        assert sizes["x"] == 2 * sizes["u"]
        assert proof_partitions(8, a, ctx, 3**8).sizes["y"] == 2 * sizes["v"]


@pytest.mark.parametrize("m,n,q", [(2, 2, 2), (1, 3, 2), (3, 1, 2), (2, 2, 3), (1, 2, 4)])
def test_fast_char_poly_matches_assembled(m, n, q):
    ctx = field_of_order(q)
    for t, phi in enumerate_tsr(m, n, ctx):
        assert char_poly(assemble(t)) == phi


@pytest.mark.parametrize("m,n,q", [(2, 2, 2), (2, 2, 3), (1, 3, 3), (2, 3, 2), (3, 2, 2)])
def test_irreducible_and_primitive_registers(m, n, q):
    ctx = field_of_order(q)
    for t, phi in enumerate_tsr(m, n, ctx, "irreducible"):
        assert phi.constant_code() != 0
        assert is_irreducible(char_poly(t.A))
    for t, phi in enumerate_tsr(m, n, ctx, "primitive"):
        twisted, plain = block_primitivity(t)
        assert twisted
        if q % 2 == 0 or n % 2:
            assert plain


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(1, 3), st.integers(2, 3), st.data())
def test_mn_compose_decomposes_back(q, m, n, data):
    ctx = field_of_order(q)
    g_tail = data.draw(st.lists(st.integers(0, q - 1), min_size=n - 1, max_size=n - 1))
    h_low = data.draw(st.lists(st.integers(0, q - 1), min_size=m, max_size=m).filter(lambda c: c[0] != 0))
    g = P(ctx, 1, *g_tail)
    h = P(ctx, *h_low, 1)
    found = decompose(mn_compose(g, h, m, n), m, n)
    assert any(d.g == g and d.h == h for d in found)



@pytest.mark.parametrize("m,n,q", [(2, 2, 2), (1, 3, 3), (2, 4, 2), (1, 4, 4)])
def test_plain_g_with_n_a_multiple_of_q_is_reducible(m, n, q):
    ctx = field_of_order(q)
    for t, phi in enumerate_tsr(m, n, ctx):
        if t.g == Poly.one(ctx):
            assert not is_irreducible(phi)
