import pytest

from src.counting import carlitz_srim
from src.errors import NotMonic, NotSelfReciprocal, OddDegree, Reducible, UsageError
from src.fields import field_of_order
from src.matrices import Matrix
from src.polynomials import is_irreducible, is_self_reciprocal, shift_compose
from src.srim import (
    delta_srim_check,
    enumerate_palindromes,
    enumerate_srim,
    q_transform_decompose,
    q_transform_expand,
    srim_to_tsr,
)
from src.tsr import classify, tsr_char_poly

from strategies import P


def test_enumerate_srim(gf2, gf3):
    assert list(enumerate_srim(4, gf2)) == [P(gf2, 1, 1, 1, 1, 1)]
    assert list(enumerate_srim(2, gf3)) == [P(gf3, 1, 0, 1)]
    with pytest.raises(OddDegree):
        list(enumerate_srim(5, gf2))


def test_palindromes(gf3):
    palindromes = list(enumerate_palindromes(4, gf3))
    assert len(palindromes) == 9
    assert all(is_self_reciprocal(f) for f in palindromes)


@pytest.mark.parametrize("two_m", [2, 4, 6, 8])
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_srim_outputs(two_m, q):
    ctx = field_of_order(q)
    found = list(enumerate_srim(two_m, ctx))
    assert len(found) == carlitz_srim(two_m // 2, q)
    for f in found:
        assert f.is_monic() and f.degree == two_m
        assert is_irreducible(f) and is_self_reciprocal(f)


def test_q_transform(gf2, gf3):
    assert q_transform_decompose(P(gf3, 1, 0, 1)) == P(gf3, 0, 1)
    assert q_transform_decompose(P(gf2, 1, 1, 1, 1, 1)) == P(gf2, 1, 1, 1)
    with pytest.raises(NotSelfReciprocal):
        q_transform_decompose(P(gf2, 1, 1, 0, 0, 1))
    with pytest.raises(NotMonic):
        q_transform_decompose(P(gf3, 2, 0, 2))
    with pytest.raises(OddDegree):
        q_transform_decompose(P(gf2, 1, 0, 0, 1))


@pytest.mark.parametrize("q", [2, 3])
def test_q_transform_inverts_on_srim(q):
    ctx = field_of_order(q)
    for two_m in (2, 4, 6, 8):
        for f in enumerate_srim(two_m, ctx):
            assert q_transform_expand(q_transform_decompose(f)) == f


def test_q_transform_on_reducible_palindromes(gf3):
    # (x+1)^2 = x (x + 1/x + 2)
    assert q_transform_decompose(P(gf3, 1, 2, 1)) == P(gf3, 2, 1)
    for f in enumerate_palindromes(4, gf3):
        assert q_transform_expand(q_transform_decompose(f)) == f


def test_srim_to_tsr(gf2, gf3):
    record = srim_to_tsr(P(gf2, 1, 1, 1, 1, 1))
    assert record.tsr.g == P(gf2, 1, 1)
    assert record.h == P(gf2, 1, 1, 1)
    assert tsr_char_poly(record.tsr) == P(gf2, 1, 0, 0, 1, 1)

    record = srim_to_tsr(P(gf3, 1, 0, 1))
    assert record.h == P(gf3, 2, 1)
    assert record.tsr.A == Matrix(gf3, [[1]])
    assert tsr_char_poly(record.tsr) == P(gf3, 2, 2, 1)

    with pytest.raises(Reducible):
        srim_to_tsr(P(gf3, 1, 2, 1))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_srim_registers(q):
    ctx = field_of_order(q)
    for two_m in (2, 4, 6):
        srims = list(enumerate_srim(two_m, ctx))
        phis = set()
        for f in srims:
            record = srim_to_tsr(f)
            phi = tsr_char_poly(record.tsr)
            assert classify(record.tsr).is_irreducible
            assert shift_compose(phi, -1) == f
            phis.add(phi)
        assert len(phis) == len(srims)


def test_record_json(gf2):
    record = srim_to_tsr(P(gf2, 1, 1, 1, 1, 1)).to_json()
    assert record["phi"] == "x^4+x^3+1"
    assert record["tsr"]["g"] == ["1", "1"]
    assert record["h1"] == {"field": "2", "coeffs": ["1", "1", "1"]}


@pytest.mark.parametrize("m", [1, 2, 3])
def test_delta_srim(m):
    assert delta_srim_check(m)


def test_delta_srim_needs_gf2(gf3):
    with pytest.raises(UsageError):
        delta_srim_check(2, gf3)


@pytest.mark.slow
def test_delta_srim_m4():
    assert delta_srim_check(4)
