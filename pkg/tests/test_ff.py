import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfeq import ff
from lfeq.errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    IndexOutOfRange,
    NotPrime,
    ParseError,
)
from lfeq.ff import PolyFF, make_field, minimal_poly, parse_element, parse_poly

from oracles import OracleField

SMALL = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (7, 1)]


def fields():
    return st.sampled_from(SMALL).map(lambda pn: make_field(*pn))


@st.composite
def field_and_elems(draw, k=2):
    sp = draw(fields())
    return (sp,) + tuple(sp.elem(draw(st.integers(0, sp.q - 1))) for _ in range(k))


def test_canonical_moduli():
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(5, 1).modulus == (0, 1)


@pytest.mark.parametrize("p,n", SMALL)
def test_tables_match_galoistools(p, n):
    sp = make_field(p, n)
    F = OracleField(p, sp.modulus)
    for x in range(sp.q):
        for y in range(sp.q):
            assert sp.add(x, y) == F.add(x, y)
            assert sp.mul(x, y) == F.mul(x, y)


def test_gf4_tables_from_worked_example():
    sp = make_field(2, 2)
    names = ["0", "1", "a", "1+a"]
    add = [["0", "1", "a", "1+a"], ["1", "0", "1+a", "a"],
           ["a", "1+a", "0", "1"], ["1+a", "a", "1", "0"]]
    mul = [["0"] * 4, ["0", "1", "a", "1+a"], ["0", "a", "1+a", "1"], ["0", "1+a", "1", "a"]]
    for i, u in enumerate(names):
        for j, v in enumerate(names):
            assert str(sp.elem(u) + sp.elem(v)) == add[i][j]
            assert str(sp.elem(u) * sp.elem(v)) == mul[i][j]


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (2, 5), (3, 3), (2, 8), (5, 3), (2, 12)])
def test_multiplicative_group_cyclic_and_inverses(p, n):
    sp = make_field(p, n)
    q = sp.q
    orders = set()
    for u in sp.nonzero():
        assert (u * u.inverse()).value == 1
        orders.add(u)
    # a generator exists: some element has order exactly q - 1
    primes = ff.prime_factors(q - 1)
    assert any(all(u ** ((q - 1) // r) != sp.one for r in primes) for u in orders)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)])
def test_frobenius_is_a_ring_map(p, n):
    sp = make_field(p, n)
    for u in sp.elements():
        for v in sp.elements():
            assert ff.frobenius(u + v) == ff.frobenius(u) + ff.frobenius(v)
            assert ff.frobenius(u * v) == ff.frobenius(u) * ff.frobenius(v)


@given(field_and_elems(k=1))
def test_minimal_poly_divides_field_polynomial(data):
    sp, u = data
    m = minimal_poly(u)
    prime = sp.prime_field
    big = PolyFF(prime, tuple([0, prime.neg(1)] + [0] * (sp.q - 2) + [1]))
    assert (big % m).is_zero()
    assert m.degree == len(ff.frobenius_orbit(u))
    assert m.degree in [d for d in range(1, sp.n + 1) if sp.n % d == 0]


@given(field_and_elems(k=3))
def test_field_axioms(data):
    sp, u, v, w = data
    assert u + v == v + u and u * v == v * u
    assert (u + v) * w == u * w + v * w
    assert (u * v) * w == u * (v * w)
    assert u - u == sp.zero and u + (-u) == sp.zero
    if v:
        assert (u / v) * v == u


@given(field_and_elems(k=1))
def test_encode_decode_and_text_round_trip(data):
    sp, u = data
    assert ff.decode(sp, ff.encode(u)) == u
    assert parse_element(sp, str(u)) == u
    assert parse_element(sp, str(u.value)) == u


@given(field_and_elems(k=1), st.integers(-50, 50))
def test_integer_multiples(data, k):
    sp, u = data
    acc = sp.zero
    for _ in range(abs(k)):
        acc = acc + u
    assert k * u == (acc if k >= 0 else -acc)


def test_element_syntax():
    sp = make_field(3, 2)
    assert str(sp.zero) == "0"
    assert str(parse_element(sp, "2+2*a")) == "2+2*a"
    assert parse_element(sp, "2a+2") == parse_element(sp, "2+2*a")
    assert repr(make_field(2, 2).elem("1+a")) == "FieldElem(GF(4), 1+a)"
    with pytest.raises(ParseError):
        parse_element(sp, "1+b")
    with pytest.raises(ParseError):
        parse_element(sp, "")


def test_subfields():
    sp = make_field(2, 4)
    subs = {s.d: s for s in ff.subfields(sp)}
    assert sorted(subs) == [1, 2, 4]
    assert len(subs[2].elements()) == 4
    assert all(subs[1].contains(u) == (u.value < 2) for u in sp.elements())


def test_polynomials():
    sp = make_field(2, 2)
    f = parse_poly(sp, "x^2+x+1")
    assert f.format() == "x^2+x+1"
    assert parse_poly(sp, "1+x+x^2") == f
    g = parse_poly(sp, "(1+a)*x+(a)")
    assert g.format() == "(1+a)*x+(a)"
    assert parse_poly(sp, g.format()) == g
    q, r = divmod(f * g + PolyFF(sp, (1,)), g)
    assert q == f and r == PolyFF(sp, (1,))
    # the roots of x^2+x+1 over GF(4) are a and 1+a
    assert {u.value for u in sp.elements() if not f(u)} == {2, 3}


def test_errors(monkeypatch):
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(DegreeOutOfRange):
        make_field(2, 0)
    with pytest.raises(DegreeOutOfRange):
        make_field(2, 30)
    big = make_field(2, 10)
    monkeypatch.setenv("FUNCEQ_MAX_ENUM", "256")
    with pytest.raises(FieldTooLarge):
        list(big.elements())
    monkeypatch.delenv("FUNCEQ_MAX_ENUM")
    sp = make_field(2, 2)
    with pytest.raises(DivisionByZero):
        sp.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        sp.one / sp.zero
    with pytest.raises(IndexOutOfRange):
        sp.elem(4)
    with pytest.raises(FieldMismatch):
        sp.one + make_field(3, 1).one
    with pytest.raises(IndexOutOfRange):
        ff.frobenius(sp.one, -1)


@settings(max_examples=30)
@given(st.integers(0, 2**20 - 1), st.integers(0, 2**20 - 1))
def test_large_field_without_tables(x, y):
    sp = make_field(2, 20)
    F = OracleField(2, sp.modulus)
    assert sp.mul(x, y) == F.mul(x, y)
    if x:
        assert sp.mul(x, sp.inv(x)) == 1
