import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lfeq import semihom
from lfeq.errors import FieldMismatch, ZeroParameter
from lfeq.ff import make_field, minimal_poly
from lfeq.la import MatFF

from oracles import OracleField, additive_solutions, biadditive_solutions, frobenius_conjugate

GF4 = make_field(2, 2)


def _coordinate_operator(a0, a1, b0, b1):
    """The GF(4) operator matrix written out in coordinates."""
    return [
        [a0 * b0, a0 * b1, a1 * b0, a1 * b1],
        [a0 * b1, a0 * b0 + a0 * b1, a1 * b1, a1 * b0 + a1 * b1],
        [a1 * b0, a1 * b1, a0 * b0 + a1 * b0, a0 * b1 + a1 * b1],
        [a1 * b1, a1 * b0 + a1 * b1, a0 * b1 + a1 * b1, a0 * b0 + a0 * b1 + a1 * b0 + a1 * b1],
    ]


def test_translation_matrices_gf4():
    m0, m1 = semihom.translation_matrices(GF4)
    assert m0.tolist() == [[1, 0], [0, 1]]
    assert m1.tolist() == [[0, 1], [1, 1]]


@pytest.mark.parametrize("alpha,beta", list(itertools.product(range(4), repeat=2)))
def test_operator_matrix_matches_coordinate_formula(alpha, beta):
    a0, a1 = GF4.digits(alpha)
    b0, b1 = GF4.digits(beta)
    expected = (np.array(_coordinate_operator(a0, a1, b0, b1)) % 2).tolist()
    assert semihom.operator_matrix(GF4, alpha, beta).P.tolist() == expected


def test_worked_example_operator_and_gammas():
    rep = semihom.operator_matrix(GF4, "1+a", "a")
    assert rep.P.tolist() == [[0, 1, 0, 1], [1, 1, 1, 1], [0, 1, 0, 0], [1, 1, 0, 0]]
    cp = semihom.operator_char_poly(GF4, "1+a", "a")
    # (t+1)^2 (t^2+t+1) = t^4+t^3+t+1
    assert cp.values == (1, 1, 0, 1, 1)
    gammas = {str(g): m for g, m in semihom.biadd_gammas(GF4, "1+a", "a")}
    assert gammas == {"1": 2, "a": 1, "1+a": 1}


def test_operator_apply_is_the_semilinear_action():
    rep = semihom.operator_matrix(GF4, "1+a", "a")
    B = MatFF.from_rows(GF4, [[1, 0], [1, 1]])
    img = rep.apply(B)
    w = semihom.BiAddWitness(B, rep.alpha, rep.beta, GF4.one)
    w_img = semihom.BiAddWitness(img, rep.alpha, rep.beta, GF4.one)
    for u in GF4.elements():
        for v in GF4.elements():
            assert w_img.value(u, v) == w.value(rep.alpha * u, rep.beta * v)


@pytest.mark.parametrize("p,n", [(2, 2), (3, 1), (2, 3), (3, 2)])
def test_biadd_decide_against_operator_spectrum(p, n):
    sp = make_field(p, n)
    rng = np.random.default_rng(p * 10 + n)
    for _ in range(12):
        a, b, g = (sp.elem(int(x)) for x in rng.integers(1, sp.q, 3))
        w = semihom.biadd_decide(sp, a, b, g)
        gammas = {x for x, _ in semihom.biadd_gammas(sp, a, b)}
        assert (w is not None) == (g in gammas)
        if w is not None:
            assert semihom.biadd_verify(w)


def test_biadd_gamma_outside_spectrum_absent():
    F = OracleField(2, GF4.modulus)
    assert semihom.biadd_decide(GF4, "1+a", "a", "1") is not None
    # in GF(4) every non-zero gamma is in the spectrum for this pair
    assert all(biadditive_solutions(F, 3, 2, g) for g in (1, 2, 3))
    sp = make_field(3)
    assert semihom.biadd_decide(sp, 1, 1, 2) is None
    assert semihom.biadd_decide(sp, 2, 2, 1) is not None


def test_witness_json_round_trip():
    w = semihom.biadd_decide(GF4, "1+a", "a", "a")
    again = semihom.BiAddWitness.from_json(w.to_json())
    assert again == w
    assert set(w.to_json()) == {"p", "n", "modulus", "alpha", "beta", "gamma", "B"}
    bad = dict(w.to_json(), modulus=[1, 0, 1])
    with pytest.raises(FieldMismatch):
        semihom.BiAddWitness.from_json(bad)


def test_tampered_witness_fails_verification():
    w = semihom.biadd_decide(GF4, "1+a", "a", "a")
    assert semihom.biadd_verify(w, 2, 2)
    B = w.B.to_array().copy()
    B[0, 0] ^= 1
    bad = semihom.BiAddWitness(MatFF.from_array(GF4, B), w.alpha, w.beta, w.gamma)
    assert not semihom.biadd_verify(bad, 2, 2)


def test_trivial_witness():
    w = semihom.biadd_decide(GF4, 1, 1, 1)
    assert w is not None and semihom.biadd_verify(w)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2)])
def test_add_decide_all_pairs(p, n):
    sp = make_field(p, n)
    F = OracleField(p, sp.modulus)
    for a in range(1, sp.q):
        for b in range(1, sp.q):
            w = semihom.add_decide(sp, a, b)
            brute = bool(additive_solutions(F, a, b)) if sp.q <= 8 else None
            conj = frobenius_conjugate(F, a, b)
            assert (w is not None) == conj
            if brute is not None:
                assert brute == conj
            assert (w is not None) == (minimal_poly(sp.elem(a)) == minimal_poly(sp.elem(b)))
            if w is not None:
                assert w.verify()
                assert semihom.conjugate_exponent(sp.elem(a), sp.elem(b)) is not None


def test_add_witness_worked_example():
    w = semihom.add_decide(GF4, "a", "1+a")
    assert w.L.tolist() == [[1, 1], [0, 1]]
    assert semihom.homogeneity_field(GF4, w.L).d == 1


@given(st.sampled_from([(2, 2), (2, 3), (3, 2), (2, 4)]), st.data())
def test_homogeneity_field_is_a_subfield(pn, data):
    sp = make_field(*pn)
    a = sp.elem(data.draw(st.integers(1, sp.q - 1)))
    j = data.draw(st.integers(0, sp.n - 1))
    w = semihom.add_decide(sp, a, a ** (sp.p**j))
    assert w is not None
    h = semihom.homogeneity_field(sp, w.L)
    assert sp.n % h.d == 0
    # the identity relation: a witness for (a, a) with a primitive commutes with all of K
    if j == 0 and minimal_poly(a).degree == sp.n:
        assert h.d == sp.n


def test_add_space_and_intersections():
    sp = make_field(2, 2)
    assert semihom.add_space(sp, [(sp.elem("a"), sp.elem("a"))]).dimension == 1
    assert semihom.add_space(sp, [(sp.elem("a"), sp.elem("1+a"))]).dimension == 1
    assert semihom.add_space(sp, [(sp.elem("a"), sp.one)]).dimension == 0
    assert semihom.add_space(sp, []).dimension == 2
    d, mats = semihom.intersect_constraints(sp, [(sp.elem("1+a"), sp.elem("a"), sp.one)])
    assert d == 2 and len(mats) == 2
    d, _ = semihom.intersect_constraints(sp, [(sp.elem("1+a"), sp.elem("a"), sp.one),
                                              (sp.elem("1+a"), sp.elem("a"), sp.elem("a"))])
    assert d == 0


def test_zero_parameters_rejected():
    with pytest.raises(ZeroParameter):
        semihom.biadd_decide(GF4, 0, 1, 1)
    with pytest.raises(ZeroParameter):
        semihom.biadd_decide(GF4, 1, 1, 0)
    with pytest.raises(ZeroParameter):
        semihom.add_decide(GF4, 1, 0)
