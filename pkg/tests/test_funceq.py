import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from lfeq.errors import (
    BadIndices,
    BadParameterShape,
    NotASolution,
    ParseError,
    TooLarge,
    UnsupportedCase,
)
from lfeq.funceq import (
    EquationSpec,
    Variant,
    canonical_form,
    decompose,
    nontrivial_report,
    predicted_dim,
    random_params,
    reduce_to_two,
    satisfies,
    solution_space,
    synthesize_solution,
)
from lfeq.funceq.system import build_system

from oracles import prime_nullity


def multi(p, alphas, betas, n_field=1, s=1, t=1):
    return EquationSpec.create("MultiUnknown", p, n_field, s, t, 2, alphas, betas)


def _patterns(p, rng):
    for mask in itertools.product((0, 1), repeat=4):
        vals = [int(rng.integers(1, p)) if m else 0 for m in mask]
        yield vals[:2], vals[2:]


@pytest.mark.parametrize("p", [3, 5])
def test_multi_dimensions_all_zero_patterns(p):
    rng = np.random.default_rng(p)
    for al, be in _patterns(p, rng):
        eq = multi(p, al, be)
        dim = solution_space(eq).dimension
        assert dim == predicted_dim(eq)[0]
        assert dim == prime_nullity("MultiUnknown", p, al, be)


@pytest.mark.parametrize("alphas", [(0, 0, 0), (2, 0, 0), (1, 2, 0), (1, 1, 1), (0, 2, 2)])
def test_one_var_dimensions(alphas):
    eq = EquationSpec.create("OneVar", 3, 1, 1, 1, 3, alphas)
    dim = solution_space(eq).dimension
    assert dim == predicted_dim(eq)[0] == prime_nullity("OneVar", 3, alphas)


@pytest.mark.parametrize("variant,p", [(v, p) for v in ("BiAdditivity", "Rectangle", "CauchyXY")
                                       for p in (2, 3, 5)])
def test_preset_dimensions(variant, p):
    eq = EquationSpec.create(variant, p)
    dim = solution_space(eq).dimension
    assert dim == predicted_dim(eq)[0] == prime_nullity(variant, p)


def test_preset_values():
    assert solution_space(EquationSpec.create("BiAdditivity", 3)).dimension == 1
    assert solution_space(EquationSpec.create("CauchyXY", 5)).dimension == 2
    assert solution_space(EquationSpec.create("Rectangle", 2)).dimension == 2
    assert solution_space(EquationSpec.create("BiAdditivity", 2, 2)).dimension == 4
    assert predicted_dim(EquationSpec.create("Rectangle", 2, 2)) == (6, "rectangle_char2")


def test_nondegenerate_formula_value():
    # s t + s + t + 2 (q^s - 1) + 2 (q^t - 1) at q = 3, s = t = 1
    assert solution_space(multi(3, (1, 2), (2, 1))).dimension == 11


@pytest.mark.parametrize("s,t", [(2, 1), (1, 2)])
def test_higher_dimensional_domains(s, t):
    rng = np.random.default_rng(s + 2 * t)
    for al, be in _patterns(3, rng):
        eq = multi(3, al, be, s=s, t=t)
        assert solution_space(eq).dimension == predicted_dim(eq)[0]


@pytest.mark.slow
def test_gf5_square_domains():
    eq = multi(5, (1, 2), (3, 4), s=2, t=2)
    # s t + s + t + 2 (q^s - 1) + 2 (q^t - 1) with q = 5, s = t = 2
    assert solution_space(eq).dimension == predicted_dim(eq)[0] == 4 + 2 + 2 + 48 + 48


def test_gf4_multi():
    eq = multi(2, (1, 2), (3, 1), n_field=2)
    with pytest.raises(UnsupportedCase):
        predicted_dim(eq)
    eq = multi(2, (1, 2), (0, 0), n_field=2)
    assert solution_space(eq).dimension == predicted_dim(eq)[0]


EQS = [multi(3, al, be) for al, be in _patterns(3, np.random.default_rng(7))] + [
    multi(2, (1, 2), (0, 3), n_field=2),
    EquationSpec.create("OneVar", 5, 1, 1, 1, 3, (1, 2, 0)),
    EquationSpec.create("Rectangle", 3),
    EquationSpec.create("Rectangle", 2, 2),
    EquationSpec.create("CauchyXY", 3),
    EquationSpec.create("BiAdditivity", 2, 2),
]


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(EQS), st.integers(0, 2**32 - 1))
def test_synthesized_solutions_satisfy_and_decompose(eq, seed):
    params = random_params(eq, np.random.default_rng(seed))
    sol = synthesize_solution(eq, params)
    assert satisfies(eq, sol)
    back = decompose(sol, eq)
    assert all(np.array_equal(back.recombine()[k], sol[k]) for k in sol)


@pytest.mark.parametrize("eq", EQS[::3])
def test_basis_solutions_decompose(eq):
    for b in solution_space(eq).basis:
        sol = decompose(b, eq)
        assert sol.case == canonical_form(eq)[0]


def test_decompose_rejects_non_solutions():
    eq = multi(3, (1, 2), (1, 1))
    tables = {nm: np.zeros(9, dtype=np.int64) for nm in eq.unknown_names()}
    tables["f"][4] = 1
    with pytest.raises(NotASolution):
        decompose(tables, eq)
    with pytest.raises(BadParameterShape):
        decompose({"f": np.zeros(9)}, eq)


def test_solution_space_independent_of_seed():
    eq = multi(3, (1, 2), (2, 2))
    a, b = solution_space(eq, seed=0), solution_space(eq, seed=99)
    assert np.array_equal(a.vectors, b.vectors)


def test_equation_json_round_trip():
    eq = EquationSpec.create("SingleUnknownWeighted", 3, 1, 1, 1, 2, (1, 1), (1, 2),
                             ((1, 0), (2, 1)))
    assert EquationSpec.from_json(eq.dumps()) == eq
    with pytest.raises(ParseError):
        EquationSpec.from_json("{")
    with pytest.raises(ParseError):
        EquationSpec.from_json({"p": 3})
    with pytest.raises(BadParameterShape):
        EquationSpec.create("MultiUnknown", 3, 1, 1, 1, 2, (1,), (1, 1))


def test_size_guard():
    eq = multi(5, (1, 2), (3, 4), s=3, t=3)
    with pytest.raises(TooLarge):
        build_system(eq)


def test_reduction_rejects_bad_indices():
    eq = EquationSpec.create("MultiUnknown", 3, 1, 1, 1, 3, (1, 1, 2), (1, 2, 1))
    with pytest.raises(BadIndices):
        reduce_to_two(eq, 1, 1, 1, 2)
    with pytest.raises(BadIndices):
        reduce_to_two(eq, 1, 4, 1, 2)
    with pytest.raises(BadIndices):
        reduce_to_two(multi(3, (1, 1), (1, 1)), 1, 2, 1, 2)


def test_reduction_of_a_solution():
    eq = EquationSpec.create("MultiUnknown", 3, 1, 1, 1, 3, (1, 2, 0), (2, 1, 1))
    space = solution_space(eq)
    red = reduce_to_two(eq, 2, 1, 3, 1)
    assert red.reduced.alphas == (eq.alphas[1], eq.alphas[0])
    for b in space.basis:
        assert satisfies(red.reduced, red.transform(b))


def weighted(p, gammas, alphas=(1, 1), betas=(1, 1), n_field=1):
    return EquationSpec.create("SingleUnknownWeighted", p, n_field, 1, 1, 2, alphas, betas,
                               gammas)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=4, max_size=4),
       st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_nontrivial_report_consistent(coeffs, g):
    eq = weighted(3, (g[:2], g[2:]), coeffs[:2], coeffs[2:4])
    rep = nontrivial_report(eq)
    assert rep.consistent
    assert rep.brute_dim == prime_nullity("SingleUnknownWeighted", 3, coeffs[:2], coeffs[2:4],
                                          (g[:2], g[2:]))


def test_nontrivial_report_char2_is_brute_force_only():
    rep = nontrivial_report(weighted(2, ((1, 1), (1, 1)), n_field=2))
    assert not rep.supported and rep.consistent is None
    assert rep.brute_dim == solution_space(rep.eq).dimension
    assert "n/a" in rep.table()


def test_nontrivial_report_json():
    rep = nontrivial_report(weighted(3, ((1, 1), (1, 1))))
    data = rep.to_json()
    assert data["A_dim"] == 1 and data["brute_dim"] == 1 and data["consistent"]
    with pytest.raises(BadParameterShape):
        nontrivial_report(multi(3, (1, 1), (1, 1)))


def test_variant_names():
    assert {v.value for v in Variant} == {"OneVar", "MultiUnknown", "SingleUnknownWeighted",
                                          "BiAdditivity", "Rectangle", "CauchyXY"}
