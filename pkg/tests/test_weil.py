import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from f2modforms import weil
from f2modforms.f2space import QuadraticSpace
from f2modforms.subspaces import maximal_ti, random_ti, standard_ti


def S_by_definition(f):
    sp = f.space
    return [sum(Fraction((-1) ** sp.bilinear(x, y)) * f(x) for x in range(sp.size)) / 2**sp.m
            for y in range(sp.size)]


def invariant_dim_nullspace(m):
    """dim ker(S - 1) & ker(T - 1) from explicit sympy matrices."""
    sp = QuadraticSpace(m)
    n = sp.size
    S = sympy.Matrix(n, n, lambda y, x: sympy.Rational((-1) ** sp.bilinear(int(x), int(y)), 2**m))
    T = sympy.diag(*[(-1) ** sp.q(x) for x in range(n)])
    I = sympy.eye(n)
    return len((S - I).col_join(T - I).nullspace())


def random_function(sp, seed):
    rng = random.Random(seed)
    return weil.GroupFunction(sp, [rng.randint(-5, 5) for _ in range(sp.size)])


@pytest.mark.parametrize("m", [1, 2, 3])
def test_act_S_matches_the_defining_sum(m):
    f = random_function(QuadraticSpace(m), m)
    g = weil.act_S(f)
    assert [g(y) for y in range(f.space.size)] == S_by_definition(f)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**6))
def test_relations_S2_and_ST_cubed(m, seed):
    f = random_function(QuadraticSpace(m), seed)
    S, T = weil.act_S, weil.act_T
    assert S(S(f)) == f
    assert S(T(S(T(S(T(f)))))) == f
    assert T(T(f)) == f


@pytest.mark.parametrize("m", [1, 2])
def test_invariant_dimension_against_nullspace(m):
    assert weil.invariant_dimension(m) == invariant_dim_nullspace(m)


def test_invariant_dimensions():
    assert weil.projector_rank(QuadraticSpace(1))[1] == 2
    assert weil.projector_rank(QuadraticSpace(3))[1] == 15
    assert [weil.invariant_dimension_formula(m) for m in range(1, 7)] == [2, 5, 15, 51, 187, 715]
    for m in range(1, 7):
        assert weil.invariant_dimension_character(m) == weil.invariant_dimension_formula(m)


def test_invariant_basis_m2():
    sp = QuadraticSpace(2)
    basis = weil.invariant_basis(sp)
    assert len(basis) == 5
    assert all(weil.is_invariant(f) for f in basis)


def test_block_traces_constant():
    for m in range(1, 7):
        assert weil.block_traces(m) == (3, 1, 0)


def test_chi_of_maximal_spaces_invariant_m3():
    sp = QuadraticSpace(3)
    assert all(weil.is_invariant(weil.chi(S)) for S in maximal_ti(sp))
    cols = weil.chi_matrix(maximal_ti(sp), sp.size)
    assert weil.invariant_columns(sp, cols).all()


def test_non_invariant_detected():
    sp = QuadraticSpace(3)
    f = weil.GroupFunction.indicator(sp, [0, 1])
    assert not weil.is_invariant(f)
    assert not weil.invariant_columns(sp, np.array([[int(f(x))] for x in range(sp.size)])).any()


def test_hadamard_int_matches_exact_transform():
    sp = QuadraticSpace(2)
    f = random_function(sp, 7)
    arr = np.array([[int(f(x))] for x in range(sp.size)], dtype=np.int64)
    out = weil.hadamard_int(sp, arr)[:, 0]
    assert [Fraction(int(v), 4) for v in out] == S_by_definition(f)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_ti_span_exact(m):
    assert weil.ti_span_dimension(m)["rank"] == weil.invariant_dimension_formula(m)


def test_special_invariant_values():
    sp = QuadraticSpace(6)
    a = sp.unit(1)
    f = weil.special_invariant(sp, a)
    assert f(0) == 16 and f(a) == -16
    ones = [x for x in f.support() if x not in (0, a)]
    assert len(ones) == 1024
    assert all(sp.q(x) == 0 and sp.bilinear(a, x) == 1 and f(x) == 1 for x in ones)
    with pytest.raises(ValueError):
        weil.special_invariant(sp, sp.vec("110000000000"))


@pytest.mark.parametrize("m,ratio", [(2, -2), (3, -6), (4, -30)])
def test_special_invariant_combinations(m, ratio):
    rep = weil.special_invariant_check(m)
    assert rep["corrected_ratio"] == ratio
    # the printed weighting only works when 2^{m-2} = 1
    assert (rep["printed_ratio"] is not None) == (m == 2)


def test_full_invariant():
    for m in range(1, 5):
        sp = QuadraticSpace(m)
        f = weil.full_invariant(sp)
        assert weil.is_invariant(f)
        assert f(0) == 2 ** (m - 1) + 1


def test_group_function_json_round_trip():
    sp = QuadraticSpace(2)
    f = weil.GroupFunction(sp, [Fraction(k, 3) for k in range(16)])
    assert weil.GroupFunction.from_json(sp, f.to_json()) == f


def test_cusp_value_oracle():
    # lead coefficient -B_k / (n - 2), k = n/2 - 1, from sympy's Bernoulli numbers
    sp = QuadraticSpace(6)
    full = weil.full_invariant(sp)
    for n in (6, 10, 14):
        k = n // 2 - 1
        lead = Fraction(str(-sympy.bernoulli(k) / (n - 2)))
        a = sp.unit(1)
        assert weil.cusp_value(full, n, a) == lead * (33 + (1 - 2**k))
        assert weil.cusp_value(full, n, None) == lead * 33
    assert weil.cusp_value(full, 10, sp.unit(1)) == Fraction(3, 40)
    with pytest.raises(ValueError):
        weil.cusp_value(full, 8, None)


def test_cusp_value_on_H():
    sp = QuadraticSpace(6)
    a = sp.unit(1)
    h = weil.special_invariant(sp, a) - weil.full_invariant(sp).scale(Fraction(16, 33))
    assert h(0) == 0
    for x in sp.isotropic():
        assert weil.cusp_value(h, 10, x) == -h(x) / 16


def test_subquotient_coordinates_preserve_q():
    sp = QuadraticSpace(4)
    S = random_ti(sp, 2, random.Random(5))
    sq = weil.Subquotient(S)
    assert sq.target.m == 2
    for x in sq.perp:
        assert sq.target.q(sq.coords(x)) == sp.q(x)
        for s in S.elements:
            assert sq.coords(x ^ s) == sq.coords(x)


def test_lift_preserves_invariance():
    sp = QuadraticSpace(4)
    S = standard_ti(sp, 1)
    small = weil.Subquotient(S).target
    for f in weil.invariant_basis(small):
        assert weil.is_invariant(weil.lift_psi(S, f))


def test_psi_image_small():
    sp = QuadraticSpace(4)
    rep = weil.psi_image_report(standard_ti(sp, 1))
    assert rep["lift_rank"] == rep["periodic_invariant_dim"] == weil.invariant_dimension_formula(3)
    assert rep["lifts_invariant"]


def test_restriction_rank_m3():
    rep = weil.isotropic_restriction_rank(3)
    assert rep["rank"] == rep["dim_H"] == 14
