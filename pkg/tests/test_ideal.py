import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from f2modforms import ideal, subspaces, weil
from f2modforms.ideal import Polynomial


def to_sympy(p, xs):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[xs[i] for i in mono])
                            for mono, c in p.terms.items()))


polys = st.dictionaries(
    st.lists(st.integers(0, 3), min_size=0, max_size=3).map(lambda l: tuple(sorted(l))),
    st.integers(-4, 4),
    max_size=5,
).map(Polynomial)


@settings(max_examples=50)
@given(polys, polys)
def test_polynomial_arithmetic_matches_sympy(p, q):
    xs = sympy.symbols("x0:4")
    assert to_sympy(p * q, xs) == sympy.expand(to_sympy(p, xs) * to_sympy(q, xs))
    assert to_sympy(p - q, xs) == sympy.expand(to_sympy(p, xs) - to_sympy(q, xs))


def test_polynomial_evaluate_and_primitive():
    p = Polynomial({(0,): 2, (1, 1): Fraction(4, 3)})
    assert p.evaluate([1, 3]) == 2 + 12
    assert p.primitive() == Polynomial({(0,): 3, (1, 1): 2})


def test_difference_detection():
    assert ideal.diff(0, 1).is_difference()
    assert not Polynomial.var(0).is_difference()


def test_relation_set_m2():
    rels = ideal.relation_set(2)
    assert len(rels.linear) == 1
    # nine quadratics of the single sextet, none identically zero
    assert len(rels.quadratic) == 9
    ring = rels.ring
    assert all(ring.vanishes_on_chi(p) for p in rels.polys())


def test_relation_count_m3_is_35():
    rels = ideal.relation_set(3)
    assert len(rels.linear) == subspaces.count_ti(3, 1) == 35


def test_generators_vanish_m3():
    ring = ideal.DifferenceRing(3)
    rels = ideal.relation_set(3, ring)
    assert all(ring.vanishes_on_chi(p) for p in rels.polys())


def test_a_non_relation_does_not_vanish():
    ring = ideal.DifferenceRing(2)
    assert not ring.vanishes_on_chi(ideal.diff(0, 1))


@pytest.mark.parametrize("m", [2, 3])
def test_linear_slice_is_invariant_dimension_minus_one(m):
    # the linear relations are exactly the kernel of X_S -> chi_S on differences
    assert ideal.hilbert_slice(m, 1) == weil.invariant_dimension(m) - 1


def test_hilbert_slices():
    assert [ideal.hilbert_slice(1, d) for d in range(4)] == [1, 1, 1, 1]
    # m=2: (d+1)^2, a three-dimensional cone
    assert [ideal.hilbert_slice(2, d) for d in (1, 2, 3)] == [4, 9, 16]
    assert ideal.hilbert_slice(3, 2) == 91


def test_quadratic_rank_m3():
    ring = ideal.DifferenceRing(3)
    I3 = ideal.GradedIdeal(ring, ideal.relation_set(3, ring))
    assert I3.quadratic_rank_mod_linear() == 14


def test_sextet_identities_m3_exhaustive():
    sp = subspaces.QuadraticSpace(3)
    for A in subspaces.enumerate_ti(sp, 1):
        six = subspaces.extensions_of_codim2(A)
        assert ideal.sextet_span_dimension(six) == 5
        assert ideal.linear_identity_holds(six)
        assert all(ideal.quadratic_identities_hold(six))


def test_identities_fail_on_a_wrong_labelling():
    six = subspaces.six_spaces_table()
    swapped = [six[0], six[2], six[1], six[3], six[4], six[5]]
    assert not ideal.linear_identity_holds(swapped)


@pytest.fixture(scope="module")
def ideal3():
    ring = ideal.DifferenceRing(3)
    return ring, ideal.GradedIdeal(ring, ideal.relation_set(3, ring))


def test_quartic_membership_with_certificate(ideal3):
    ring, I3 = ideal3
    _, quartic = ideal.standard_quartic(ring)
    assert quartic.is_homogeneous() and quartic.degree == 4
    assert ring.vanishes_on_chi(quartic)
    res = ideal.graded_membership(quartic, I3)
    assert res.member
    cert = ideal.Certificate.from_json(res.certificate.to_json())
    assert cert.expand(I3.gens_y) == ring.to_y(quartic)


def test_non_member_quartic(ideal3):
    ring, I3 = ideal3
    p = ideal.diff(1, 0) * ideal.diff(1, 0) * ideal.diff(1, 0) * ideal.diff(1, 0)
    assert not ring.vanishes_on_chi(p)
    assert not ideal.graded_membership(p, I3).member


def test_growth_degree_heuristic():
    # slope between the last two slices: log(16/9) / log(3/2), plus one
    assert ideal.growth_degree([4, 9, 16]) == pytest.approx(math.log(16 / 9) / math.log(3 / 2) + 1)
    assert ideal.growth_degree([1]) is None
    assert ideal.growth_degree([1, 1, 1]) == 1.0
