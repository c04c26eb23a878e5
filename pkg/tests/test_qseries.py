from fractions import Fraction

import pytest
import sympy

from f2modforms import qseries
from f2modforms.qseries import QExpansion


def test_bernoulli_matches_sympy():
    for n in [0] + list(range(2, 20)):
        assert qseries.bernoulli(n) == Fraction(str(sympy.bernoulli(n)))
    # sympy now uses B_1 = +1/2; the generating function t / (e^t - 1) gives -1/2
    assert qseries.bernoulli(1) == Fraction(-1, 2)


def test_sigma():
    assert [qseries.sigma(1, n) for n in range(1, 7)] == [1, 3, 4, 7, 6, 12]
    assert qseries.sigma(5, 2) == 33


@pytest.mark.parametrize("k,a1,a2", [(6, 252, 8316), (10, 132, 67716), (14, 12, 98316)])
def test_eisenstein_coefficients(k, a1, a2):
    e = qseries.eisenstein_normalized(k, 5)
    assert (e[0], e[1], e[2]) == (Fraction(-1, 2), a1, a2)
    # every coefficient is (k / B_k) sigma_{k-1}(n), with B_k from sympy
    factor = Fraction(k) / Fraction(str(sympy.bernoulli(k)))
    assert all(e[n] == factor * sympy.divisor_sigma(n, k - 1) for n in range(1, 5))


def test_eisenstein_rejects_other_weights():
    with pytest.raises(ValueError):
        qseries.eisenstein_normalized(8, 3)


def test_multiplication_and_truncation():
    a = QExpansion({0: 1, 1: 1}, order=5)
    assert (a * a).coeffs == QExpansion({0: 1, 1: 2, 2: 1}, order=5).coeffs
    assert (a**5).order == 5 and (a**5)[4] == 5
    with pytest.raises(ValueError):
        QExpansion({Fraction(1, 3): 1})


def test_eta12_support_and_first_terms():
    eta = qseries.eta12(50)
    assert all(e.denominator == 2 for e in eta.support())
    # q^{1/2} prod (1 - q^n)^12 = sum tau(n) q^{n/2}-style check against sympy
    q = sympy.symbols("q")
    prod = sympy.expand(sympy.prod([(1 - q**n) ** 12 for n in range(1, 6)]))
    for k in range(5):
        assert eta[Fraction(2 * k + 1, 2)] == prod.coeff(q, k)


def test_jacobi_identity():
    assert qseries.jacobi_defect(50).is_zero()


def test_theta_constants_leading_terms():
    t1, t2, t3 = qseries.theta_constants(4)
    assert t1[0] == 1 and t1[Fraction(1, 2)] == 2 and t1[2] == 2
    assert t2[Fraction(1, 8)] == 2 and t2[Fraction(9, 8)] == 2
    assert t3[Fraction(1, 2)] == -2


def test_theta_square_sum():
    const, holds = qseries.theta_square_constant(12)
    assert holds
    assert const == Fraction(1, 2)


def test_heegner_counts():
    rep = qseries.heegner_report(6)
    assert rep["components_H(-1)"] == 2016
    assert rep["components_H(-2)"] == 2079
    assert 8316 == 4 * 2079
    assert rep["H(-2) weight per component"] == 4
