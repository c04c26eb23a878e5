import itertools

import pytest
from hypothesis import given, strategies as st

from f2modforms.f2space import (
    QuadraticSpace,
    anisotropic_count,
    census,
    isotropic_count,
    relative_census,
    relative_counts,
)


def q_from_coords(c):
    # x1 x2 + x3 x4 + ... straight from the definition
    return sum(c[i] * c[i + 1] for i in range(0, len(c), 2)) % 2


def bilinear_from_coords(x, y):
    return sum(x[i] * y[i + 1] + x[i + 1] * y[i] for i in range(0, len(x), 2)) % 2


def test_vec_and_bits_round_trip():
    sp = QuadraticSpace(2)
    v = sp.vec("1011")
    assert v == 0b1011
    assert sp.bits(v) == "1011"
    assert sp.coords(v) == (1, 0, 1, 1)
    assert sp.vec((1, 0, 1, 1)) == v
    assert sp.unit(1) == 0b1000 and sp.unit(4) == 0b0001


def test_separators_are_ignored_in_bitstrings():
    sp = QuadraticSpace(3)
    assert sp.vec("10;01;11") == sp.vec("100111")


def test_bad_inputs():
    with pytest.raises(ValueError):
        QuadraticSpace(0)
    sp = QuadraticSpace(1)
    with pytest.raises(ValueError):
        sp.vec("101")
    with pytest.raises(ValueError):
        sp.q(4)
    with pytest.raises(ValueError):
        sp.unit(3)
    with pytest.raises(ValueError):
        sp.transvection(0, 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_q_and_bilinear_match_coordinate_formulas(m):
    sp = QuadraticSpace(m)
    for x in sp.vectors():
        cx = sp.coords(x)
        assert sp.q(x) == q_from_coords(cx)
        assert sp.q_table[x] == sp.q(x)
    for x, y in itertools.product(range(sp.size), repeat=2):
        assert sp.bilinear(x, y) == bilinear_from_coords(sp.coords(x), sp.coords(y))


@given(st.integers(1, 6), st.data())
def test_polarisation(m, data):
    sp = QuadraticSpace(m)
    x = data.draw(st.integers(0, sp.size - 1))
    y = data.draw(st.integers(0, sp.size - 1))
    assert sp.q(x ^ y) == (sp.q(x) + sp.q(y) + sp.bilinear(x, y)) % 2


@given(st.integers(1, 6), st.data())
def test_transvection_preserves_q_and_is_an_involution(m, data):
    sp = QuadraticSpace(m)
    a = data.draw(st.sampled_from(sp.anisotropic()))
    x = data.draw(st.integers(0, sp.size - 1))
    y = sp.transvection(a, x)
    assert sp.q(y) == sp.q(x)
    assert sp.transvection(a, y) == x


def test_small_census_by_hand():
    # m=1: q = x1 x2 vanishes on 00, 01, 10
    assert census(QuadraticSpace(1)) == (3, 1)
    assert isotropic_count(1) == 3 and anisotropic_count(1) == 1


def test_census_m6():
    iso, an = census(QuadraticSpace(6))
    assert (iso, iso - 1, an) == (2080, 2079, 2016)


@pytest.mark.parametrize("m", range(1, 7))
def test_census_formula(m):
    assert census(QuadraticSpace(m)) == (isotropic_count(m), anisotropic_count(m))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_relative_census_every_vector(m):
    sp = QuadraticSpace(m)
    for a in range(1, sp.size):
        assert relative_census(sp, a) == relative_counts(m, sp.q(a) == 0)


def test_relative_counts_add_up():
    for m in range(1, 7):
        for iso in (True, False):
            n = relative_counts(m, iso)
            assert sum(n) == 4**m - 1


def test_relative_census_rejects_zero():
    with pytest.raises(ValueError):
        relative_census(QuadraticSpace(2), 0)


def test_orthogonal_to():
    sp = QuadraticSpace(2)
    a = sp.vec("1000")
    perp = sp.orthogonal_to([a])
    # (a, x) = x2
    assert perp == [x for x in sp.vectors() if sp.coords(x)[1] == 0]
