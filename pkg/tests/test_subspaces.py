import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from f2modforms import subspaces as sub
from f2modforms.f2space import QuadraticSpace


def brute_ti(space, k):
    """All k-dim totally isotropic subspaces as frozensets, by closing subsets."""
    iso = space.isotropic()
    found = set()
    for basis in itertools.combinations(iso, k):
        span = {0}
        for b in basis:
            span |= {x ^ b for x in span}
        if len(span) == 2**k and all(space.q(x) == 0 for x in span):
            found.add(frozenset(span))
    return found


@pytest.mark.parametrize("m,k", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
def test_enumeration_matches_brute_force(m, k):
    sp = QuadraticSpace(m)
    listed = [S.elements for S in sub.enumerate_ti(sp, k)]
    assert len(listed) == len(set(listed))
    assert set(listed) == brute_ti(sp, k)
    assert len(listed) == sub.count_ti(m, k)


def test_maximal_counts():
    # product of (2^i + 1) for i < m
    assert [sub.count_ti(m, m) for m in range(1, 7)] == [2, 6, 30, 270, 4590, 151470]
    assert len(sub.maximal_ti(QuadraticSpace(4))) == 270


def test_enumerate_rejects_large_k():
    with pytest.raises(ValueError):
        list(sub.enumerate_ti(QuadraticSpace(2), 3))


def test_span_is_canonical():
    sp = QuadraticSpace(2)
    a = sub.IsotropicSubspace.span(sp, [sp.vec("1000"), sp.vec("0010")])
    b = sub.IsotropicSubspace.span(sp, [sp.vec("1010"), sp.vec("0010")])
    assert a == b and hash(a) == hash(b)
    assert a.bits() == "1000;0010"


def test_span_rejects_anisotropic():
    sp = QuadraticSpace(1)
    with pytest.raises(ValueError):
        sub.IsotropicSubspace.span(sp, [sp.vec("11")])


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_random_ti_is_totally_isotropic(seed):
    sp = QuadraticSpace(5)
    S = sub.random_ti(sp, 3, random.Random(seed))
    assert S.dim == 3
    assert all(sp.q(x) == 0 for x in S.elements)
    assert all(sp.bilinear(x, y) == 0 for x in S.basis for y in S.basis)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_codim2_spaces_have_six_extensions(m):
    sp = QuadraticSpace(m)
    rng = random.Random(m)
    for _ in range(5):
        A = sub.random_ti(sp, m - 2, rng) if m > 2 else sub.IsotropicSubspace.span(sp, [])
        six = sub.extensions_of_codim2(A)
        assert len(set(six)) == 6
        assert all(S.contains_space(A) for S in six)
        left, right = sub.bipartition(six)
        assert (left, right) == ([0, 2, 4], [1, 3, 5])
        # cross-class intersections have dim m-1, same-class ones dim m-2
        for i, j in itertools.combinations(range(6), 2):
            assert six[i].intersection_dim(six[j]) == (m - 1 if (i + j) % 2 else m - 2)


def test_nine_intersections_m3_exhaustive():
    sp = QuadraticSpace(3)
    for A in sub.enumerate_ti(sp, 1):
        nine = sub.nine_intersections(sub.extensions_of_codim2(A))
        assert len(set(nine)) == 9
        assert all(N.dim == 2 for N in nine)


def test_coset_partition_and_star_m3():
    sp = QuadraticSpace(3)
    stars = list(sub.enumerate_stars(sp))
    assert len(stars) == 105
    for st_ in stars:
        base, iso, an, mixed = sub.classify_cosets(st_.base).counts()
        assert (base, iso, an) == (1, 2, 1)
        # the star is exactly the anisotropic vectors of base-perp outside the base cosets
        perp_aniso = {v for v in st_.base.perp() if sp.q(v)}
        assert st_.elements == perp_aniso
        assert len(st_.elements) == 4


def test_star_superspaces_are_the_isotropic_cosets():
    sp = QuadraticSpace(3)
    for st_ in itertools.islice(sub.enumerate_stars(sp), 20):
        I, J = sub.star_superspaces(st_)
        assert I.intersection_dim(J) == 2
        assert not (st_.elements & (I.elements | J.elements))


def test_star_sign_flip_exhaustive_m3():
    assert all(sub.star_sign_check(s) for s in sub.enumerate_stars(QuadraticSpace(3)))


def test_sign_check_fails_for_a_non_star_vector():
    sp = QuadraticSpace(3)
    st_ = next(sub.enumerate_stars(sp))
    other = next(a for a in sp.anisotropic() if a not in st_)
    assert not sub.star_sign_check(st_, centres=[other])


def test_star_from_coset_round_trip():
    sp = QuadraticSpace(3)
    for st_ in itertools.islice(sub.enumerate_stars(sp), 10):
        assert sub.Star.from_coset(sp, list(st_.elements)) == st_
    with pytest.raises(ValueError):
        sub.Star.from_coset(sp, [1, 2, 3])


def test_psi_relations_hold_and_the_printed_sixth_fails():
    sp = QuadraticSpace(3)
    for A in sub.enumerate_ti(sp, 1):
        six = sub.extensions_of_codim2(A)
        assert all(ok for *_, ok in sub.psi_relations(six))
        printed = [ok for *_, ok in sub.psi_relations(six, sub.PSI_RELATIONS_PRINTED)]
        assert printed == [True] * 5 + [False] + [True] * 3


def test_relabelings():
    labels = sub.relabelings()
    assert len(labels) == len(set(labels)) == 72


def test_thirty_space_configuration():
    sp = QuadraticSpace(3)
    A = sub.IsotropicSubspace.span(sp, [])
    conf = sub.thirty_space_configuration(A, sp.vec("110000"))
    assert len(conf.spaces) == 30
    assert set(conf.spaces) == set(sub.table30())
    with pytest.raises(ValueError):
        sub.thirty_space_configuration(A, sp.vec("100000"))


def test_fixture_tables():
    assert len(sub.table30()) == 30
    six = sub.six_spaces_table()
    assert [S.bits() for S in six] == ["1000;0010", "1000;0001", "0100;0001", "0100;0010", "1001;0110", "1010;0101"]
    rows = sub.nine_stars_table()
    stars = [sub.star_of(N) for N in sub.nine_intersections(six)]
    assert [r["star"] for r in rows] == [s.elements for s in stars]
    assert [r["pair"] for r in rows] == list(sub.STAR_PAIRS)


def test_fixture_dir_override(tmp_path, monkeypatch):
    (tmp_path / "six_spaces_m2.txt").write_text("# one line\n1000;0010\n")
    monkeypatch.setenv(sub.FIXTURE_ENV, str(tmp_path))
    assert [S.bits() for S in sub.six_spaces_table()] == ["1000;0010"]


def test_format_and_parse_round_trip():
    sp = QuadraticSpace(3)
    subs = sub.maximal_ti(sp)
    assert sub.parse_subspace_lines(sp, sub.format_subspaces(subs)) == subs
