import random

import pytest
from hypothesis import given, settings, strategies as st

from f2modforms import lattice_model as L
from f2modforms.linalg import gf2_rank

ROOTS = L.e8_roots()


@st.composite
def lattice_vectors(draw):
    u = tuple(draw(st.integers(-4, 4)) for _ in range(4))
    v = L.LatticeVector(u)
    for _ in range(draw(st.integers(0, 3))):
        v = v + draw(st.sampled_from(ROOTS))
    return v


def test_roots():
    assert len(ROOTS) == 240
    assert all(r.norm() == -2 for r in ROOTS)
    assert len({L.reduce_mod2(r) for r in ROOTS}) == 120


def test_lattice_vector_validation():
    with pytest.raises(ValueError):
        L.LatticeVector((0, 0, 0, 0), (2, 0, 0, 0, 0, 0, 0, 0))  # odd coordinate sum
    with pytest.raises(ValueError):
        L.LatticeVector((0, 0, 0), (0,) * 8)
    half = L.LatticeVector.from_e8(["1/2"] * 8)
    assert half.norm() == -2


def test_simple_roots_have_e8_gram_matrix():
    simple = [L.LatticeVector((0, 0, 0, 0), r) for r in L.E8_SIMPLE_ROOTS]
    gram = [[a.pair(b) for b in simple] for a in simple]
    assert all(gram[i][i] == -2 for i in range(8))
    edges = {(i + 1, j + 1) for i in range(8) for j in range(i + 1, 8) if gram[i][j]}
    # Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4
    assert edges == {(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8)}
    assert all(abs(gram[i][j]) <= 1 for i in range(8) for j in range(8) if i != j)


@settings(max_examples=60, deadline=None)
@given(lattice_vectors(), lattice_vectors())
def test_reduction_is_additive_and_respects_forms(x, y):
    sp = L.SPACE
    rx, ry = L.reduce_mod2(x), L.reduce_mod2(y)
    assert L.reduce_mod2(x + y) == rx ^ ry
    assert sp.q(rx) == (x.norm() // 2) % 2
    assert sp.bilinear(rx, ry) == x.pair(y) % 2
    assert sp.q(rx ^ ry) == (sp.q(rx) + sp.q(ry) + sp.bilinear(rx, ry)) % 2


@settings(max_examples=30, deadline=None)
@given(lattice_vectors())
def test_twice_a_vector_reduces_to_zero(x):
    assert L.reduce_mod2(x + x) == 0


def test_norm_minus_2_and_minus_4_classes():
    for r in ROOTS[:40]:
        assert L.SPACE.q(L.reduce_mod2(r)) == 1
    for a, b in zip(ROOTS[:40], ROOTS[1:41]):
        v = a + b
        if v.norm() == -4:
            assert L.SPACE.q(L.reduce_mod2(v)) == 0


def test_reduction_is_onto():
    # images of U + U basis vectors and the simple roots span F2^12
    basis = [L.LatticeVector(tuple(int(i == j) for j in range(4))) for i in range(4)]
    basis += [L.LatticeVector((0, 0, 0, 0), r) for r in L.E8_SIMPLE_ROOTS]
    assert gf2_rank([L.reduce_mod2(b) for b in basis]) == 12


def test_delta():
    delta = L.standard_A2_delta()
    assert (len(delta.first), len(delta.second), len(delta)) == (3, 120, 123)
    assert L.standard_A2_delta(3) == delta
    assert {L.reduce_mod2(v) for v in L.FIRST_TYPE_LISTED} == set(delta.first)
    assert all(L.SPACE.q(x) for x in delta.classes)
    assert len(L.norm_minus2_orthogonal(L.W_BASIS)) == 246


def test_plane_images():
    A, B = L.plane_points(L.standard_A2_delta())
    # both planes are anisotropic and orthogonal to each other
    assert all(L.SPACE.q(x) for x in A + B)
    assert all(L.SPACE.bilinear(a, b) == 0 for a in A for b in B)
    assert set(L.anti_isometry_pairing()) == set(A)


def test_listed_avoiding_witnesses():
    wit = L.listed_avoiding_witnesses()
    assert all(w["avoids_delta"] for w in wit[:4])
    assert not wit[4]["avoids_delta"]
    assert wit[4]["meets"] == ["001100000000"]


def test_listed_meeting_witnesses():
    a, b = L.listed_meeting_witnesses()
    assert a["targets_ok"] and a["intersection_ok"]
    assert b["targets_ok"] and not b["intersection_ok"]
    assert b["ok_with_beta_at_12"] and b["ok_with_e11_in_base"]


def test_complement_orbits():
    delta = L.standard_A2_delta()
    diag = L.complement_orbits(delta, "diagonal")
    assert sorted(len(o) for o in diag) == [3, 360, 405, 405, 720]
    assert sum(len(o) for o in diag) == 2016 - 123
    assert len(L.complement_orbits(delta, "full")) == 4
    assert len(L.complement_orbits(delta, "transvections")) == 10


def test_search_avoiding_each_orbit():
    delta = L.standard_A2_delta()
    for o in L.complement_orbits(delta, "diagonal"):
        star = L.find_star_avoiding(delta, o[0], seed=1)
        assert o[0] in star and not L.star_intersection(star, delta)


def test_search_rejects_bad_input():
    delta = L.standard_A2_delta()
    with pytest.raises(ValueError):
        L.find_star_avoiding(delta, next(iter(delta.first)))
    with pytest.raises(ValueError):
        L.find_star_meeting(delta, [next(iter(delta.second))])


def test_tiny_budget_exhausts():
    delta = L.standard_A2_delta()
    alpha = L.AVOID_REPRESENTATIVES[0]
    with pytest.raises(L.SearchExhausted):
        L.find_star_avoiding(delta, alpha, budget=1)


def test_search_meeting():
    delta = L.standard_A2_delta()
    for i, t in enumerate(sorted(delta.first)):
        star = L.find_star_meeting(delta, [t], seed=i)
        assert L.star_intersection(star, delta) == {t}
    star = L.find_star_meeting(delta, [L.MEET_B_ALPHA, L.MEET_B_BETA], seed=0)
    # recomputed from scratch
    hits = {x for x in star.elements if x in delta.first or x in delta.second}
    assert hits == {L.MEET_B_ALPHA, L.MEET_B_BETA}


def test_root_system_witness():
    rep = L.root_system_witness_report()
    assert rep["anisotropic"] and rep["independent"] and rep["avoids_M"]
    assert rep["standard_reading"] and not rep["literal_reading"]
    assert L.is_root_system(L.WITNESS_ROOT_SYSTEM)


def test_pattern_admissibility():
    lit = L.pattern_admissibility(L.LITERAL_EDGES)
    std = L.pattern_admissibility(L.STANDARD_EDGES)
    assert (lit["rank"], lit["admissible"]) == (6, False)
    assert (std["rank"], std["zeros"], std["admissible"]) == (8, 136, True)


def test_find_root_system_random_sets():
    for seed in range(10):
        M = L.random_nonorthogonal_set(random.Random(seed))
        assert all(L.E8_SPACE.bilinear(a, b) for a in M for b in M if a != b)
        found = L.find_e8_root_system(M, seed=seed)
        assert L.is_root_system(found)
        assert not set(found) & set(M)
    assert L.is_root_system(L.find_e8_root_system([]))
