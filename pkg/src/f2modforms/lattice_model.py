"""The lattice U + U + (-E8), its reduction mod 2 onto F2^12,
the standard A2-point and the finite star searches around it.

Conventions: the U + U part carries q(a1, a2, b1, b2) = a1 a2 + b1 b2, so
reduction mod 2 of those four coordinates already lands in split form.  E8 is
the even coordinate model (integer vectors with even sum together with the
all-half-integer vectors with even sum); coordinates are stored doubled so
that everything stays integral.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .f2space import F2Vector, QuadraticSpace
from .linalg import gf2_rank, gf2_reduce, gf2_rref
from .ortho_group import OrthogonalMap, orbits, transvection_map
from .subspaces import IsotropicSubspace, Star

SPACE = QuadraticSpace(6)
E8_SPACE = QuadraticSpace(4)


@dataclass(frozen=True)
class LatticeVector:
    """(a1, a2, b1, b2; x) with x in E8 given by doubled coordinates."""

    u: tuple[int, int, int, int]
    e8: tuple[int, ...] = (0,) * 8

    def __post_init__(self):
        if len(self.u) != 4 or len(self.e8) != 8:
            raise ValueError("need 4 hyperbolic and 8 E8 coordinates")
        parities = {c % 2 for c in self.e8}
        if len(parities) != 1 or sum(self.e8) % 4:
            raise ValueError(f"{self.e8} (doubled) is not in E8")

    @classmethod
    def from_e8(cls, coords: Sequence) -> "LatticeVector":
        """A vector of -E8 with ordinary (possibly half-integral) coordinates."""
        doubled = tuple(int(Fraction(c) * 2) for c in coords)
        return cls((0, 0, 0, 0), doubled)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(
            tuple(a + b for a, b in zip(self.u, other.u)),
            tuple(a + b for a, b in zip(self.e8, other.e8)),
        )

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.u), tuple(-a for a in self.e8))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return self + (-other)

    def pair(self, other: "LatticeVector") -> int:
        a1, a2, b1, b2 = self.u
        c1, c2, d1, d2 = other.u
        hyp = a1 * c2 + a2 * c1 + b1 * d2 + b2 * d1
        e8 = sum(x * y for x, y in zip(self.e8, other.e8))
        if e8 % 4:
            raise AssertionError("E8 pairing is not integral")
        return hyp - e8 // 4

    def norm(self) -> int:
        return self.pair(self)


def e8_roots() -> list[LatticeVector]:
    """The 240 roots of E8 (as vectors of -E8, so of norm -2)."""
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            c = [0] * 8
            c[i], c[j] = si, sj
            roots.append(tuple(c))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(signs)
    return [LatticeVector((0, 0, 0, 0), r) for r in roots]


# simple roots (Bourbaki numbering), doubled coordinates
E8_SIMPLE_ROOTS = (
    (1, -1, -1, -1, -1, -1, -1, 1),
    (2, 2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
)


@lru_cache(maxsize=None)
def _e8_inverse() -> tuple[tuple[Fraction, ...], ...]:
    """Inverse of the simple-root matrix (rows = roots, ordinary coordinates)."""
    import sympy

    M = sympy.Matrix([[Fraction(c, 2) for c in r] for r in E8_SIMPLE_ROOTS])
    if M.det() not in (1, -1):
        raise AssertionError("simple roots do not form a Z-basis")
    inv = M.inv()
    return tuple(tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(8)) for i in range(8))


def e8_root_coefficients(e8: Sequence[int]) -> tuple[int, ...]:
    """Integer coefficients of a (doubled) E8 vector in the simple-root basis."""
    inv = _e8_inverse()
    x = [Fraction(c, 2) for c in e8]
    coeffs = []
    for j in range(8):
        v = sum(x[i] * inv[i][j] for i in range(8))
        if v.denominator != 1:
            raise AssertionError("vector is not in E8")
        coeffs.append(int(v))
    return tuple(coeffs)


def split_basis(gram_mod2: Sequence[Sequence[int]], qdiag: Sequence[int]) -> list[tuple[int, int]]:
    """Greedy hyperbolic pairs (e_i, f_i) for a nondegenerate even-type form on
    F2^n given by its Gram matrix mod 2 and q on the basis.

    Vectors are bit masks with bit i standing for basis vector i.
    """
    n = len(qdiag)

    def bil(x: int, y: int) -> int:
        s = 0
        for i in range(n):
            if x >> i & 1:
                for j in range(n):
                    if y >> j & 1:
                        s ^= gram_mod2[i][j]
        return s

    def q(x: int) -> int:
        s = 0
        idx = [i for i in range(n) if x >> i & 1]
        for i in idx:
            s ^= qdiag[i]
        for a, b in itertools.combinations(idx, 2):
            s ^= gram_mod2[a][b]
        return s

    pairs = []
    work = [1 << i for i in range(n)]
    while work:
        span = [0]
        for w in work:
            span += [s ^ w for s in span]
        e = next((v for v in span if v and not q(v)), None)
        if e is None:
            raise AssertionError("form is not of even type")
        f = next(v for v in span if bil(e, v))
        if q(f):
            f ^= e
        pairs.append((e, f))
        work = gf2_rref([w ^ (e if bil(w, f) else 0) ^ (f if bil(w, e) else 0) for w in work])
    for i, (e, f) in enumerate(pairs):
        if q(e) or q(f) or not bil(e, f):
            raise AssertionError("extracted pair is not hyperbolic")
        for e2, f2 in pairs[i + 1:]:
            if bil(e, e2) or bil(e, f2) or bil(f, e2) or bil(f, f2):
                raise AssertionError("extracted pairs are not orthogonal")
    return pairs


@lru_cache(maxsize=None)
def _e8_split_pairs() -> tuple[tuple[int, int], ...]:
    roots = [LatticeVector((0, 0, 0, 0), r) for r in E8_SIMPLE_ROOTS]
    gram = [[abs(a.pair(b)) % 2 for b in roots] for a in roots]
    return tuple(split_basis(gram, [1] * 8))


def _e8_gram_mod2() -> list[list[int]]:
    roots = [LatticeVector((0, 0, 0, 0), r) for r in E8_SIMPLE_ROOTS]
    return [[abs(a.pair(b)) % 2 for b in roots] for a in roots]


def reduce_e8(e8: Sequence[int]) -> F2Vector:
    """E8 / 2E8 in the split coordinates x -> ((x, f_1), (x, e_1), ...)."""
    c = e8_root_coefficients(e8)
    mask = sum(1 << i for i in range(8) if c[i] % 2)
    gram = _e8_gram_mod2()

    def bil(x: int, y: int) -> int:
        s = 0
        for i in range(8):
            if x >> i & 1:
                for j in range(8):
                    if y >> j & 1:
                        s ^= gram[i][j]
        return s

    out = 0
    for e, f in _e8_split_pairs():
        out = (out << 2) | (bil(mask, f) << 1) | bil(mask, e)
    return out


def reduce_mod2(v: LatticeVector) -> F2Vector:
    """Class of v in L/2L = F2^12 (U + U coordinates first)."""
    u = 0
    for c in v.u:
        u = (u << 1) | (c % 2)
    return (u << 8) | reduce_e8(v.e8)


# -- the standard A2-point ------------------------------------------------------

W_BASIS = (LatticeVector((1, 1, 0, 0)), LatticeVector((1, 0, 1, 1)))
FIRST_TYPE_LISTED = (
    LatticeVector((0, 0, -1, 1)),
    LatticeVector((1, -1, -1, 0)),
    LatticeVector((1, -1, 0, -1)),
)


@dataclass(frozen=True)
class DeltaSet:
    first: frozenset[int]
    second: frozenset[int]

    @property
    def classes(self) -> frozenset[int]:
        return self.first | self.second

    def __contains__(self, v: F2Vector) -> bool:
        return v in self.first or v in self.second

    def __len__(self) -> int:
        return len(self.first | self.second)


def norm_minus2_orthogonal(W: Sequence[LatticeVector], box: int = 2) -> list[LatticeVector]:
    """Norm -2 vectors orthogonal to W with U + U coordinates in [-box, box]
    and E8 part zero or a root (an orthogonal vector has U + U part in a
    negative definite plane, so its E8 part has norm at most 2)."""
    e8_parts = [LatticeVector((0, 0, 0, 0))] + e8_roots()
    out = []
    rng = range(-box, box + 1)
    for u in itertools.product(rng, repeat=4):
        base = LatticeVector(u)
        if any(base.pair(w) for w in W):
            continue
        for x in e8_parts:
            v = base + x
            if v.norm() == -2:
                out.append(v)
    return out


def delta_of(W: Sequence[LatticeVector], box: int = 2) -> DeltaSet:
    vecs = norm_minus2_orthogonal(W, box)
    first, second = set(), set()
    for v in vecs:
        cls = reduce_mod2(v)
        (second if any(v.e8) else first).add(cls)
    return DeltaSet(frozenset(first), frozenset(second))


@lru_cache(maxsize=None)
def standard_A2_delta(box: int = 2) -> DeltaSet:
    return delta_of(W_BASIS, box)


# -- stars ------------------------------------------------------------------------

def vec12(bits: str) -> F2Vector:
    """Parse a vector of F2^12 written with optional ';', ',' or spaces."""
    return SPACE.vec("".join(ch for ch in bits if ch in "01"))


def star_from(base: Sequence[F2Vector], rep: F2Vector) -> Star:
    """The coset rep + span(base), checked to be a star."""
    N = IsotropicSubspace.span(SPACE, list(base))
    if N.dim != SPACE.m - 1:
        raise ValueError(f"base has dimension {N.dim}, expected {SPACE.m - 1}")
    elements = [rep ^ n for n in N.elements]
    return Star.from_coset(SPACE, elements)


def star_intersection(star: Star, delta: DeltaSet) -> frozenset[int]:
    return frozenset(x for x in star.elements if x in delta)


# witnesses for the avoiding statement
AVOID_REPRESENTATIVES = tuple(vec12(s) for s in (
    "0011;010000 00",
    "1100;000000 00",
    "1100;001000 00",
    "0001;110000 00",
    "0100;110000 00",
))
AVOID_STAR_1 = (
    tuple(vec12(s) for s in (
        "1111;01000000", "1101;11000000", "0000;00100000", "0000;00001000", "0000;00000010",
    )),
    vec12("1100;00000000"),
)
AVOID_STAR_2 = (
    tuple(vec12(s) for s in (
        "1111;01000000", "0111;11000000", "0000;00100000", "0000;00001000", "0000;00000010",
    )),
    vec12("0011;00000000"),
)

# witnesses for the meeting statement
MEET_A_ALPHA = vec12("0011;00000000")
MEET_A_STAR = tuple(
    SPACE.vec("".join(str(b) for b in bits))
    for bits in itertools.product((0, 1), (0,), (1,), (1,), (0, 1), (0,), (0, 1), (0,), (0, 1), (0,), (0, 1), (0,))
)
MEET_B_ALPHA = vec12("0000;11000000")
MEET_B_BETA = vec12("0000;11000010")
MEET_B_BASE = tuple(vec12(s) for s in (
    "1000;00100000", "0100;00010000", "0010;00001000", "0001;00000100", "0000;00000001",
))


# the two one-coordinate corrections under which the case (b) witness works
MEET_B_BETA_ALT = vec12("0000;11000001")
MEET_B_BASE_ALT = MEET_B_BASE[:4] + (vec12("0000;00000010"),)


def listed_avoiding_witnesses(delta: DeltaSet | None = None) -> list[dict]:
    delta = delta or standard_A2_delta()
    out = []
    for i, alpha in enumerate(AVOID_REPRESENTATIVES):
        base, rep = AVOID_STAR_1 if i < 4 else AVOID_STAR_2
        star = star_from(base, rep)
        hits = star_intersection(star, delta)
        out.append({
            "alpha": SPACE.bits(alpha),
            "anisotropic": SPACE.q(alpha) == 1,
            "outside_delta": alpha not in delta,
            "contains_alpha": alpha in star,
            "avoids_delta": not hits,
            "meets": sorted(SPACE.bits(x) for x in hits),
        })
    return out


def listed_meeting_witnesses(delta: DeltaSet | None = None) -> list[dict]:
    delta = delta or standard_A2_delta()
    star_a = Star.from_coset(SPACE, list(MEET_A_STAR))
    star_b = star_from(MEET_B_BASE, MEET_B_ALPHA)
    star_b_alt = star_from(MEET_B_BASE_ALT, MEET_B_ALPHA)
    hits_b = star_intersection(star_b, delta)
    return [
        {
            "case": "a",
            "targets_ok": MEET_A_ALPHA in delta.first,
            "intersection_ok": star_intersection(star_a, delta) == {MEET_A_ALPHA},
        },
        {
            "case": "b",
            "targets_ok": MEET_B_ALPHA in delta.second and MEET_B_BETA in delta.second
            and SPACE.bilinear(MEET_B_ALPHA, MEET_B_BETA) == 0,
            "intersection_ok": hits_b == {MEET_B_ALPHA, MEET_B_BETA},
            "meets": sorted(SPACE.bits(x) for x in hits_b),
            "ok_with_beta_at_12": hits_b == {MEET_B_ALPHA, MEET_B_BETA_ALT},
            "ok_with_e11_in_base": star_intersection(star_b_alt, delta) == {MEET_B_ALPHA, MEET_B_BETA},
        },
    ]


def plane_points(delta: DeltaSet) -> tuple[list[int], list[int]]:
    """Nonzero points of the plane A (image of W) and of B (first type)."""
    A = sorted(reduce_mod2(w) for w in (W_BASIS[0], W_BASIS[1], W_BASIS[0] + W_BASIS[1]))
    return A, sorted(delta.first)


def anti_isometry_pairing() -> dict[int, int]:
    """W -> W-perp sending w_i to r_i, where r_1, r_2 are the first two listed
    first-type vectors; both Gram matrices are +-A2, so mod 2 this matches
    the nonzero points of A with those of B."""
    w1, w2 = W_BASIS
    r1, r2 = FIRST_TYPE_LISTED[0], FIRST_TYPE_LISTED[1]
    if [[w1.pair(w1), w1.pair(w2)], [w2.pair(w1), w2.pair(w2)]] != [
        [-r1.pair(r1), -r1.pair(r2)], [-r2.pair(r1), -r2.pair(r2)]
    ]:
        raise AssertionError("the listed vectors are not an anti-isometric basis")
    return {
        reduce_mod2(w1): reduce_mod2(r1),
        reduce_mod2(w2): reduce_mod2(r2),
        reduce_mod2(w1 + w2): reduce_mod2(r1 + r2),
    }


def delta_stabilizer_generators(delta: DeltaSet, kind: str = "diagonal") -> list[OrthogonalMap]:
    """Generators of a group stabilising Delta.

    ``transvections``: transvections along every class of Delta (S3 on B only).
    ``diagonal``: S3 acting on A and B at once through the pairing of
    ``anti_isometry_pairing`` times the E8 part.
    ``full``: S3 x S3 x O(E8/2E8), the transvections along A and B separately.
    """
    A, B = plane_points(delta)
    e8 = [transvection_map(SPACE, a) for a in sorted(delta.second)]
    if kind == "transvections":
        return [transvection_map(SPACE, b) for b in B] + e8
    if kind == "full":
        return [transvection_map(SPACE, x) for x in A + B] + e8
    if kind == "diagonal":
        phi = anti_isometry_pairing()
        return [transvection_map(SPACE, a) @ transvection_map(SPACE, phi[a]) for a in A] + e8
    raise ValueError(f"unknown group {kind!r}")


def complement_orbits(delta: DeltaSet | None = None, kind: str = "diagonal") -> list[list[int]]:
    delta = delta or standard_A2_delta()
    gens = delta_stabilizer_generators(delta, kind)
    for g in gens:
        if {g(x) for x in delta.classes} != set(delta.classes):
            raise AssertionError("generator does not stabilise Delta")
    rest = [x for x in SPACE.anisotropic() if x not in delta]
    return orbits(rest, gens)


# -- searches ---------------------------------------------------------------------

class SearchExhausted(RuntimeError):
    pass


def _grow_star(alpha: F2Vector, start: list[int], allowed: frozenset[int], delta: DeltaSet,
               rng: random.Random, budget: int) -> Star:
    """Extend ``start`` to a 5-dim totally isotropic N inside alpha-perp with
    (alpha + N) meeting Delta only inside ``allowed``; randomised DFS."""
    sp = SPACE
    iso = [x for x in sp.isotropic() if x and not sp.bilinear(x, alpha)]
    steps = 0

    def coset_ok(elems: Iterable[int]) -> bool:
        return all(alpha ^ n not in delta or alpha ^ n in allowed for n in elems)

    def dfs(basis: list[int], elems: list[int]) -> list[int] | None:
        nonlocal steps
        if len(basis) == sp.m - 1:
            return basis
        cands = [x for x in iso if all(not sp.bilinear(x, b) for b in basis)]
        rng.shuffle(cands)
        tried: set[int] = set()
        echelon = gf2_rref(basis)
        for x in cands:
            r = gf2_reduce(x, echelon)
            if not r or r in tried:
                continue
            steps += 1
            if steps > budget:
                raise SearchExhausted(f"budget of {budget} steps exhausted")
            tried.add(r)
            new = [e ^ x for e in elems]
            if not coset_ok(new):
                continue
            got = dfs(basis + [x], elems + new)
            if got is not None:
                return got
        return None

    start_elems = [0]
    for b in start:
        start_elems += [e ^ b for e in start_elems]
    if not coset_ok(start_elems):
        raise ValueError("start space already meets Delta outside the targets")
    basis = dfs(list(start), start_elems)
    if basis is None:
        raise SearchExhausted("no star exists with these constraints")
    return star_from(basis, alpha)


def find_star_avoiding(delta: DeltaSet, alpha: F2Vector, seed: int = 0, budget: int = 20000) -> Star:
    if not SPACE.q(alpha) or alpha in delta:
        raise ValueError("alpha must be anisotropic and outside Delta")
    star = _grow_star(alpha, [], frozenset(), delta, random.Random(seed), budget)
    if alpha not in star or star_intersection(star, delta):
        raise AssertionError("search returned an invalid star")
    return star


def find_star_meeting(delta: DeltaSet, targets: Sequence[F2Vector], seed: int = 0, budget: int = 20000) -> Star:
    targets = list(targets)
    if len(targets) == 1:
        if targets[0] not in delta.first:
            raise ValueError("a single target must be of the first type")
    elif len(targets) == 2:
        a, b = targets
        if a not in delta.second or b not in delta.second or SPACE.bilinear(a, b):
            raise ValueError("two targets must be orthogonal and of the second type")
    else:
        raise ValueError("one or two targets")
    alpha = targets[0]
    start = [alpha ^ t for t in targets[1:]]
    star = _grow_star(alpha, start, frozenset(targets), delta, random.Random(seed), budget)
    if star_intersection(star, delta) != set(targets):
        raise AssertionError("search returned an invalid star")
    return star


# -- E8 root systems in F2^8 ------------------------------------------------------------

LITERAL_EDGES = frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (5, 8)})
STANDARD_EDGES = frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)})

WITNESS_M = (E8_SPACE.vec("11000000"), E8_SPACE.vec("01101011"))
WITNESS_ROOT_SYSTEM = tuple(E8_SPACE.vec(s) for s in (
    "11100000", "00111000", "00001110", "00000011",
    "11000010", "01011100", "01010111", "10110000",
))


def pairing_pattern(vectors: Sequence[F2Vector], space: QuadraticSpace = E8_SPACE) -> frozenset[tuple[int, int]]:
    """1-based index pairs with (v_i, v_j) = 1."""
    return frozenset(
        (i + 1, j + 1)
        for i, j in itertools.combinations(range(len(vectors)), 2)
        if space.bilinear(vectors[i], vectors[j])
    )


def is_root_system(vectors: Sequence[F2Vector], edges: frozenset = STANDARD_EDGES) -> bool:
    return (
        len(vectors) == 8
        and all(E8_SPACE.q(v) == 1 for v in vectors)
        and gf2_rank(list(vectors)) == 8
        and pairing_pattern(vectors) == edges
    )


def root_system_witness_report() -> dict:
    vs = WITNESS_ROOT_SYSTEM
    pattern = pairing_pattern(vs)
    return {
        "anisotropic": all(E8_SPACE.q(v) for v in vs),
        "independent": gf2_rank(list(vs)) == 8,
        "avoids_M": not set(vs) & set(WITNESS_M),
        "first_five_orthogonal_to_alpha": all(not E8_SPACE.bilinear(v, WITNESS_M[0]) for v in vs[:5]),
        "rest_orthogonal_to_beta": all(not E8_SPACE.bilinear(v, WITNESS_M[1]) for v in vs[5:]),
        "edges": sorted(pattern),
        "literal_reading": pattern == LITERAL_EDGES,
        "standard_reading": pattern == STANDARD_EDGES,
    }


def find_e8_root_system(M: Sequence[F2Vector], edges: frozenset = STANDARD_EDGES,
                        seed: int = 0, budget: int = 200000) -> tuple[int, ...]:
    """Eight anisotropic, independent vectors outside M with the given pairing graph."""
    sp = E8_SPACE
    M = set(M)
    for a in M:
        if not sp.q(a):
            raise ValueError("M must consist of anisotropic vectors")
    for a, b in itertools.combinations(M, 2):
        if not sp.bilinear(a, b):
            raise ValueError("elements of M must be pairwise non-orthogonal")
    pool = [v for v in sp.anisotropic() if v not in M]
    rng = random.Random(seed)
    rng.shuffle(pool)
    adj = {(i, j) for i, j in edges} | {(j, i) for i, j in edges}
    steps = 0

    def dfs(chosen: list[int]) -> list[int] | None:
        nonlocal steps
        k = len(chosen) + 1
        if k == 9:
            return chosen
        echelon = gf2_rref(chosen)
        for v in pool:
            steps += 1
            if steps > budget:
                raise SearchExhausted(f"budget of {budget} steps exhausted")
            if not gf2_reduce(v, echelon):
                continue
            if all(sp.bilinear(v, w) == ((k, i + 1) in adj) for i, w in enumerate(chosen)):
                got = dfs(chosen + [v])
                if got is not None:
                    return got
        return None

    found = dfs([])
    if found is None:
        raise SearchExhausted("no root system in the complement")
    return tuple(found)


def random_nonorthogonal_set(rng: random.Random, size: int | None = None) -> list[int]:
    """Seeded random set of pairwise non-orthogonal anisotropic vectors in F2^8."""
    sp = E8_SPACE
    an = sp.anisotropic()
    target = size if size is not None else rng.randint(0, 8)
    chosen: list[int] = []
    cands = list(an)
    rng.shuffle(cands)
    for v in cands:
        if len(chosen) >= target:
            break
        if all(sp.bilinear(v, w) for w in chosen):
            chosen.append(v)
    return chosen


def pattern_admissibility(edges: frozenset) -> dict:
    """Can eight independent anisotropic vectors of F2^8 have this pairing graph?

    Such vectors form a basis, so the graph must be the Gram matrix of the
    split form: nondegenerate mod 2, and with q = 1 on every basis vector the
    form must have 2^7 + 2^3 = 136 zeros.
    """
    adj = [[0] * 8 for _ in range(8)]
    for i, j in edges:
        adj[i - 1][j - 1] = adj[j - 1][i - 1] = 1
    rank = gf2_rank([sum(adj[i][j] << j for j in range(8)) for i in range(8)])
    zeros = 0
    for mask in range(256):
        idx = [i for i in range(8) if mask >> i & 1]
        val = len(idx) + sum(adj[a][b] for a, b in itertools.combinations(idx, 2))
        zeros += val % 2 == 0
    return {"rank": rank, "zeros": zeros, "admissible": rank == 8 and zeros == 136}
