"""Totally isotropic subspaces of F2^{2m}, stars, and the small configurations
built from them (six maximal spaces over a codimension-2 space, nine stars,
thirty maximal spaces over an anisotropic coset).
"""

from __future__ import annotations

import itertools
import os
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterator, Sequence

from .f2space import F2Vector, QuadraticSpace
from .linalg import gf2_reduce, gf2_rref, gf2_span

FIXTURE_ENV = "F2MODFORMS_FIXTURES"


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV)
    return Path(env) if env else Path(__file__).with_name("fixtures")


@dataclass(frozen=True, order=True)
class IsotropicSubspace:
    """A totally isotropic subspace, stored by its canonical RREF basis.

    ``basis`` is sorted by decreasing pivot bit (= increasing pivot coordinate);
    two subspaces are equal iff their bases are equal.
    """

    m: int
    basis: tuple[int, ...]

    @classmethod
    def span(cls, space: QuadraticSpace, vectors: Sequence[F2Vector]) -> "IsotropicSubspace":
        rref = gf2_rref(vectors)
        for i, v in enumerate(rref):
            if space.q(v):
                raise ValueError(f"{space.bits(v)} is anisotropic")
            for w in rref[:i]:
                if space.bilinear(v, w):
                    raise ValueError("spanning vectors are not pairwise orthogonal")
        return cls(space.m, tuple(rref))

    @property
    def space(self) -> QuadraticSpace:
        return QuadraticSpace(self.m)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def elements(self) -> frozenset[int]:
        return frozenset(gf2_span(self.basis))

    def __contains__(self, v: F2Vector) -> bool:
        return gf2_reduce(v, self.basis) == 0

    def reduce(self, v: F2Vector) -> F2Vector:
        """Canonical representative of the coset ``v + self`` (its minimum)."""
        return gf2_reduce(v, self.basis)

    def contains_space(self, other: "IsotropicSubspace") -> bool:
        return all(b in self for b in other.basis)

    def intersection_dim(self, other: "IsotropicSubspace") -> int:
        return self.dim + other.dim - len(gf2_rref(self.basis + other.basis))

    def perp(self) -> list[F2Vector]:
        """All vectors orthogonal to the subspace."""
        return self.space.orthogonal_to(self.basis)

    def bits(self) -> str:
        sp = self.space
        return ";".join(sp.bits(b) for b in self.basis)

    def __repr__(self) -> str:
        return f"IsotropicSubspace(m={self.m}, [{self.bits()}])"


@dataclass(frozen=True, order=True)
class Star:
    """The all-anisotropic coset of an (m-1)-dimensional totally isotropic space.

    Keyed by its base subspace; ``rep`` is the smallest element of the coset.
    """

    base: IsotropicSubspace
    rep: int = field(compare=False)

    @cached_property
    def elements(self) -> frozenset[int]:
        return frozenset(self.rep ^ x for x in self.base.elements)

    def __contains__(self, v: F2Vector) -> bool:
        return self.base.reduce(v ^ self.rep) == 0

    @classmethod
    def from_coset(cls, space: QuadraticSpace, elements: Sequence[F2Vector]) -> "Star":
        """Recover the star from its set of elements (the base is the difference set)."""
        elems = sorted(set(elements))
        base = IsotropicSubspace.span(space, [e ^ elems[0] for e in elems[1:]])
        if base.dim != space.m - 1 or len(elems) != 1 << base.dim:
            raise ValueError("elements do not form a coset of an (m-1)-dimensional space")
        star = star_of(base)
        if star.elements != frozenset(elems):
            raise ValueError("coset is not the anisotropic coset of its base")
        return star


# -- enumeration -------------------------------------------------------------------

def count_ti(m: int, k: int) -> int:
    """Number of k-dimensional totally isotropic subspaces of F2^{2m} (closed form)."""
    num = den = 1
    for i in range(k):
        num *= (2 ** (m - i) - 1) * (2 ** (m - i - 1) + 1)
        den *= 2 ** (i + 1) - 1
    return num // den


def _ti_rrefs(space: QuadraticSpace, k: int, rows: list[int], cands: list[int]) -> Iterator[list[int]]:
    # rows: RREF built so far (pivots strictly increasing in coordinate order).
    # cands: isotropic vectors orthogonal to rows, leading bit below every pivot,
    # whose leading column is zero in every row.
    if len(rows) == k:
        yield rows
        return
    need = k - len(rows)
    sw = space.swap
    for v in cands:
        lead = v.bit_length()
        if lead < need:
            # not enough columns left for the remaining pivots
            break
        top = 1 << (lead - 1)
        s = sw(v)
        nxt = [w for w in cands if w < top and not (w & s).bit_count() & 1
               and not v & (1 << (w.bit_length() - 1))]
        yield from _ti_rrefs(space, k, rows + [v], nxt)


def enumerate_ti(space: QuadraticSpace, k: int) -> Iterator[IsotropicSubspace]:
    """Every k-dimensional totally isotropic subspace, each exactly once.

    Pivot-ascending echelon extension: a new row has its pivot after all
    current pivots and the current rows vanish in that column, so each
    canonical basis is produced along exactly one path.
    """
    if not 0 <= k <= space.m:
        raise ValueError(f"totally isotropic subspaces have dimension <= {space.m}")
    cands = sorted(space.isotropic(), reverse=True)
    for rows in _ti_rrefs(space, k, [], cands):
        yield IsotropicSubspace(space.m, tuple(rows))


def maximal_ti(space: QuadraticSpace) -> list[IsotropicSubspace]:
    return list(enumerate_ti(space, space.m))


def superspaces(S: IsotropicSubspace, k: int) -> list[IsotropicSubspace]:
    """All k-dimensional totally isotropic subspaces containing ``S``, sorted."""
    space = S.space
    if not S.dim <= k <= space.m:
        raise ValueError(f"cannot extend a {S.dim}-dimensional space to dimension {k}")
    qt = space.q_table
    reps = sorted({S.reduce(v) for v in S.perp() if not qt[v]} - {0})
    found: set[IsotropicSubspace] = set()

    def grow(basis: list[int], pool: list[int]) -> None:
        if len(basis) == k:
            found.add(IsotropicSubspace(space.m, tuple(gf2_rref(basis))))
            return
        cur = gf2_rref(basis)
        for i, v in enumerate(pool):
            if gf2_reduce(v, cur) == 0:
                continue
            s = space.swap(v)
            grow(basis + [v], [w for w in pool[i + 1:] if not (w & s).bit_count() & 1])

    grow(list(S.basis), reps)
    return sorted(found)


def random_ti(space: QuadraticSpace, k: int, rng: random.Random, inside: Sequence[F2Vector] | None = None) -> IsotropicSubspace:
    """A random k-dimensional totally isotropic subspace (greedy growth)."""
    pool = [v for v in (inside if inside is not None else space.isotropic()) if v and not space.q(v)]
    while True:
        basis: list[int] = []
        cands = list(pool)
        while len(basis) < k and cands:
            v = rng.choice(cands)
            basis.append(v)
            rref = gf2_rref(basis)
            s = space.swap(v)
            cands = [w for w in cands if not (w & s).bit_count() & 1 and gf2_reduce(w, rref)]
        if len(basis) == k:
            return IsotropicSubspace.span(space, basis)


def standard_ti(space: QuadraticSpace, k: int) -> IsotropicSubspace:
    """span(e1, e3, ..., e_{2k-1}): the standard k-dimensional example."""
    return IsotropicSubspace.span(space, [space.unit(2 * i + 1) for i in range(k)])


# -- configurations over a codimension-2 space -----------------------------------------

# pairs (odd label, even label) indexing the nine stars psi_1..psi_9
STAR_PAIRS = ((1, 2), (3, 4), (1, 4), (3, 2), (1, 6), (5, 2), (5, 4), (3, 6), (5, 6))

# psi_a + psi_b = psi_c + psi_d, as printed with the stars table
PSI_RELATIONS_PRINTED = (
    ((1, 3), (8, 9)), ((1, 4), (7, 9)), ((1, 5), (2, 7)),
    ((1, 6), (2, 8)), ((2, 3), (6, 9)), ((3, 4), (5, 9)),
    ((3, 5), (4, 6)), ((3, 7), (4, 8)), ((5, 8), (6, 7)),
)
# the sixth printed identity cannot hold (stars 3 and 4 share a point);
# with psi_2 in place of psi_3 it does
PSI_RELATIONS = PSI_RELATIONS_PRINTED[:5] + (((2, 4), (5, 9)),) + PSI_RELATIONS_PRINTED[6:]


def bipartition(spaces: Sequence[IsotropicSubspace]) -> tuple[list[int], list[int]]:
    """Split six maximal spaces into the two classes of the complete bipartite
    graph whose edges join spaces meeting in dimension m-1."""
    m = spaces[0].m
    adj = {i: {j for j in range(6) if j != i and spaces[i].intersection_dim(spaces[j]) == m - 1} for i in range(6)}
    left = [0] + [j for j in range(1, 6) if j not in adj[0]]
    right = sorted(adj[0])
    if len(left) != 3 or len(right) != 3:
        raise ValueError("extensions do not form a 3+3 bipartite configuration")
    for i in left:
        if adj[i] != set(right):
            raise ValueError("extensions do not form a complete bipartite graph")
    return left, right


def extensions_of_codim2(A: IsotropicSubspace) -> list[IsotropicSubspace]:
    """The six maximal spaces over ``A`` labelled I1..I6.

    The class containing the smallest space takes the odd labels; each class is
    listed in canonical order.
    """
    m = A.m
    if A.dim != m - 2:
        raise ValueError(f"expected dimension {m - 2}, got {A.dim}")
    ext = superspaces(A, m)
    if len(ext) != 6:
        raise AssertionError(f"found {len(ext)} maximal extensions, expected 6")
    left, right = bipartition(ext)
    out = [None] * 6
    for k, (i, j) in enumerate(zip(left, right)):
        out[2 * k] = ext[i]
        out[2 * k + 1] = ext[j]
    return out


def nine_intersections(sextet: Sequence[IsotropicSubspace]) -> list[IsotropicSubspace]:
    """The (m-1)-dimensional spaces I_i & I_j in the psi_1..psi_9 order."""
    space = sextet[0].space
    out = []
    for i, j in STAR_PAIRS:
        common = sorted(sextet[i - 1].elements & sextet[j - 1].elements)
        out.append(IsotropicSubspace.span(space, common))
    return out


# -- cosets and stars ------------------------------------------------------------

@dataclass(frozen=True)
class CosetPartition:
    base: list[int]
    isotropic: list[int]
    anisotropic: list[int]
    mixed: list[int]

    def counts(self) -> tuple[int, int, int, int]:
        return len(self.base), len(self.isotropic), len(self.anisotropic), len(self.mixed)


def classify_cosets(N: IsotropicSubspace) -> CosetPartition:
    """Sort the cosets of N (by minimal representative) into N itself,
    all-isotropic, all-anisotropic and mixed."""
    space = N.space
    if N.dim != space.m - 1:
        raise ValueError(f"expected dimension {space.m - 1}, got {N.dim}")
    qt = space.q_table
    seen: dict[int, set[int]] = {}
    for v in range(space.size):
        seen.setdefault(N.reduce(v), set()).add(qt[v])
    part = CosetPartition([], [], [], [])
    for rep in sorted(seen):
        vals = seen[rep]
        if rep == 0:
            part.base.append(rep)
        elif vals == {0}:
            part.isotropic.append(rep)
        elif vals == {1}:
            part.anisotropic.append(rep)
        else:
            part.mixed.append(rep)
    return part


def star_of(N: IsotropicSubspace) -> Star:
    """The star over N.  Every anisotropic vector in N-perp lies in it."""
    space = N.space
    if N.dim != space.m - 1:
        raise ValueError(f"expected dimension {space.m - 1}, got {N.dim}")
    qt = space.q_table
    for v in N.perp():
        if qt[v]:
            return Star(N, N.reduce(v))
    raise AssertionError("no anisotropic coset found")


def star_superspaces(star: Star) -> tuple[IsotropicSubspace, IsotropicSubspace]:
    sup = superspaces(star.base, star.base.m)
    if len(sup) != 2:
        raise AssertionError(f"found {len(sup)} maximal superspaces, expected 2")
    return sup[0], sup[1]


def enumerate_stars(space: QuadraticSpace) -> Iterator[Star]:
    for N in enumerate_ti(space, space.m - 1):
        yield star_of(N)


def random_star(space: QuadraticSpace, rng: random.Random) -> Star:
    return star_of(random_ti(space, space.m - 1, rng))


def star_sign_check(star: Star, centres: Sequence[F2Vector] | None = None) -> bool:
    """chi_I - chi_J changes sign under the transvection along every star element.

    Only points of I | J need checking: the transvection is an involution, so a
    point outside the support cannot map into it without the reverse happening.
    """
    space = star.base.space
    I, J = star_superspaces(star)
    f = {x: 1 for x in I.elements}
    for x in J.elements:
        f[x] = f.get(x, 0) - 1
    for a in (star.elements if centres is None else centres):
        for x, val in f.items():
            if f.get(space.transvection(a, x), 0) != -val:
                return False
    return True


def psi_relations(sextet: Sequence[IsotropicSubspace], relations=PSI_RELATIONS) -> list[tuple[tuple[int, int], tuple[int, int], bool]]:
    """Check identities psi_a + psi_b = psi_c + psi_d between the nine star
    characteristic functions, pointwise."""
    stars = [star_of(N).elements for N in nine_intersections(sextet)]
    out = []
    for (a, b), (c, d) in relations:
        lhs = Counter(stars[a - 1]) + Counter(stars[b - 1])
        rhs = Counter(stars[c - 1]) + Counter(stars[d - 1])
        out.append(((a, b), (c, d), lhs == rhs))
    return out


def relabelings() -> list[tuple[int, ...]]:
    """The 72 label permutations preserving the odd/even class structure
    (up to swapping classes), as maps old label -> new position."""
    out = []
    for po in itertools.permutations((1, 3, 5)):
        for pe in itertools.permutations((2, 4, 6)):
            for swap in (False, True):
                seq = [None] * 6
                for k in range(3):
                    a, b = po[k], pe[k]
                    if swap:
                        a, b = b, a
                    seq[2 * k], seq[2 * k + 1] = a, b
                out.append(tuple(seq))
    return out


# -- the thirty-space configuration -------------------------------------------------

@dataclass(frozen=True)
class ThirtyConfiguration:
    A: IsotropicSubspace
    rep: int
    stars: tuple[Star, ...]
    spaces: tuple[IsotropicSubspace, ...]


def thirty_space_configuration(A: IsotropicSubspace, c: F2Vector) -> ThirtyConfiguration:
    """Stars containing the anisotropic coset c + A and their maximal superspaces."""
    space = A.space
    m = space.m
    if m < 3 or A.dim != m - 3:
        raise ValueError(f"need m >= 3 and dim A = m - 3, got m={m}, dim={A.dim}")
    if any(not space.q(c ^ a) for a in A.elements):
        raise ValueError("coset c + A is not entirely anisotropic")
    stars = []
    for N in superspaces(A, m - 1):
        st = star_of(N)
        if c in st:
            stars.append(st)
    spaces = sorted({S for st in stars for S in star_superspaces(st)})
    return ThirtyConfiguration(A, A.reduce(c), tuple(stars), tuple(spaces))


# -- fixture I/O ------------------------------------------------------------------

def format_subspaces(subs: Sequence[IsotropicSubspace]) -> str:
    return "".join(S.bits() + "\n" for S in subs)


def parse_subspace_lines(space: QuadraticSpace, text: str) -> list[IsotropicSubspace]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(IsotropicSubspace.span(space, [space.vec(b) for b in line.split(";")]))
    return out


def load_subspaces(space: QuadraticSpace, path: str | Path) -> list[IsotropicSubspace]:
    return parse_subspace_lines(space, Path(path).read_text())


def table30() -> list[IsotropicSubspace]:
    return load_subspaces(QuadraticSpace(3), fixture_dir() / "table30.txt")


def six_spaces_table() -> list[IsotropicSubspace]:
    return load_subspaces(QuadraticSpace(2), fixture_dir() / "six_spaces_m2.txt")


def nine_stars_table() -> list[dict]:
    space = QuadraticSpace(2)
    rows = []
    for line in (fixture_dir() / "nine_stars_m2.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        label, pair, base, elems = line.split("|")
        i, j = (int(x) for x in pair.split(","))
        rows.append({
            "label": label,
            "pair": (i, j),
            "base": IsotropicSubspace.span(space, [space.vec(base)]),
            "star": frozenset(space.vec(e) for e in elems.split(";")),
        })
    return rows


def embed(space: QuadraticSpace, A: IsotropicSubspace, sub: IsotropicSubspace) -> IsotropicSubspace:
    """A (+) X for A in the leading coordinates and X in the trailing ones."""
    high = [b << sub.space.dim for b in A.basis]
    return IsotropicSubspace.span(space, high + list(sub.basis))
