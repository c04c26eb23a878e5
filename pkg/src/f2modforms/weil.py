"""The Weil representation of SL(2, Z/2) on functions F2^{2m} -> Q.

T acts diagonally by (-1)^q(x); S is the normalised parity transform
2^{-m} sum_y (-1)^{(x,y)} f(y).  The metaplectic prefactor sqrt(i)^{n-2} is 1
because the signature parameter n satisfies n = 2 mod 8 for these forms.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .f2space import F2Vector, QuadraticSpace
from .linalg import DEFAULT_PRIME, exact_rank, modular_rank
from .qseries import bernoulli
from .subspaces import IsotropicSubspace, maximal_ti, random_ti


class GroupFunction:
    """Exact rational-valued function on F2^{2m}, indexed by vector ints."""

    __slots__ = ("space", "values")

    def __init__(self, space: QuadraticSpace, values: Sequence):
        if len(values) != space.size:
            raise ValueError(f"expected {space.size} values, got {len(values)}")
        self.space = space
        self.values = tuple(Fraction(v) for v in values)

    @classmethod
    def zero(cls, space: QuadraticSpace) -> "GroupFunction":
        return cls(space, [0] * space.size)

    @classmethod
    def indicator(cls, space: QuadraticSpace, support: Iterable[int], value=1) -> "GroupFunction":
        vals = [0] * space.size
        for x in support:
            vals[x] = value
        return cls(space, vals)

    @classmethod
    def from_callable(cls, space: QuadraticSpace, fn: Callable[[int], object]) -> "GroupFunction":
        return cls(space, [fn(x) for x in range(space.size)])

    def __call__(self, x: F2Vector) -> Fraction:
        return self.values[x]

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupFunction) and self.space == other.space and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __add__(self, other: "GroupFunction") -> "GroupFunction":
        return GroupFunction(self.space, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "GroupFunction") -> "GroupFunction":
        return GroupFunction(self.space, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self) -> "GroupFunction":
        return GroupFunction(self.space, [-a for a in self.values])

    def scale(self, c) -> "GroupFunction":
        c = Fraction(c)
        return GroupFunction(self.space, [a * c for a in self.values])

    def __mul__(self, other):
        if isinstance(other, GroupFunction):
            return GroupFunction(self.space, [a * b for a, b in zip(self.values, other.values)])
        return self.scale(other)

    __rmul__ = __mul__

    def support(self) -> list[int]:
        return [x for x, v in enumerate(self.values) if v]

    def compose(self, g: Callable[[int], int]) -> "GroupFunction":
        """x -> f(g(x))."""
        return GroupFunction(self.space, [self.values[g(x)] for x in range(self.space.size)])

    def to_json(self) -> str:
        sp = self.space
        return json.dumps({sp.bits(x): f"{v.numerator}/{v.denominator}" for x, v in enumerate(self.values)})

    @classmethod
    def from_json(cls, space: QuadraticSpace, text: str) -> "GroupFunction":
        data = json.loads(text)
        vals = [Fraction(0)] * space.size
        for bits, v in data.items():
            vals[space.vec(bits)] = Fraction(v)
        return cls(space, vals)

    def __repr__(self) -> str:
        return f"GroupFunction(m={self.space.m}, support={len(self.support())})"


# -- the generators --------------------------------------------------------------

def parity_transform(space: QuadraticSpace, values: list) -> list:
    """sum_y (-1)^{(x,y)} v(y) via an in-place butterfly.

    (x, y) = <x, swap(y)>, so this is the Walsh-Hadamard transform of
    v o swap.
    """
    a = [values[space.swap(y)] for y in range(space.size)]
    h = 1
    n = space.size
    while h < n:
        for i in range(0, n, 2 * h):
            for j in range(i, i + h):
                u, w = a[j], a[j + h]
                a[j], a[j + h] = u + w, u - w
        h *= 2
    return a


def act_T(f: GroupFunction) -> GroupFunction:
    qt = f.space.q_table
    return GroupFunction(f.space, [-v if qt[x] else v for x, v in enumerate(f.values)])


def act_S(f: GroupFunction) -> GroupFunction:
    sp = f.space
    scale = Fraction(1, 2**sp.m)
    return GroupFunction(sp, [v * scale for v in parity_transform(sp, list(f.values))])


def is_invariant(f: GroupFunction) -> bool:
    return act_T(f) == f and act_S(f) == f


# -- integer fast paths for bulk checks ---------------------------------------------

def _swap_perm(space: QuadraticSpace) -> np.ndarray:
    return np.array([space.swap(y) for y in range(space.size)], dtype=np.int64)


def hadamard_int(space: QuadraticSpace, arr: np.ndarray) -> np.ndarray:
    """Parity transform of integer columns (axis 0) with numpy."""
    a = np.asarray(arr, dtype=np.int64)[_swap_perm(space)].copy()
    n = space.size
    h = 1
    shape = a.shape
    while h < n:
        a = a.reshape((n // (2 * h), 2, h) + shape[1:])
        u = a[:, 0].copy()
        w = a[:, 1]
        a[:, 0] = u + w
        a[:, 1] = u - w
        a = a.reshape(shape)
        h *= 2
    return a


def invariant_columns(space: QuadraticSpace, arr: np.ndarray) -> np.ndarray:
    """Boolean per column: is the integer function Weil invariant?"""
    arr = np.asarray(arr, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr[:, None]
    qt = np.frombuffer(space.q_table, dtype=np.uint8).astype(bool)
    t_ok = ~np.any(arr[qt] != 0, axis=0)
    s_ok = np.all(hadamard_int(space, arr) == (2**space.m) * arr, axis=0)
    return t_ok & s_ok


# -- dimensions ------------------------------------------------------------------

def invariant_dimension_formula(m: int) -> int:
    num = 3 * 2 ** (m - 1) + 2 ** (2 * m - 1) + 1
    if num % 3:
        raise AssertionError("character formula is not integral")
    return num // 3


def character_traces(m: int) -> tuple[int, Fraction, Fraction]:
    """Traces of rho(E), rho(T), rho(ST) from the element census."""
    iso = 2 ** (m - 1) * (2**m + 1)
    aniso = 2 ** (m - 1) * (2**m - 1)
    return 4**m, Fraction(iso - aniso), Fraction(iso - aniso, 2**m)


def invariant_dimension_character(m: int) -> int:
    """Multiplicity of the trivial character of S3 (classes of sizes 1, 3, 2)."""
    e, t, st = character_traces(m)
    dim = (e + 3 * t + 2 * st) / 6
    if dim.denominator != 1:
        raise AssertionError("non-integral multiplicity")
    return int(dim)


def operator_matrices(space: QuadraticSpace) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Dense matrices of T and S (columns = images of point indicators)."""
    n = space.size
    T = [[Fraction(0)] * n for _ in range(n)]
    S = [[Fraction(0)] * n for _ in range(n)]
    qt = space.q_table
    scale = Fraction(1, 2**space.m)
    for x in range(n):
        T[x][x] = Fraction(-1 if qt[x] else 1)
        sx = space.swap(x)
        for y in range(n):
            S[x][y] = -scale if (sx & y).bit_count() & 1 else scale
    return T, S


def _matmul(A, B):
    n = len(A)
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in Bt] for row in A]


def weil_group(space: QuadraticSpace) -> list[list[list[Fraction]]]:
    """All operators in the image of SL(2, Z) (closure of T and S)."""
    if space.m > 3:
        raise ValueError("dense operator closure is limited to m <= 3")
    T, S = operator_matrices(space)
    n = space.size
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    key = lambda M: tuple(tuple(r) for r in M)
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for G in (T, S):
                P = _matmul(G, M)
                k = key(P)
                if k not in seen:
                    seen[k] = P
                    nxt.append(P)
        frontier = nxt
    return list(seen.values())


def projector_rank(space: QuadraticSpace) -> tuple[int, int]:
    """(order of the operator group, rank of its averaging projector)."""
    group = weil_group(space)
    n = space.size
    P = [[sum(g[i][j] for g in group) / len(group) for j in range(n)] for i in range(n)]
    return len(group), exact_rank(P)


def invariant_dimension(m: int) -> int:
    """Character formula; for m <= 3 also checked against the projector rank."""
    dim = invariant_dimension_formula(m)
    if dim != invariant_dimension_character(m):
        raise AssertionError("closed form and character computation disagree")
    if m <= 3:
        order, rank = projector_rank(QuadraticSpace(m))
        if order != 6 or rank != dim:
            raise AssertionError(f"projector check failed: group order {order}, rank {rank}")
    return dim


def invariant_basis(space: QuadraticSpace) -> list[GroupFunction]:
    """Exact basis of the invariant space from the projector (m <= 3)."""
    import flint

    group = weil_group(space)
    n = space.size
    P = [[sum(g[i][j] for g in group) / len(group) for j in range(n)] for i in range(n)]
    cols = []
    chosen = []
    for j in range(n):
        col = [P[i][j] for i in range(n)]
        if not any(col):
            continue
        if exact_rank(chosen + [col]) > len(chosen):
            chosen.append(col)
    return [GroupFunction(space, c) for c in chosen]


# -- invariants attached to O(F2^{2m}) orbits ----------------------------------------------

def orbit_functions(space: QuadraticSpace) -> tuple[GroupFunction, GroupFunction, GroupFunction]:
    """E0, E+ and E-: indicators of {0}, nonzero isotropic, anisotropic."""
    return (
        GroupFunction.indicator(space, [0]),
        GroupFunction.indicator(space, space.isotropic()),
        GroupFunction.indicator(space, space.anisotropic()),
    )


def o_invariant_block(m: int) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """3x3 matrices of T and S on (E0, E+, E-); column k is the image of the k-th."""
    space = QuadraticSpace(m)
    basis = orbit_functions(space)
    probes = (0, space.isotropic()[0], space.anisotropic()[0])
    orbits = (basis[0].support(), basis[1].support(), basis[2].support())

    def coords(f: GroupFunction) -> list[Fraction]:
        for orb in orbits:
            if len({f(x) for x in orb}) != 1:
                raise AssertionError("image is not constant on orbits")
        return [f(p) for p in probes]

    Tcols = [coords(act_T(b)) for b in basis]
    Scols = [coords(act_S(b)) for b in basis]
    tr = lambda cols: [[cols[j][i] for j in range(3)] for i in range(3)]
    return tr(Tcols), tr(Scols)


def block_traces(m: int) -> tuple[Fraction, Fraction, Fraction]:
    T, S = o_invariant_block(m)
    ST = [[sum(S[i][k] * T[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    tr = lambda M: sum(M[i][i] for i in range(3))
    return Fraction(3), tr(T), tr(ST)


def full_invariant(space: QuadraticSpace) -> GroupFunction:
    """2^{m-1}+1 at zero, 1 on nonzero isotropic vectors, 0 on anisotropic ones."""
    qt = space.q_table
    top = 2 ** (space.m - 1) + 1
    return GroupFunction(space, [top if x == 0 else (0 if qt[x] else 1) for x in range(space.size)])


def special_invariant(space: QuadraticSpace, a: F2Vector) -> GroupFunction:
    """The invariant attached to a nonzero isotropic vector ``a``."""
    if a == 0 or space.q(a):
        raise ValueError("need a nonzero isotropic vector")
    qt = space.q_table
    h = Fraction(2 ** (space.m - 2)) if space.m >= 2 else Fraction(1, 2)
    sa = space.swap(a)
    vals = []
    for x in range(space.size):
        if x == 0:
            vals.append(h)
        elif x == a:
            vals.append(-h)
        elif not qt[x] and (x & sa).bit_count() & 1:
            vals.append(Fraction(1))
        else:
            vals.append(Fraction(0))
    f = GroupFunction(space, vals)
    if not is_invariant(f):
        raise AssertionError("special invariant failed the invariance check")
    return f


def chi(S: IsotropicSubspace) -> GroupFunction:
    return GroupFunction.indicator(S.space, S.elements)


def subspace_sum(space: QuadraticSpace, a: F2Vector, weight_with, weight_without) -> GroupFunction:
    """weight_with * sum_{A containing a} chi_A - weight_without * sum_{B not containing a} chi_B."""
    vals = [Fraction(0)] * space.size
    ww, wo = Fraction(weight_with), Fraction(weight_without)
    for S in maximal_ti(space):
        w = ww if a in S else -wo
        for x in S.elements:
            vals[x] += w
    return GroupFunction(space, vals)


def special_invariant_check(m: int, a: F2Vector | None = None) -> dict:
    """Compare the special invariant with two sums over maximal subspaces.

    The printed combination weights the sum over spaces avoiding ``a`` by
    2^{m-2}; the combination that is actually proportional puts 2^{m-2} on
    the spaces containing ``a``.  Both are reported.
    """
    space = QuadraticSpace(m)
    if a is None:
        a = space.unit(1)
    f = special_invariant(space, a)
    h = Fraction(2 ** (m - 2)) if m >= 2 else Fraction(1, 2)
    printed = subspace_sum(space, a, 1, h)
    corrected = subspace_sum(space, a, h, 1)
    return {
        "m": m,
        "printed_ratio": proportionality(f, printed),
        "corrected_ratio": proportionality(f, corrected),
        "ratio_at_zero": corrected(0) / f(0),
    }


def proportionality(f: GroupFunction, g: GroupFunction) -> Fraction | None:
    """c with g = c f, or None."""
    piv = next((x for x, v in enumerate(f.values) if v), None)
    if piv is None:
        return None
    c = g(piv) / f(piv)
    return c if g == f.scale(c) else None


# -- spans and ranks ------------------------------------------------------------

def chi_matrix(subs: Sequence[IsotropicSubspace], size: int) -> np.ndarray:
    M = np.zeros((size, len(subs)), dtype=np.int64)
    for j, S in enumerate(subs):
        M[list(S.elements), j] = 1
    return M


def _rows_of(M: np.ndarray) -> list[list[int]]:
    return M.T.tolist()


def ti_span_dimension(m: int, sample: int | None = None, seed: int = 0, prime: int = DEFAULT_PRIME) -> dict:
    """Rank of the span of characteristic functions of maximal subspaces.

    Exact over Q for m <= 3.  For larger m the rank is taken modulo ``prime``
    over all maximal spaces (m <= 5) or a seeded random sample (m = 6).
    """
    space = QuadraticSpace(m)
    if m <= 5 and sample is None:
        subs = maximal_ti(space)
    else:
        rng = random.Random(seed)
        n = sample or 3 * invariant_dimension_formula(m)
        subs = list({random_ti(space, m, rng) for _ in range(n)})
        subs.sort()
    M = chi_matrix(subs, space.size)
    rows = _rows_of(M)
    if m <= 3:
        rank, method = exact_rank(rows), "exact"
    else:
        rank, method = modular_rank(rows, prime), f"mod {prime}"
    return {"m": m, "rank": rank, "columns": len(subs), "method": method, "prime": None if m <= 3 else prime}


def _pivot_columns(M: np.ndarray, prime: int) -> list[int]:
    """Indices of the pivot columns of ``M`` over Z/prime."""
    import flint

    R, rank = flint.nmod_mat((M % prime).tolist(), prime).rref()
    pivots = []
    ncols = M.shape[1]
    for i in range(rank):
        j = pivots[-1] + 1 if pivots else 0
        while int(R[i, j]) == 0:
            j += 1
        pivots.append(j)
        if j >= ncols:
            break
    return pivots


def independent_chi_basis(space: QuadraticSpace, target: int, seed: int = 0, prime: int = DEFAULT_PRIME) -> list[IsotropicSubspace]:
    """Maximal subspaces whose characteristic functions are independent
    modulo ``prime``, grown from seeded random samples until ``target``."""
    rng = random.Random(seed)
    pool = maximal_ti(space) if space.m <= 4 else None
    chosen: list[IsotropicSubspace] = []
    seen: set = set()
    rounds = 0
    while len(chosen) < target:
        rounds += 1
        if rounds > 20:
            raise RuntimeError(f"stuck at rank {len(chosen)} < {target}")
        if pool is not None:
            cand = [S for S in pool if S not in seen]
        else:
            cand = [random_ti(space, space.m, rng) for _ in range(2 * target)]
            cand = [S for S in dict.fromkeys(cand) if S not in seen]
        seen.update(cand)
        trial = chosen + cand
        piv = _pivot_columns(chi_matrix(trial, space.size), prime)
        chosen = [trial[j] for j in piv]
        if pool is not None:
            break
    return chosen[:target]


def isotropic_restriction_rank(m: int, prime: int = DEFAULT_PRIME, seed: int = 0) -> dict:
    """Rank of H = {invariant C with C(0) = 0} -> values on nonzero isotropic vectors."""
    space = QuadraticSpace(m)
    iso = space.isotropic()
    if m <= 3:
        basis = invariant_basis(space)
        vals = [[f(x) for x in range(space.size)] for f in basis]
        method = "exact"
    else:
        dim = invariant_dimension_formula(m)
        subs = independent_chi_basis(space, dim, seed=seed, prime=prime)
        vals = _rows_of(chi_matrix(subs, space.size))
        method = f"mod {prime}"
    # H-basis: subtract multiples of a vector with nonzero value at 0
    piv = next(i for i, v in enumerate(vals) if v[0])
    h_rows = []
    for i, v in enumerate(vals):
        if i == piv:
            continue
        c = Fraction(v[0]) / Fraction(vals[piv][0])
        h_rows.append([Fraction(v[x]) - c * vals[piv][x] for x in iso])
    if method == "exact":
        rank = exact_rank(h_rows)
    else:
        rank = modular_rank(h_rows, prime)
    return {"m": m, "dim_H": len(vals) - 1, "rank": rank, "injective": rank == len(vals) - 1, "method": method}


# -- cusp values --------------------------------------------------------------------

def cusp_value(C: GroupFunction, n: int, alpha: F2Vector | None) -> Fraction:
    """Value at a primitive isotropic cusp of the additive lift of ``C``.

    ``alpha=None`` means the cusp vector lies in the lattice itself; otherwise
    ``alpha`` is its nonzero class in the discriminant group.
    """
    if n % 4 != 2 or n <= 2:
        raise ValueError("need n = 2 mod 4 and n > 2")
    k = n // 2 - 1
    lead = -bernoulli(k) / (n - 2)
    if alpha is None:
        return lead * C(0)
    return lead * (C(0) + C(alpha) * (1 - 2**k))


# -- the subquotient lift --------------------------------------------------------------

class Subquotient:
    """S-perp / S with its induced split form, realised as F2^{2(m-s)}.

    A hyperbolic basis (e_i, f_i) of a complement of S in S-perp gives the
    coordinates x -> ((x, f_1), (x, e_1), (x, f_2), ...).
    """

    def __init__(self, S: IsotropicSubspace):
        self.S = S
        self.space = S.space
        sp = self.space
        r = sp.m - S.dim
        self.target = QuadraticSpace(r) if r >= 1 else None
        perp = S.perp()
        self.perp = perp
        # complement of S inside S-perp, as a list of vectors
        from .linalg import gf2_reduce, gf2_rref

        basis_perp = gf2_rref(perp)
        comp: list[int] = []
        span = list(S.basis)
        for v in basis_perp:
            if gf2_reduce(v, gf2_rref(span)):
                comp.append(v)
                span.append(v)
        pairs = []
        work = comp
        while work:
            e = next((v for v in _span_vectors(work) if v and not sp.q(v)), None)
            if e is None:
                raise AssertionError("no isotropic vector in a nondegenerate piece")
            f = next(v for v in _span_vectors(work) if sp.bilinear(e, v))
            if sp.q(f):
                f ^= e
            pairs.append((e, f))
            work = [w ^ (e if sp.bilinear(w, f) else 0) ^ (f if sp.bilinear(w, e) else 0) for w in work]
            work = gf2_rref(work)
        self.pairs = pairs
        if len(pairs) != r:
            raise AssertionError("subquotient has the wrong dimension")

    def coords(self, x: F2Vector) -> int:
        sp = self.space
        v = 0
        for e, f in self.pairs:
            v = (v << 2) | (sp.bilinear(x, f) << 1) | sp.bilinear(x, e)
        return v

    def lift(self, g: GroupFunction) -> GroupFunction:
        """Extend by zero off S-perp and pull back along S-perp -> S-perp/S."""
        if g.space != self.target:
            raise ValueError("function does not live on this subquotient")
        vals = [Fraction(0)] * self.space.size
        for x in self.perp:
            vals[x] = g(self.coords(x))
        return GroupFunction(self.space, vals)

    def lift_int(self, arr: np.ndarray) -> np.ndarray:
        arr = np.asarray(arr)
        out = np.zeros((self.space.size,) + arr.shape[1:], dtype=np.int64)
        idx = np.array(self.perp)
        out[idx] = arr[[self.coords(x) for x in self.perp]]
        return out


def _span_vectors(rows: Sequence[int]) -> list[int]:
    out = [0]
    for r in rows:
        out += [x ^ r for x in out]
    return out


def lift_psi(S: IsotropicSubspace, g: GroupFunction) -> GroupFunction:
    return Subquotient(S).lift(g)


def psi_image_report(S: IsotropicSubspace, prime: int = DEFAULT_PRIME, seed: int = 0) -> dict:
    """Lift a basis of the subquotient invariants and compare dimensions.

    Route 1: rank of the lifted basis (each lift checked invariant).
    Route 2: dimension of S-periodic invariants of the big space, from the
    kernel of (S - 1) on indicators of isotropic S-cosets inside S-perp.
    """
    sq = Subquotient(S)
    small = sq.target
    dim_small = invariant_dimension_formula(small.m)
    subs = independent_chi_basis(small, dim_small, seed=seed, prime=prime)
    small_cols = chi_matrix(subs, small.size)
    lifted = sq.lift_int(small_cols)
    inv_ok = bool(np.all(invariant_columns(sq.space, lifted)))
    rank_lift = exact_rank(lifted.T.tolist())
    # route 2
    sp = sq.space
    qt = sp.q_table
    cosets: dict[int, list[int]] = {}
    for x in sq.perp:
        if not qt[x]:
            cosets.setdefault(S.reduce(x), []).append(x)
    cols = np.zeros((sp.size, len(cosets)), dtype=np.int64)
    for j, members in enumerate(cosets.values()):
        cols[members, j] = 1
    image = hadamard_int(sp, cols) - (2**sp.m) * cols
    rank_defect = modular_rank(image.T.tolist(), prime)
    periodic_dim = len(cosets) - rank_defect
    return {
        "dim_S": S.dim,
        "subquotient_m": small.m,
        "subquotient_invariants": dim_small,
        "lift_rank": rank_lift,
        "lifts_invariant": inv_ok,
        "periodic_invariant_dim": periodic_dim,
    }
