"""The finite orthogonal group O(F2^{2m}) and the counting arithmetic
for pairs of orthogonal hyperbolic planes."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

import sympy

from .f2space import F2Vector, QuadraticSpace, isotropic_count


@dataclass(frozen=True)
class OrthogonalMap:
    """Linear map stored by the images of the bit basis: images[j] = g(1 << j)."""

    space: QuadraticSpace
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.space.dim:
            raise ValueError("wrong number of basis images")

    def __call__(self, x: F2Vector) -> F2Vector:
        out = 0
        j = 0
        while x:
            if x & 1:
                out ^= self.images[j]
            x >>= 1
            j += 1
        return out

    def __matmul__(self, other: "OrthogonalMap") -> "OrthogonalMap":
        """(self @ other)(x) = self(other(x))."""
        return OrthogonalMap(self.space, tuple(self(y) for y in other.images))

    @classmethod
    def identity(cls, space: QuadraticSpace) -> "OrthogonalMap":
        return cls(space, tuple(1 << j for j in range(space.dim)))

    @classmethod
    def from_function(cls, space: QuadraticSpace, fn) -> "OrthogonalMap":
        return cls(space, tuple(fn(1 << j) for j in range(space.dim)))

    def preserves_q(self) -> bool:
        """q on the basis plus the bilinear form on basis pairs (polarisation)."""
        sp = self.space
        basis = [1 << j for j in range(sp.dim)]
        for i, b in enumerate(basis):
            if sp.q(self.images[i]) != sp.q(b):
                return False
            for j in range(i + 1, sp.dim):
                if sp.bilinear(self.images[i], self.images[j]) != sp.bilinear(b, basis[j]):
                    return False
        return True

    def preserves_q_exhaustive(self) -> bool:
        sp = self.space
        return all(sp.q(self(x)) == sp.q(x) for x in range(sp.size))

    def is_invertible(self) -> bool:
        from .linalg import gf2_rank

        return gf2_rank(list(self.images)) == self.space.dim

    def inverse(self) -> "OrthogonalMap":
        """g^{-1} = g^{k-1} where k is the order of g."""
        one = OrthogonalMap.identity(self.space)
        prev, power = one, self
        while power != one:
            prev, power = power, power @ self
        return prev


def group_order(m: int) -> int:
    """|O(F2^{2m})| for the split (even-type) form."""
    if m < 1:
        raise ValueError("m >= 1")
    return 2 ** (m * (m - 1) + 1) * (2**m - 1) * prod(2 ** (2 * i) - 1 for i in range(1, m))


def transvection_map(space: QuadraticSpace, a: F2Vector) -> OrthogonalMap:
    return OrthogonalMap.from_function(space, lambda x: space.transvection(a, x))


def transvection_generators(m: int) -> list[OrthogonalMap]:
    space = QuadraticSpace(m)
    return [transvection_map(space, a) for a in space.anisotropic()]


def plane_swap(space: QuadraticSpace, i: int) -> OrthogonalMap:
    """Exchange the hyperbolic coordinate planes i and i+1 (1-based)."""
    if not 1 <= i < space.m:
        raise ValueError("plane index out of range")
    shift_lo = 2 * (space.m - i - 1)
    lo, hi = 3 << shift_lo, 3 << (shift_lo + 2)

    def fn(x: int) -> int:
        return (x & ~(lo | hi)) | ((x & lo) << 2) | ((x & hi) >> 2)

    return OrthogonalMap.from_function(space, fn)


def generators(m: int) -> list[OrthogonalMap]:
    """Transvections together with swaps of adjacent coordinate planes.

    Transvections alone fall short at m = 2, where they generate a subgroup
    of index 2 (order 36 instead of 72); the swaps close the gap.
    """
    space = QuadraticSpace(m)
    return transvection_generators(m) + [plane_swap(space, i) for i in range(1, m)]


def exhaustive_group_order(m: int) -> int:
    """Count q-preserving invertible maps directly; only feasible for m <= 2."""
    if m > 2:
        raise ValueError("exhaustive count only for m <= 2")
    space = QuadraticSpace(m)
    count = 0
    for imgs in itertools.product(range(1, space.size), repeat=space.dim):
        g = OrthogonalMap(space, imgs)
        if g.preserves_q() and g.is_invertible():
            count += 1
    return count


def closure(gens: Sequence[OrthogonalMap], limit: int = 10**6) -> set[OrthogonalMap]:
    """All products of the generators (BFS)."""
    if not gens:
        raise ValueError("need at least one generator")
    start = OrthogonalMap.identity(gens[0].space)
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for h in gens:
            p = h @ g
            if p not in seen:
                seen.add(p)
                if len(seen) > limit:
                    raise RuntimeError(f"closure exceeded {limit} elements")
                queue.append(p)
    return seen


def orbit(x: F2Vector, gens: Sequence[OrthogonalMap]) -> list[F2Vector]:
    """Sorted orbit of a vector under the group generated by ``gens``."""
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for g in gens:
            z = g(y)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return sorted(seen)


def orbits(points: Iterable[F2Vector], gens: Sequence[OrthogonalMap]) -> list[list[F2Vector]]:
    """Orbit decomposition, each orbit listed from its smallest element."""
    remaining = set(points)
    out = []
    while remaining:
        o = orbit(min(remaining), gens)
        remaining -= set(o)
        out.append(o)
    return out


def stabilizer_size(x: F2Vector, group: Iterable[OrthogonalMap]) -> int:
    return sum(1 for g in group if g(x) == x)


# -- hyperbolic planes ------------------------------------------------------------

def hyperbolic_plane_count(m: int) -> int:
    """A plane holds exactly two nonzero isotropic vectors, and each nonzero
    isotropic e has 2^{2(m-1)} isotropic partners f with (e, f) = 1."""
    if m < 1:
        raise ValueError("m >= 1")
    return (isotropic_count(m) - 1) * 2 ** (2 * (m - 1)) // 2


def hyperbolic_pair_count(m: int) -> int:
    """Ordered pairs (A, B) of orthogonal hyperbolic planes; A-perp is split of rank m-1."""
    if m < 2:
        raise ValueError("m >= 2")
    return hyperbolic_plane_count(m) * hyperbolic_plane_count(m - 1)


def hyperbolic_planes(space: QuadraticSpace) -> list[tuple[int, int, int]]:
    """Brute force: every plane as its sorted triple of nonzero vectors."""
    iso = [x for x in space.isotropic() if x]
    planes = set()
    for i, e in enumerate(iso):
        for f in iso[i + 1:]:
            if space.bilinear(e, f):
                planes.add(tuple(sorted((e, f, e ^ f))))
    return sorted(planes)


def hyperbolic_pairs_bruteforce(m: int) -> tuple[int, int]:
    """(#planes, #ordered orthogonal pairs) by enumeration."""
    space = QuadraticSpace(m)
    planes = hyperbolic_planes(space)
    pairs = 0
    for A in planes:
        for B in planes:
            if all(space.bilinear(a, b) == 0 for a in A[:2] for b in B[:2]):
                pairs += 1
    return len(planes), pairs


def minus_group_order(m: int) -> int:
    """|O(F2^{2m})| for the non-split form of Witt index m-1."""
    if m < 1:
        raise ValueError("m >= 1")
    return 2 ** (m * (m - 1) + 1) * (2**m + 1) * prod(2 ** (2 * i) - 1 for i in range(1, m))


def anisotropic_planes(space: QuadraticSpace) -> list[tuple[int, int, int]]:
    """Brute force: planes whose three nonzero vectors all have q = 1."""
    an = space.anisotropic()
    planes = set()
    for i, a in enumerate(an):
        for b in an[i + 1:]:
            if space.q(a ^ b):
                planes.add(tuple(sorted((a, b, a ^ b))))
    return sorted(planes)


def anisotropic_pair_count(m: int) -> int:
    """Ordered pairs of orthogonal anisotropic planes.

    The stabiliser of such a pair is O(plane) x O(plane) x O(split rank m-2),
    with |O(anisotropic plane)| = 6.
    """
    if m < 2:
        raise ValueError("m >= 2")
    rest = group_order(m - 2) if m > 2 else 1
    return group_order(m) // (36 * rest)


def anisotropic_pairs_bruteforce(m: int) -> tuple[int, int]:
    space = QuadraticSpace(m)
    planes = anisotropic_planes(space)
    pairs = sum(
        1
        for A in planes
        for B in planes
        if all(space.bilinear(a, b) == 0 for a in A[:2] for b in B[:2])
    )
    return len(planes), pairs


# -- the stabilizer chain ---------------------------------------------------------

O_E8_ORDER = 696_729_600
O_A2_ORDER = 12
PRINTED_STABILIZER_ORDER = 2**17 * 3**6 * 5**2 * 7
PRINTED_IMAGE_ORDER = 2**15 * 3**6 * 5**2 * 7
PRINTED_PAIR_COUNT = 2**16 * 3 * 7 * 11 * 17 * 31


def _factor(n: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in sympy.factorint(n).items()}


def format_factorization(n: int) -> str:
    return "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(_factor(n).items()))


def stabilizer_arithmetic() -> dict:
    """The index computation for A2-sublattices of U + U + (-E8), next to
    direct counts of plane pairs in F2^12.

    The chain halves 12 * 12 * |O(E8)| for the gluing condition and divides
    by the 4 surviving sign changes.  The index is computed both from the
    chain as evaluated here and from the printed image order.
    """
    full = O_A2_ORDER * O_A2_ORDER * O_E8_ORDER
    stab = full // 2
    kernel = 8 // 2
    h = stab // kernel
    group = group_order(6)
    if group % h or group % PRINTED_IMAGE_ORDER:
        raise AssertionError("image order does not divide the group order")
    index = group // h
    index_printed_h = group // PRINTED_IMAGE_ORDER
    split_pairs = hyperbolic_pair_count(6)
    aniso_pairs = anisotropic_pair_count(6)
    f = format_factorization
    return {
        "product_order": f(full),
        "stabilizer_order": f(stab),
        "stabilizer_order_printed": f(PRINTED_STABILIZER_ORDER),
        "image_order": f(h),
        "image_order_printed": f(PRINTED_IMAGE_ORDER),
        "group_order": group,
        "index": index,
        "index_factored": f(index),
        "index_from_printed_image": f(index_printed_h),
        "split_plane_pairs": split_pairs,
        "split_plane_pairs_factored": f(split_pairs),
        "anisotropic_plane_pairs": aniso_pairs,
        "anisotropic_plane_pairs_factored": f(aniso_pairs),
        "printed_count": PRINTED_PAIR_COUNT,
        "printed_count_factored": f(PRINTED_PAIR_COUNT),
        "stabilizer_matches_printed": stab == PRINTED_STABILIZER_ORDER,
        "index_equals_anisotropic_pairs": index == aniso_pairs,
        "split_pairs_match_printed": split_pairs == PRINTED_PAIR_COUNT,
        "split_to_printed_ratio": split_pairs // PRINTED_PAIR_COUNT,
    }
