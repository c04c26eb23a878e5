"""The split quadratic space F2^{2m}.

Vectors are plain Python ints.  Coordinate 1 is the most significant bit, so
integer order agrees with lexicographic order on coordinate tuples and the
bitstring of a vector reads coordinate 1 first.  Coordinates (2i-1, 2i) form
the hyperbolic pairs of q(x) = x1 x2 + ... + x_{2m-1} x_{2m}.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

F2Vector = int


class QuadraticSpace:
    """F2^{2m} with the even-type form.  Immutable; hashable by ``m``."""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError(f"half-dimension must be positive, got {m}")
        self.m = m
        self.dim = 2 * m
        self.size = 1 << (2 * m)
        self._even = sum(1 << (2 * k) for k in range(m))

    def __repr__(self) -> str:
        return f"QuadraticSpace(m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadraticSpace) and other.m == self.m

    def __hash__(self) -> int:
        return hash(("QuadraticSpace", self.m))

    # -- conversions -------------------------------------------------------

    def vec(self, coords: Sequence[int] | str) -> F2Vector:
        """Build a vector from a coordinate sequence or a bitstring."""
        if isinstance(coords, str):
            coords = [int(c) for c in coords if c in "01"]
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        v = 0
        for c in coords:
            v = (v << 1) | (int(c) & 1)
        return v

    def coords(self, v: F2Vector) -> tuple[int, ...]:
        self.check(v)
        return tuple((v >> (self.dim - 1 - i)) & 1 for i in range(self.dim))

    def bits(self, v: F2Vector) -> str:
        self.check(v)
        return format(v, f"0{self.dim}b")

    def unit(self, i: int) -> F2Vector:
        """Standard basis vector for coordinate ``i`` (1-based)."""
        if not 1 <= i <= self.dim:
            raise ValueError(f"coordinate {i} out of range 1..{self.dim}")
        return 1 << (self.dim - i)

    def check(self, v: F2Vector) -> None:
        if not 0 <= v < self.size:
            raise ValueError(f"vector {v!r} does not lie in F2^{self.dim}")

    # -- forms ---------------------------------------------------------------

    def q(self, v: F2Vector) -> int:
        self.check(v)
        return (v & (v >> 1) & self._even).bit_count() & 1

    def swap(self, v: F2Vector) -> F2Vector:
        """Exchange the two coordinates of every hyperbolic pair."""
        e = self._even
        return ((v >> 1) & e) | ((v & e) << 1)

    def bilinear(self, x: F2Vector, y: F2Vector) -> int:
        self.check(x)
        self.check(y)
        return (x & self.swap(y)).bit_count() & 1

    def is_isotropic(self, v: F2Vector) -> bool:
        return self.q(v) == 0

    def transvection(self, a: F2Vector, x: F2Vector) -> F2Vector:
        """x + (a, x) a.  Only defined for anisotropic ``a``."""
        if self.q(a) != 1:
            raise ValueError("transvection centre must be anisotropic")
        return x ^ a if self.bilinear(a, x) else x

    # -- tables ------------------------------------------------------------

    @cached_property
    def q_table(self) -> bytes:
        e = self._even
        return bytes((v & (v >> 1) & e).bit_count() & 1 for v in range(self.size))

    def vectors(self) -> range:
        return range(self.size)

    def isotropic(self, include_zero: bool = False) -> list[F2Vector]:
        qt = self.q_table
        return [v for v in range(0 if include_zero else 1, self.size) if not qt[v]]

    def anisotropic(self) -> list[F2Vector]:
        qt = self.q_table
        return [v for v in range(self.size) if qt[v]]

    def orthogonal_to(self, vectors: Iterable[F2Vector], pool: Iterable[F2Vector] | None = None) -> list[F2Vector]:
        """Elements of ``pool`` (default: whole space) orthogonal to every given vector."""
        sw = [self.swap(v) for v in vectors]
        src = range(self.size) if pool is None else pool
        return [w for w in src if all(not ((w & s).bit_count() & 1) for s in sw)]


# -- closed-form counts --------------------------------------------------------

def isotropic_count(m: int) -> int:
    """Isotropic vectors of F2^{2m}, zero included."""
    return 2 ** (m - 1) * (2**m + 1)


def anisotropic_count(m: int) -> int:
    return 2 ** (m - 1) * (2**m - 1)


def relative_counts(m: int, a_isotropic: bool) -> tuple[int, int, int, int]:
    """(nonzero iso with (a,b)=0, aniso with (a,b)=0, iso with (a,b)=1, aniso with (a,b)=1)."""
    h = 2 ** (m - 1)
    if a_isotropic:
        return (h * (h + 1) - 1, h * (h - 1), 4 ** (m - 1), 4 ** (m - 1))
    return (4 ** (m - 1) - 1, 4 ** (m - 1), h * (h + 1), h * (h - 1))


# -- censuses ------------------------------------------------------------------

def census(space: QuadraticSpace) -> tuple[int, int]:
    """Brute-force (isotropic incl. zero, anisotropic) counts."""
    aniso = sum(space.q_table)
    return space.size - aniso, aniso


def relative_census(space: QuadraticSpace, a: F2Vector) -> tuple[int, int, int, int]:
    """Brute-force counterpart of :func:`relative_counts` for a fixed nonzero ``a``."""
    space.check(a)
    if a == 0:
        raise ValueError("relative census needs a nonzero vector")
    qt = space.q_table
    sa = space.swap(a)
    counts = [0, 0, 0, 0]
    for b in range(1, space.size):
        pair = (b & sa).bit_count() & 1
        counts[2 * pair + qt[b]] += 1
    return counts[0], counts[1], counts[2], counts[3]
