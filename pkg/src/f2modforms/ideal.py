"""The difference ring R_m, the relation ideal I_m, and graded membership.

Variables X_0, X_1, ... are indexed by the canonical maximal totally isotropic
subspaces in sorted order.  Membership is decided in the reduced variables
Y_B = X_B - X_{A0}, where A0 is the smallest maximal subspace.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, Mapping, Sequence

from .f2space import QuadraticSpace
from .linalg import DEFAULT_PRIME, exact_rank, modular_rank, solve_in_rowspace
from .subspaces import (
    IsotropicSubspace,
    ThirtyConfiguration,
    enumerate_ti,
    extensions_of_codim2,
    maximal_ti,
    table30,
)

Monomial = tuple[int, ...]

# (chi_a - chi_b)(chi_c - chi_d) = (chi_e - chi_f)(chi_g - chi_h)
QUADRATIC_RELATIONS = (
    (((1, 2), (1, 4)), ((3, 6), (5, 6))),
    (((1, 2), (3, 2)), ((5, 4), (5, 6))),
    (((1, 2), (1, 6)), ((3, 4), (5, 4))),
    (((1, 2), (5, 2)), ((3, 4), (3, 6))),
    (((3, 4), (1, 4)), ((5, 2), (5, 6))),
    (((3, 4), (3, 2)), ((1, 6), (5, 6))),
    (((1, 4), (1, 6)), ((3, 2), (5, 2))),
    (((1, 4), (5, 4)), ((3, 2), (3, 6))),
    (((1, 6), (3, 6)), ((5, 2), (5, 4))),
)

# the quartic: products of four differences of numbered configuration spaces
QUARTIC_TERMS = (
    ((29, 30), (17, 18), (27, 28), (7, 8)),
    ((11, 12), (13, 14), (15, 16), (21, 22)),
)


class Polynomial:
    """Sparse polynomial with exact rational coefficients.

    A monomial is the sorted tuple of its variable indices, with repetition.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    key = tuple(sorted(mono))
                    v = self.terms.get(key, 0) + Fraction(c)
                    if v:
                        self.terms[key] = v
                    else:
                        self.terms.pop(key, None)

    @classmethod
    def var(cls, i: int) -> "Polynomial":
        return cls({(i,): 1})

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls({(): c})

    @classmethod
    def linear(cls, coeffs: Mapping[int, int | Fraction]) -> "Polynomial":
        return cls({(i,): c for i, c in coeffs.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        res = Polynomial()
        res.terms = out
        return res

    def __neg__(self) -> "Polynomial":
        res = Polynomial()
        res.terms = {k: -v for k, v in self.terms.items()}
        return res

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        res = Polynomial()
        res.terms = {k: v * c for k, v in self.terms.items()} if c else {}
        return res

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(sorted(m1 + m2))
                out[key] = out.get(key, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def times_monomial(self, mono: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        res = Polynomial()
        res.terms = {tuple(sorted(k + mono)): v * c for k, v in self.terms.items()}
        return res

    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def variables(self) -> set[int]:
        return {i for k in self.terms for i in k}

    def leading(self) -> tuple[Monomial, Fraction]:
        mono = max(self.terms)
        return mono, self.terms[mono]

    def evaluate(self, values: Mapping[int, int | Fraction] | Sequence) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            t = c
            for i in mono:
                t *= values[i]
                if not t:
                    break
            total += t
        return total

    def substitute(self, images: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Replace variables by polynomials (unlisted variables stay)."""
        out = Polynomial()
        for mono, c in self.terms.items():
            term = Polynomial.const(c)
            for i in mono:
                term = term * images.get(i, Polynomial.var(i))
            out = out + term
        return out

    def rename(self, perm: Mapping[int, int]) -> "Polynomial":
        return Polynomial({tuple(perm[i] for i in k): v for k, v in self.terms.items()})

    def derivative_sum(self) -> "Polynomial":
        """sum_i d/dX_i: zero exactly on the ring generated by differences."""
        out: dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            for pos, i in enumerate(mono):
                if pos and mono[pos - 1] == i:
                    continue
                mult = mono.count(i)
                rest = mono[:pos] + mono[pos + 1:]
                out[rest] = out.get(rest, 0) + c * mult
        return Polynomial(out)

    def is_difference(self) -> bool:
        return not self.derivative_sum()

    def primitive(self) -> "Polynomial":
        """Primitive integer multiple with positive leading coefficient."""
        if not self.terms:
            return self
        den = reduce(math.lcm, (c.denominator for c in self.terms.values()))
        num = reduce(math.gcd, (abs(c.numerator * (den // c.denominator)) for c in self.terms.values()))
        scale = Fraction(den, num)
        if self.leading()[1] < 0:
            scale = -scale
        return self.scale(scale)

    def __repr__(self) -> str:
        return f"Polynomial({self.format()})"

    def format(self, name: str = "X") -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            body = "*".join(f"{name}{i}" for i in mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def diff(i: int, j: int) -> Polynomial:
    return Polynomial({(i,): 1, (j,): -1})


# -- the ring and its relations ---------------------------------------------------

@dataclass(frozen=True)
class Generator:
    poly: Polynomial
    source: IsotropicSubspace
    kind: str  # "linear" | "quadratic"


class DifferenceRing:
    """Variables indexed by maximal totally isotropic subspaces of F2^{2m}."""

    def __init__(self, m: int):
        self.space = QuadraticSpace(m)
        self.m = m
        self.maximal = maximal_ti(self.space)
        self.index = {S: i for i, S in enumerate(self.maximal)}
        self.base = 0  # A0: smallest maximal subspace

    @property
    def nvars(self) -> int:
        return len(self.maximal)

    def var(self, S: IsotropicSubspace) -> Polynomial:
        return Polynomial.var(self.index[S])

    def chi_values(self, x: int) -> list[int]:
        """Characteristic-function values of every maximal space at ``x``."""
        return [1 if x in S else 0 for S in self.maximal]

    @cached_property
    def chi_table(self) -> list[list[int]]:
        return [self.chi_values(x) for x in range(self.space.size)]

    def vanishes_on_chi(self, p: Polynomial) -> bool:
        """Does p(chi_A(x)) = 0 hold at every point x?"""
        return all(p.evaluate(row) == 0 for row in self.chi_table)

    # reduced variables: Y_j stands for X_{j'} - X_base with j' the j-th non-base index
    @cached_property
    def y_index(self) -> dict[int, int]:
        others = [i for i in range(self.nvars) if i != self.base]
        return {x: j for j, x in enumerate(others)}

    @property
    def ny(self) -> int:
        return self.nvars - 1

    def to_y(self, p: Polynomial) -> Polynomial:
        """Rewrite a difference polynomial in the reduced variables."""
        if not p.is_difference():
            raise ValueError("polynomial is not in the difference ring")
        yi = self.y_index
        out = {}
        for mono, c in p.terms.items():
            if self.base in mono:
                continue
            out[tuple(yi[i] for i in mono)] = c
        return Polynomial(out)

    def from_y(self, p: Polynomial) -> Polynomial:
        inv = {j: x for x, j in self.y_index.items()}
        return p.substitute({j: diff(x, self.base) for j, x in inv.items()})


def linear_generator(ring: DifferenceRing, sextet: Sequence[IsotropicSubspace]) -> Polynomial:
    idx = [ring.index[S] for S in sextet]
    p = Polynomial.linear({idx[0]: 1, idx[2]: 1, idx[4]: 1})
    return (p - Polynomial.linear({idx[1]: 1, idx[3]: 1, idx[5]: 1})).primitive()


def quadratic_relations_raw(ring: DifferenceRing, sextet: Sequence[IsotropicSubspace]) -> list[Polynomial]:
    """The nine quadratics of a labelled sextet, not normalised."""
    idx = [None] + [ring.index[S] for S in sextet]
    out = []
    for (l1, l2), (r1, r2) in QUADRATIC_RELATIONS:
        lhs = diff(idx[l1[0]], idx[l1[1]]) * diff(idx[l2[0]], idx[l2[1]])
        rhs = diff(idx[r1[0]], idx[r1[1]]) * diff(idx[r2[0]], idx[r2[1]])
        out.append(lhs - rhs)
    return out


@dataclass
class RelationSet:
    ring: DifferenceRing
    linear: list[Generator] = field(default_factory=list)
    quadratic: list[Generator] = field(default_factory=list)

    @property
    def generators(self) -> list[Generator]:
        return self.linear + self.quadratic

    def polys(self) -> list[Polynomial]:
        return [g.poly for g in self.generators]


def codim2_spaces(space: QuadraticSpace) -> list[IsotropicSubspace]:
    return list(enumerate_ti(space, space.m - 2))


def relation_set(m: int, ring: DifferenceRing | None = None) -> RelationSet:
    """Linear and quadratic generators of I_m, one sextet per codimension-2 space."""
    if m < 2:
        raise ValueError("relations need m >= 2")
    ring = ring or DifferenceRing(m)
    rels = RelationSet(ring)
    for A in codim2_spaces(ring.space):
        sextet = extensions_of_codim2(A)
        rels.linear.append(Generator(linear_generator(ring, sextet), A, "linear"))
        for q in quadratic_relations_raw(ring, sextet):
            if q:
                rels.quadratic.append(Generator(q.primitive(), A, "quadratic"))
    return rels


def linear_generators(m: int) -> list[Generator]:
    return relation_set(m).linear


def quadratic_generators(m: int) -> list[Generator]:
    return relation_set(m).quadratic


# -- linear algebra on graded slices ----------------------------------------------

def monomials(nvars: int, d: int) -> list[Monomial]:
    return list(itertools.combinations_with_replacement(range(nvars), d))


def slice_rows(polys: Sequence[Polynomial], cols: Mapping[Monomial, int]) -> list[dict[int, Fraction]]:
    return [{cols[k]: v for k, v in p.terms.items()} for p in polys]


def _dense(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> list[list[Fraction]]:
    out = []
    for r in rows:
        line = [0] * ncols
        for j, c in r.items():
            line[j] = c
        out.append(line)
    return out


def rank_of(polys: Sequence[Polynomial], nvars: int, d: int, exact: bool = True, prime: int = DEFAULT_PRIME) -> int:
    cols = {mono: i for i, mono in enumerate(monomials(nvars, d))}
    dense = _dense(slice_rows(polys, cols), len(cols))
    if not dense:
        return 0
    return exact_rank(dense) if exact else modular_rank(dense, prime)


class LinearEliminator:
    """Eliminates pivot variables using the linear generators.

    The RREF rows are l_p = y_p + sum_f r_pf y_f; ``transform[p]`` expresses
    l_p as a rational combination of the original linear generators.
    """

    def __init__(self, gens: Sequence[Polynomial], nvars: int):
        self.nvars = nvars
        self.gens = list(gens)
        R = len(self.gens)
        # augmented rows [coeffs | identity] -> RREF tracks the transform
        rows = []
        for k, g in enumerate(self.gens):
            row = [Fraction(0)] * (nvars + R)
            for mono, c in g.terms.items():
                if len(mono) != 1:
                    raise ValueError("linear generator expected")
                row[mono[0]] = c
            row[nvars + k] = Fraction(1)
            rows.append(row)
        self.pivots: list[int] = []
        self.rows: dict[int, dict[int, Fraction]] = {}
        self.transform: dict[int, dict[int, Fraction]] = {}
        r = 0
        for col in range(nvars):
            piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = 1 / rows[r][col]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            self.pivots.append(col)
            r += 1
        for k, col in enumerate(self.pivots):
            self.rows[col] = {j: rows[k][j] for j in range(nvars) if rows[k][j]}
            self.transform[col] = {g: rows[k][nvars + g] for g in range(R) if rows[k][nvars + g]}
        self.free = [j for j in range(nvars) if j not in self.rows]
        self.free_index = {j: i for i, j in enumerate(self.free)}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def images(self) -> dict[int, Polynomial]:
        """Pivot variable -> its value modulo the linear relations."""
        return {p: Polynomial.linear({j: -c for j, c in row.items() if j != p}) for p, row in self.rows.items()}

    def reduce(self, p: Polynomial) -> Polynomial:
        """Image in the polynomial ring on the free variables (renumbered 0..)."""
        sub = p.substitute(self.images())
        return sub.rename(self.free_index)

    def divide(self, p: Polynomial) -> tuple[dict[int, Polynomial], Polynomial]:
        """p = sum_pivot l_pivot * q_pivot + remainder, remainder free of pivots."""
        quot: dict[int, dict[Monomial, Fraction]] = {}
        rem = dict(p.terms)
        todo = sorted((k for k in rem if any(i in self.rows for i in k)), reverse=True)
        pending = set(todo)
        while todo:
            mono = todo.pop()
            pending.discard(mono)
            c = rem.pop(mono, 0)
            if not c:
                continue
            piv = max(i for i in mono if i in self.rows)
            pos = mono.index(piv)
            rest = mono[:pos] + mono[pos + 1:]
            q = quot.setdefault(piv, {})
            q[rest] = q.get(rest, 0) + c
            for j, r in self.rows[piv].items():
                if j == piv:
                    continue
                new = tuple(sorted(rest + (j,)))
                v = rem.get(new, 0) - c * r
                if v:
                    rem[new] = v
                else:
                    rem.pop(new, None)
                if any(i in self.rows for i in new) and new not in pending:
                    pending.add(new)
                    todo.append(new)
            todo.sort(reverse=True)
        return {k: Polynomial(v) for k, v in quot.items()}, Polynomial(rem)


@dataclass
class Certificate:
    """p = sum coeff * generator[gen_id] * monomial (reduced variables)."""

    entries: list[tuple[int, Monomial, Fraction]]

    def to_json(self) -> str:
        return json.dumps([[g, list(mono), f"{c.numerator}/{c.denominator}"] for g, mono, c in self.entries])

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls([(g, tuple(mono), Fraction(c)) for g, mono, c in json.loads(text)])

    def expand(self, gens: Sequence[Polynomial]) -> Polynomial:
        acc: dict[Monomial, Fraction] = {}
        for g, mono, c in self.entries:
            for k, v in gens[g].terms.items():
                key = tuple(sorted(k + mono))
                acc[key] = acc.get(key, 0) + v * c
        return Polynomial(acc)


@dataclass
class MembershipResult:
    member: bool
    certificate: Certificate | None
    rank_ideal_slice: int
    slice_dim: int
    method: str


class GradedIdeal:
    """Homogeneous ideal in the reduced variables, generated in degrees 1 and 2."""

    def __init__(self, ring: DifferenceRing, rels: RelationSet):
        self.ring = ring
        self.rels = rels
        self.gens_y = [ring.to_y(g.poly) for g in rels.generators]
        self.nlin = len(rels.linear)
        self.elim = LinearEliminator(self.gens_y[: self.nlin], ring.ny)
        self.quad_reduced = [self.elim.reduce(q) for q in self.gens_y[self.nlin:]]

    @property
    def nfree(self) -> int:
        return len(self.elim.free)

    def quadratic_rank_mod_linear(self) -> int:
        return rank_of(self.quad_reduced, self.nfree, 2)

    def quadratic_rank_raw(self) -> int:
        return rank_of(self.gens_y[self.nlin:], self.ring.ny, 2)

    def _quad_basis(self) -> list[int]:
        """Indices of a maximal independent subset of reduced quadratics."""
        cols = {mono: i for i, mono in enumerate(monomials(self.nfree, 2))}
        chosen: list[int] = []
        rows: list[list[Fraction]] = []
        for k, q in enumerate(self.quad_reduced):
            if not q:
                continue
            line = _dense(slice_rows([q], cols), len(cols))[0]
            if exact_rank(rows + [line]) > len(rows):
                rows.append(line)
                chosen.append(k)
        return chosen

    @cached_property
    def quad_basis(self) -> list[int]:
        return self._quad_basis()

    def slice_rank(self, d: int, exact: bool = True, prime: int = DEFAULT_PRIME) -> int:
        """Rank of the degree-d part of the ideal, modulo the linear relations."""
        if d < 2:
            return 0
        products = [self.quad_reduced[k].times_monomial(mu) for k in self.quad_basis for mu in monomials(self.nfree, d - 2)]
        return rank_of(products, self.nfree, d, exact=exact, prime=prime)

    def hilbert_slice(self, d: int, exact: bool = True, prime: int = DEFAULT_PRIME) -> int:
        return math.comb(self.nfree + d - 1, d) - self.slice_rank(d, exact=exact, prime=prime)

    def membership(self, p: Polynomial) -> MembershipResult:
        """Decide p in I and build a certificate (elimination route)."""
        if not p.is_homogeneous():
            raise ValueError("graded membership needs a homogeneous polynomial")
        py = self.ring.to_y(p)
        d = py.degree
        if not py:
            return MembershipResult(True, Certificate([]), 0, 0, "eliminate")
        target = self.elim.reduce(py)
        cols = {mono: i for i, mono in enumerate(monomials(self.nfree, d))}
        labels: list[tuple[int, Monomial]] = []
        rows = []
        if d >= 2:
            for k in self.quad_basis:
                for mu in monomials(self.nfree, d - 2):
                    labels.append((k, mu))
                    rows.append(self.quad_reduced[k].times_monomial(mu))
        dense = _dense(slice_rows(rows, cols), len(cols))
        tgt = [Fraction(0)] * len(cols)
        for mono, c in target.terms.items():
            tgt[cols[mono]] = c
        rank = exact_rank(dense) if dense else 0
        if not target:
            coeffs = [Fraction(0)] * len(rows)
        else:
            coeffs = solve_in_rowspace(dense, tgt) if dense else None
        if coeffs is None:
            return MembershipResult(False, None, rank, len(cols), "eliminate")
        # lift the quadratic part back to the reduced variables
        free = self.elim.free
        entries: list[tuple[int, Monomial, Fraction]] = []
        residual = py
        for (k, mu), c in zip(labels, coeffs):
            if not c:
                continue
            mono = tuple(free[i] for i in mu)
            gid = self.nlin + k
            entries.append((gid, mono, c))
            residual = residual - self.gens_y[gid].times_monomial(mono, c)
        quot, rem = self.elim.divide(residual)
        if rem:
            raise AssertionError("residual is not in the linear part of the ideal")
        lin: dict[tuple[int, Monomial], Fraction] = {}
        for piv, qpoly in quot.items():
            for g, t in self.elim.transform[piv].items():
                for mono, c in qpoly.terms.items():
                    lin[(g, mono)] = lin.get((g, mono), 0) + t * c
        entries = [(g, mono, c) for (g, mono), c in sorted(lin.items()) if c] + entries
        cert = Certificate(entries)
        if cert.expand(self.gens_y) != py:
            raise AssertionError("certificate does not reproduce the polynomial")
        return MembershipResult(True, cert, rank, len(cols), "eliminate")

    def membership_full(self, p: Polynomial) -> MembershipResult:
        """Independent route: span every generator times every monomial of the
        complementary degree in all reduced variables and solve directly."""
        if not p.is_homogeneous():
            raise ValueError("graded membership needs a homogeneous polynomial")
        py = self.ring.to_y(p)
        d = py.degree
        n = self.ring.ny
        cols = {mono: i for i, mono in enumerate(monomials(n, d))}
        labels, rows = [], []
        for gid, g in enumerate(self.gens_y):
            e = g.degree
            if e > d:
                continue
            for mu in monomials(n, d - e):
                labels.append((gid, mu))
                rows.append(g.times_monomial(mu))
        dense = _dense(slice_rows(rows, cols), len(cols))
        tgt = [Fraction(0)] * len(cols)
        for mono, c in py.terms.items():
            tgt[cols[mono]] = c
        rank = exact_rank(dense) if dense else 0
        coeffs = solve_in_rowspace(dense, tgt) if dense else (None if py else [])
        if coeffs is None:
            return MembershipResult(False, None, rank, len(cols), "full")
        cert = Certificate([(g, mu, c) for (g, mu), c in zip(labels, coeffs) if c])
        return MembershipResult(True, cert, rank, len(cols), "full")


def graded_membership(p: Polynomial, ideal: GradedIdeal, method: str = "eliminate") -> MembershipResult:
    if method == "eliminate":
        return ideal.membership(p)
    if method == "full":
        return ideal.membership_full(p)
    raise ValueError(f"unknown method {method!r}")


# -- the quartic ------------------------------------------------------------------

def quartic_of_configuration(ring: DifferenceRing, numbered: Sequence[IsotropicSubspace]) -> Polynomial:
    """The quartic in a configuration numbered 1..30."""
    if len(numbered) != 30 or len(set(numbered)) != 30:
        raise ValueError("configuration must list thirty distinct maximal spaces")
    idx = [None] + [ring.index[S] for S in numbered]
    total = Polynomial()
    for factors in QUARTIC_TERMS:
        term = Polynomial.const(1)
        for a, b in factors:
            term = term * diff(idx[a], idx[b])
        total = total + term
    return total


def standard_quartic(ring: DifferenceRing | None = None) -> tuple[DifferenceRing, Polynomial]:
    ring = ring or DifferenceRing(3)
    if ring.m != 3:
        raise ValueError("the tabulated configuration lives in F2^6")
    return ring, quartic_of_configuration(ring, table30())


def numbered_configuration(config: ThirtyConfiguration, g) -> list[IsotropicSubspace]:
    """Transport the tabulated numbering to another m=3 configuration via an
    orthogonal map ``g`` (callable on subspaces) taking the standard one to it."""
    return [g(S) for S in table30()]


# -- heuristic dimension estimate -----------------------------------------------------

def growth_degree(values: Sequence[int]) -> float | None:
    """Heuristic Krull-dimension estimate from slice dimensions h(1..D).

    Uses the log-log slope between the last two slices plus one; this is only
    a rough indicator for small D.
    """
    pts = [(d, v) for d, v in enumerate(values, start=1) if v > 0]
    if len(pts) < 2:
        return None
    (d1, v1), (d2, v2) = pts[-2], pts[-1]
    if v1 == v2:
        return 1.0
    return math.log(v2 / v1) / math.log(d2 / d1) + 1


# -- pointwise identities on a labelled sextet -----------------------------------------

def sextet_chi(sextet: Sequence[IsotropicSubspace]) -> dict[int, list[int]]:
    """chi_{I_1..I_6} on the union of the six spaces (all values vanish elsewhere)."""
    support = sorted(set().union(*(S.elements for S in sextet)))
    return {x: [1 if x in S else 0 for S in sextet] for x in support}


def linear_identity_holds(sextet: Sequence[IsotropicSubspace]) -> bool:
    """chi_1 + chi_3 + chi_5 = chi_2 + chi_4 + chi_6 at every point."""
    return all(v[0] + v[2] + v[4] == v[1] + v[3] + v[5] for v in sextet_chi(sextet).values())


def sextet_span_dimension(sextet: Sequence[IsotropicSubspace]) -> int:
    table = sextet_chi(sextet)
    return exact_rank([[table[x][i] for x in table] for i in range(6)])


def quadratic_identities_hold(sextet: Sequence[IsotropicSubspace]) -> list[bool]:
    """Each of the nine quadratic identities, evaluated at every point."""
    table = sextet_chi(sextet)
    out = []
    for (l1, l2), (r1, r2) in QUADRATIC_RELATIONS:
        ok = True
        for v in table.values():
            d = lambda pair: v[pair[0] - 1] - v[pair[1] - 1]
            if d(l1) * d(l2) != d(r1) * d(r2):
                ok = False
                break
        out.append(ok)
    return out


def hilbert_slice(m: int, d: int, exact: bool = True, prime: int = DEFAULT_PRIME) -> int:
    """dim of the degree-d part of R_m / I_m.

    For m = 1 there are two maximal spaces, one difference variable and no
    relations, so every slice is one-dimensional.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0 or m == 1:
        return 1
    ring = DifferenceRing(m)
    return GradedIdeal(ring, relation_set(m, ring)).hilbert_slice(d, exact=exact, prime=prime)
