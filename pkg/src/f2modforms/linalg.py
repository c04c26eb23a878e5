"""Rank and elimination helpers.

Exact ranks go through FLINT's integer/rational matrices; the probabilistic
route reduces modulo a word-sized prime.  GF(2) helpers work on int bitmasks.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import flint

# Largest prime below 2^62.
DEFAULT_PRIME = (1 << 62) - 57


# -- GF(2) on bitmasks ---------------------------------------------------------

def gf2_rref(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon form of bitmask rows, sorted by decreasing pivot bit."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            if r & (1 << (b.bit_length() - 1)):
                r ^= b
        if r:
            top = 1 << (r.bit_length() - 1)
            basis = [b ^ r if b & top else b for b in basis]
            basis.append(r)
    basis.sort(reverse=True)
    return basis


def gf2_rank(rows: Iterable[int]) -> int:
    return len(gf2_rref(rows))


def gf2_reduce(v: int, rref: Sequence[int]) -> int:
    """Reduce ``v`` against an RREF basis; zero iff ``v`` lies in the span."""
    for b in rref:
        if v & (1 << (b.bit_length() - 1)):
            v ^= b
    return v


def gf2_span(rows: Sequence[int]) -> list[int]:
    """All 2^k elements of the span of independent rows, in Gray-code order."""
    out = [0]
    for r in rows:
        out += [x ^ r for x in out]
    return out


# -- rational / modular ranks ------------------------------------------------------

def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def exact_rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    """Exact rank of a dense rational matrix given as a list of rows."""
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    if ncols == 0:
        return 0
    ints = _integer_rows(rows)
    return flint.fmpz_mat(ints).rank()


def modular_rank(rows: Sequence[Sequence], p: int = DEFAULT_PRIME) -> int:
    """Rank modulo ``p``; equals the rational rank with high probability for large ``p``."""
    if not rows or not len(rows[0]):
        return 0
    flat = []
    for row in rows:
        for x in row:
            if isinstance(x, Fraction):
                flat.append(x.numerator * pow(x.denominator, -1, p) % p)
            else:
                flat.append(int(x) % p)
    return flint.nmod_mat(len(rows), len(rows[0]), flat, p).rank()


def sparse_to_dense(rows: Sequence[dict], ncols: int) -> list[list]:
    dense = []
    for r in rows:
        line = [0] * ncols
        for j, c in r.items():
            line[j] = c
        dense.append(line)
    return dense


def _fmpq(x) -> flint.fmpq:
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(int(x))


def solve_in_rowspace(rows: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Rational ``c`` with ``sum c_i rows[i] == target``, or ``None`` if no solution.

    Free coefficients are set to zero.
    """
    n = len(target)
    R = len(rows)
    entries = []
    for j in range(n):
        entries.extend(_fmpq(rows[i][j]) for i in range(R))
        entries.append(_fmpq(target[j]))
    M = flint.fmpq_mat(n, R + 1, entries)
    rref, rank = M.rref()
    coeffs = [Fraction(0)] * R
    col = 0
    for k in range(rank):
        while rref[k, col] == 0:
            col += 1
        if col == R:
            return None
        v = rref[k, R]
        coeffs[col] = Fraction(int(v.p), int(v.q))
        col += 1
    return coeffs
