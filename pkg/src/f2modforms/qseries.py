"""Truncated q-expansions with exact rational coefficients.

Exponents are stored as integers scaled by ``DENOM`` so that eta^12 (half
integral exponents) and the second theta constant (exponents in 1/8 + Z/2)
share one grid.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb

DENOM = 8


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("Bernoulli numbers are indexed from 0")
    if n == 0:
        return Fraction(1)
    return -sum(comb(n + 1, k) * bernoulli(k) for k in range(n)) / (n + 1)


def sigma(k: int, n: int) -> int:
    if n < 1:
        raise ValueError("divisor sums need n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


class QExpansion:
    """sum c_e q^e for e on the grid (1/DENOM) Z, known for e < ``order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict | None = None, order=Fraction(10)):
        self.order = Fraction(order)
        lim = self.order * DENOM
        self.coeffs: dict[int, Fraction] = {}
        for e, c in (coeffs or {}).items():
            e = Fraction(e) * DENOM
            if e.denominator != 1:
                raise ValueError(f"exponent {e / DENOM} is off the 1/{DENOM} grid")
            if e < 0:
                raise ValueError("negative exponents are not supported")
            if c and e < lim:
                key = int(e)
                v = self.coeffs.get(key, 0) + Fraction(c)
                if v:
                    self.coeffs[key] = v
                else:
                    self.coeffs.pop(key, None)

    @classmethod
    def _raw(cls, coeffs: dict[int, Fraction], order: Fraction) -> "QExpansion":
        out = cls(order=order)
        out.coeffs = {k: v for k, v in coeffs.items() if v and k < order * DENOM}
        return out

    def __getitem__(self, e) -> Fraction:
        e = Fraction(e)
        if e >= self.order:
            raise IndexError(f"coefficient q^{e} is beyond the truncation order {self.order}")
        return self.coeffs.get(int(e * DENOM), Fraction(0)) if (e * DENOM).denominator == 1 else Fraction(0)

    def support(self) -> list[Fraction]:
        return [Fraction(k, DENOM) for k in sorted(self.coeffs)]

    def __add__(self, other: "QExpansion") -> "QExpansion":
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return QExpansion._raw(out, order)

    def __neg__(self) -> "QExpansion":
        return QExpansion._raw({k: -v for k, v in self.coeffs.items()}, self.order)

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        return self + (-other)

    def scale(self, c) -> "QExpansion":
        c = Fraction(c)
        return QExpansion._raw({k: v * c for k, v in self.coeffs.items()}, self.order)

    def valuation(self) -> Fraction | None:
        return Fraction(min(self.coeffs), DENOM) if self.coeffs else None

    def __mul__(self, other):
        if not isinstance(other, QExpansion):
            return self.scale(other)
        # a product is known up to min(order_a + val_b, order_b + val_a)
        va, vb = self.valuation(), other.valuation()
        if va is None or vb is None:
            return QExpansion(order=min(self.order, other.order))
        order = min(self.order + vb, other.order + va)
        lim = order * DENOM
        out: dict[int, Fraction] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                if k < lim:
                    out[k] = out.get(k, 0) + c1 * c2
        return QExpansion._raw(out, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QExpansion":
        if n < 0:
            raise ValueError("only nonnegative powers")
        result = QExpansion({0: 1}, order=self.order if self.valuation() == 0 else Fraction(10**9))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def truncate(self, order) -> "QExpansion":
        order = min(Fraction(order), self.order)
        return QExpansion._raw(self.coeffs, order)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, QExpansion):
            return NotImplemented
        order = min(self.order, other.order)
        return (self - other).truncate(order).is_zero()

    def __repr__(self) -> str:
        return f"QExpansion({self.format()})"

    def format(self, terms: int = 6) -> str:
        parts = []
        for k in sorted(self.coeffs)[:terms]:
            c = self.coeffs[k]
            e = Fraction(k, DENOM)
            if e == 0:
                parts.append(str(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                parts.append(f"{c} {mono}" if c != 1 else mono)
        parts.append(f"O(q^{self.order})")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> str:
        return json.dumps({
            "order": str(self.order),
            "coefficients": {str(Fraction(k, DENOM)): str(v) for k, v in sorted(self.coeffs.items())},
        })


# -- named series ------------------------------------------------------------------

EISENSTEIN_WEIGHTS = (6, 10, 14)

# q^1 and q^2 coefficients of the normalised series, as tabulated
EISENSTEIN_TABLE = {6: (252, 8316), 10: (132, 67716), 14: (12, 98316)}


def eisenstein_normalized(weight: int, order: int) -> QExpansion:
    """Level-one Eisenstein series scaled to constant term -1/2.

    Coefficient of q^n is (k / B_k) sigma_{k-1}(n).
    """
    if weight not in EISENSTEIN_WEIGHTS:
        raise ValueError(f"unsupported weight {weight}; expected one of {EISENSTEIN_WEIGHTS}")
    if order < 1:
        raise ValueError("order must be positive")
    factor = Fraction(weight) / bernoulli(weight)
    coeffs = {0: Fraction(-1, 2)}
    for n in range(1, order):
        coeffs[n] = factor * sigma(weight - 1, n)
    return QExpansion(coeffs, order=order)


def _check_eisenstein_table() -> None:
    for k, (a1, a2) in EISENSTEIN_TABLE.items():
        e = eisenstein_normalized(k, 3)
        if (e[0], e[1], e[2]) != (Fraction(-1, 2), a1, a2):
            raise AssertionError(f"weight {k} expansion disagrees with the tabulated values")


_check_eisenstein_table()


def euler_product(power: int, order: int) -> QExpansion:
    """prod_{n>=1} (1 - q^n)^power, truncated below q^order."""
    series = QExpansion({0: 1}, order=order)
    for n in range(1, order):
        factor = QExpansion({0: 1, n: -1}, order=order)
        for _ in range(power):
            series = series * factor
    return series


def eta12(order: int) -> QExpansion:
    """q^{1/2} prod (1 - q^n)^12, known below q^order."""
    if order < 1:
        raise ValueError("order must be positive")
    base = euler_product(12, order)
    return QExpansion({e + Fraction(1, 2): c for e, c in ((Fraction(k, DENOM), v) for k, v in base.coeffs.items())}, order=order)


def theta_constants(order: int) -> tuple[QExpansion, QExpansion, QExpansion]:
    """(sum q^{n^2/2}, sum q^{(n+1/2)^2/2}, sum (-1)^n q^{n^2/2})."""
    if order < 1:
        raise ValueError("order must be positive")
    t1: dict = {}
    t2: dict = {}
    t3: dict = {}
    n = 0
    while Fraction(n * n, 2) < order:
        for s in ((n, -n) if n else (0,)):
            e = Fraction(s * s, 2)
            t1[e] = t1.get(e, 0) + 1
            t3[e] = t3.get(e, 0) + (-1) ** (s % 2)
        n += 1
    n = 0
    while Fraction((2 * n + 1) ** 2, 8) < order:
        for s in (n, -n - 1):
            e = Fraction((2 * s + 1) ** 2, 8)
            t2[e] = t2.get(e, 0) + 1
        n += 1
    return QExpansion(t1, order), QExpansion(t2, order), QExpansion(t3, order)


def jacobi_defect(order: int) -> QExpansion:
    """theta_1^4 - theta_2^4 - theta_3^4; identically zero."""
    t1, t2, t3 = theta_constants(order)
    return t1**4 - t2**4 - t3**4


def theta_octic_sum(order: int) -> QExpansion:
    """f = theta_1^8 + theta_2^8 + theta_3^8."""
    t1, t2, t3 = theta_constants(order)
    return t1**8 + t2**8 + t3**8


def theta_square_constant(order: int) -> tuple[Fraction | None, bool]:
    """Find c with c f^2 = sum_{i<j} (theta_i^8 - theta_j^8)^2.

    The constant is fitted on the lowest nonzero coefficient of f^2 and then
    checked on every coefficient below ``order``.
    """
    t1, t2, t3 = theta_constants(order)
    a, b, c = t1**8, t2**8, t3**8
    f = a + b + c
    lhs = f * f
    rhs = (a - b) * (a - b) + (a - c) * (a - c) + (b - c) * (b - c)
    low = min(lhs.coeffs)
    const = rhs.coeffs.get(low, Fraction(0)) / lhs.coeffs[low]
    return const, lhs.scale(const) == rhs


# -- divisor counts and weights ---------------------------------------------------------

def heegner_report(m: int = 6) -> dict:
    """Weights of the H(-1)/H(-2) forms and their mod-2 component counts."""
    comps_minus1 = 2 ** (m - 1) * (2**m - 1)
    comps_minus2 = 2 ** (m - 1) * (2**m + 1) - 1
    weights = {}
    for k in EISENSTEIN_WEIGHTS:
        e = eisenstein_normalized(k, 3)
        weights[k] = (int(e[1]), int(e[2]))
    w1, w2 = weights[6]
    return {
        "components_H(-1)": comps_minus1,
        "components_H(-2)": comps_minus2,
        "weights": weights,
        "H(-2) weight per component": Fraction(w2, comps_minus2),
        "H(-1) weight per component": Fraction(w1, comps_minus1),
        "splits": {k: (a % comps_minus1 == 0, b % comps_minus2 == 0) for k, (a, b) in weights.items()},
    }
