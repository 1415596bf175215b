"""Exact arithmetic: combinatorial numbers, q-polynomials and truncated power series.

Series coefficients are ``Fraction`` values (or ``QPolynomial`` values for
bivariate x/q series). Nothing here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Sequence, Union


class DomainError(ValueError):
    pass


class IntegralityError(ArithmeticError):
    """A value that must be an integer count came out fractional."""


class ValuationMismatch(ArithmeticError):
    pass


class ZeroDenominator(ZeroDivisionError):
    pass


# ---------------------------------------------------------------- numbers

def binomial(n: int, r: int) -> int:
    """Binomial coefficient, zero outside 0 <= r <= n (n >= 0)."""
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


def catalan(t: int) -> int:
    if t < 0:
        raise DomainError(f"catalan({t})")
    return comb(2 * t, t) // (t + 1)


def central_binomial(t: int) -> int:
    if t < 0:
        raise DomainError(f"central_binomial({t})")
    return comb(2 * t, t)


def falling_factorial(k: int, n: int) -> int:
    if n < 0:
        raise DomainError(f"falling_factorial({k}, {n})")
    out = 1
    for i in range(n):
        out *= k - i
    return out


def fibonacci(n: int) -> int:
    """F(0)=0, F(1)=F(2)=1."""
    if n < 0:
        raise DomainError(f"fibonacci({n})")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def bessel_first(r: int, s: int) -> int:
    """(r+s)! / (2^s (r-s)! s!)."""
    if s < 0 or r < 0 or s > r:
        raise DomainError(f"bessel_first({r}, {s})")
    return factorial(r + s) // (2 ** s * factorial(r - s) * factorial(s))


@lru_cache(maxsize=None)
def stirling_first_signless(n: int, j: int) -> int:
    if n < 0:
        raise DomainError(f"stirling_first_signless({n}, {j})")
    if n == 0:
        return 1 if j == 0 else 0
    if j <= 0 or j > n:
        return 0
    return stirling_first_signless(n - 1, j - 1) + (n - 1) * stirling_first_signless(n - 1, j)


def as_integer(value) -> int:
    """Integrality gate: convert an exact rational to int or raise."""
    if isinstance(value, int):
        return value
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"non-integral count {value}")
    return value.numerator


# ---------------------------------------------------------------- q-polynomials

class QPolynomial:
    """Polynomial in q with exact coefficients; zero entries are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Union[Mapping[int, object], Sequence, int, Fraction, None] = None):
        c: dict[int, object] = {}
        if coefficients is None:
            pass
        elif isinstance(coefficients, Mapping):
            for e, v in coefficients.items():
                if e < 0:
                    raise DomainError("negative exponent")
                if v:
                    c[int(e)] = _norm(v)
        elif isinstance(coefficients, (int, Fraction)):
            if coefficients:
                c[0] = _norm(coefficients)
        else:
            for e, v in enumerate(coefficients):
                if v:
                    c[e] = _norm(v)
        self._c = c

    @classmethod
    def q(cls) -> "QPolynomial":
        return cls({1: 1})

    @property
    def coefficients(self) -> dict[int, object]:
        return dict(sorted(self._c.items()))

    def coefficient(self, e: int):
        return self._c.get(e, 0)

    @property
    def degree(self) -> int:
        return max(self._c, default=-1)

    def as_list(self) -> list:
        return [self._c.get(e, 0) for e in range(self.degree + 1)]

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._c)

    def __call__(self, q):
        return sum((v * q ** e for e, v in self._c.items()), 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPolynomial(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __neg__(self) -> "QPolynomial":
        return QPolynomial({e: -v for e, v in self._c.items()})

    def __add__(self, other) -> "QPolynomial":
        other = _lift(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return QPolynomial(c)

    __radd__ = __add__

    def __sub__(self, other) -> "QPolynomial":
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "QPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "QPolynomial":
        other = _lift(other)
        if other is NotImplemented:
            return other
        c: dict[int, object] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return QPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, p: int) -> "QPolynomial":
        out = QPolynomial(1)
        for _ in range(p):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items()):
            if e == 0:
                parts.append(str(v))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                parts.append(mono if v == 1 else f"{v}{mono}" if not _is_neg(v) else f"({v}){mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"QPolynomial({self.coefficients})"


def _is_neg(v) -> bool:
    return v < 0


def _norm(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def _lift(v):
    if isinstance(v, QPolynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return QPolynomial(v)
    return NotImplemented


# ---------------------------------------------------------------- truncated series

Coefficient = Union[Fraction, QPolynomial]


def _zero_like(c):
    return QPolynomial() if isinstance(c, QPolynomial) else Fraction(0)


def _unit_inverse(c):
    if isinstance(c, QPolynomial):
        if c.is_constant() and c.coefficient(0) in (1, -1):
            return QPolynomial(c.coefficient(0))
        raise ZeroDenominator(f"q-polynomial {c} is not a unit")
    if c == 0:
        raise ZeroDenominator("zero leading coefficient")
    return 1 / Fraction(c)


class TruncatedSeries:
    """Power series in x known exactly through x^order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [c if isinstance(c, QPolynomial) else Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise DomainError("series needs order >= 0")
        zero = _zero_like(cs[0]) if cs else Fraction(0)
        cs = cs[: order + 1] + [zero] * (order + 1 - len(cs))
        self.coeffs = cs

    # constructors
    @classmethod
    def from_poly(cls, coeffs: Sequence, order: int) -> "TruncatedSeries":
        return cls(list(coeffs), order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, power: int, order: int, c=1) -> "TruncatedSeries":
        cs = [0] * (order + 1)
        if power <= order:
            cs[power] = c
        return cls(cs, order)

    @classmethod
    def geometric(cls, ratio, order: int) -> "TruncatedSeries":
        """1 / (1 - ratio*x)."""
        return cls([Fraction(ratio) ** n for n in range(order + 1)], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def shift(self, power: int) -> "TruncatedSeries":
        """Multiply by x^power, keeping the order."""
        zero = _zero_like(self.coeffs[0])
        return TruncatedSeries([zero] * power + self.coeffs[: max(0, len(self) - power)], self.order)

    def integers(self) -> list[int]:
        """Coefficients as ints; raises IntegralityError otherwise."""
        return [as_integer(c) for c in self.coeffs]

    def evaluate_q(self, q) -> "TruncatedSeries":
        return TruncatedSeries([c(q) if isinstance(c, QPolynomial) else c for c in self.coeffs], self.order)

    # arithmetic
    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction, QPolynomial)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_add(self, -other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, QPolynomial)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_div(self, other)

    def __rtruediv__(self, other) -> "TruncatedSeries":
        return series_div(TruncatedSeries.constant(other, self.order), self)

    def __pow__(self, p: int) -> "TruncatedSeries":
        if p < 0:
            return series_div(TruncatedSeries.constant(1, self.order), self ** (-p))
        out = TruncatedSeries.constant(1, self.order)
        for _ in range(p):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries([a.coeffs[i] + b.coeffs[i] for i in range(n + 1)], n)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for i in range(n + 1):
        s = ac[0] * bc[i]
        for j in range(1, i + 1):
            if ac[j] and bc[i - j]:
                s = s + ac[j] * bc[i - j]
        out.append(s)
    return TruncatedSeries(out, n)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """a / b, shifting both down by the valuation of b first.

    The result is known through x^(min(order) - valuation(b)).
    """
    v = b.valuation
    if v is None:
        raise ZeroDenominator("denominator vanishes to its full order")
    va = a.valuation
    if va is not None and va < v:
        raise ValuationMismatch(f"numerator valuation {va} < denominator valuation {v}")
    n = min(a.order, b.order) - v
    num = a.coeffs[v: v + n + 1]
    den = b.coeffs[v: v + n + 1]
    inv = _unit_inverse(den[0])
    out = []
    for i in range(n + 1):
        s = num[i]
        for j in range(1, i + 1):
            if den[j] and out[i - j]:
                s = s - den[j] * out[i - j]
        out.append(s * inv)
    return TruncatedSeries(out, n)


def series_inverse(b: TruncatedSeries) -> TruncatedSeries:
    return series_div(TruncatedSeries.constant(1, b.order), b)


# ---------------------------------------------------------------- rational functions

def _poly(coeffs) -> tuple:
    cs = [c if isinstance(c, QPolynomial) else Fraction(c) for c in coeffs]
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class RationalFunction:
    """numerator(x) / denominator(x) with exact coefficient lists (constant term first)."""

    def __init__(self, numerator: Sequence, denominator: Sequence):
        self.numerator = _poly(numerator)
        self.denominator = _poly(denominator)
        if not self.denominator:
            raise ZeroDenominator("denominator is identically zero")

    def expand(self, order: int) -> TruncatedSeries:
        """Taylor coefficients through x^order."""
        v = next(i for i, c in enumerate(self.denominator) if c)
        num = TruncatedSeries.from_poly(self.numerator or [0], order + v)
        den = TruncatedSeries.from_poly(self.denominator, order + v)
        return series_div(num, den)

    def __repr__(self) -> str:
        return f"RationalFunction({list(map(str, self.numerator))}, {list(map(str, self.denominator))})"


def poly_mul(a: Sequence, b: Sequence) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_pow(a: Sequence, p: int) -> list:
    out: list = [Fraction(1)]
    for _ in range(p):
        out = poly_mul(out, a)
    return out


def series_determinant(matrix: Sequence[Sequence[TruncatedSeries]]) -> TruncatedSeries:
    """Determinant of a square matrix of series by elimination on unit pivots."""
    size = len(matrix)
    rows = [list(r) for r in matrix]
    order = min(c.order for r in rows for c in r)
    det = TruncatedSeries.constant(1, order)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col].coeffs[0]), None)
        if pivot is None:
            raise ZeroDenominator("no unit pivot available")
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        for r in range(col + 1, size):
            if rows[r][col].valuation is None:
                continue
            factor = rows[r][col] / p
            rows[r] = [rows[r][c] - factor * rows[col][c] for c in range(size)]
    return det
