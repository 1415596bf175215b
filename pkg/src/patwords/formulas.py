"""Closed forms, recurrences and generating functions for avoidance counts.

Every pattern of length at most 3 (and every all-ones pattern 11...1) has an
evaluator here, reached through its symmetry-class representative by
:func:`dispatch_count`.

Series families are indexed by alphabet size: ``series_xxx(k, N)`` returns a
:class:`SeriesFamily` holding F(x; j) through x^N for every j = 0..k.
Where a result can be reached two ways (closed form and recurrence), both
are provided so they can be checked against each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .algebra import (
    IntegralityError,
    QPolynomial,
    RationalFunction,
    TruncatedSeries,
    as_integer,
    bessel_first,
    binomial,
    catalan,
    central_binomial,
    falling_factorial,
    poly_mul,
    poly_pow,
    series_determinant,
    stirling_first_signless,
)
from .oracle import BudgetExceeded, CountTable, EnumerationBudget, brute_count
from .patterns import GeneralizedPattern, as_pattern, format_pattern, symmetry_class


class Unsupported(ValueError):
    """No evaluator exists for the pattern."""


@dataclass
class SeriesFamily:
    pattern: str
    order: int
    rows: dict[int, TruncatedSeries] = field(default_factory=dict)

    def __getitem__(self, k: int) -> TruncatedSeries:
        return self.rows[k]

    @property
    def k_max(self) -> int:
        return max(self.rows)

    def counts(self, k: int) -> list[int]:
        """Integer coefficients of F(x; k); raises IntegralityError if any is fractional."""
        return self.rows[k].integers()

    def table(self) -> CountTable:
        t = CountTable(self.pattern, self.order, self.k_max, "formula")
        for k, s in self.rows.items():
            for n, c in enumerate(s.integers()):
                t.entries[n, k] = c
        return t


def _family(pattern: str, N: int, build: Callable[[int], TruncatedSeries], k: int) -> SeriesFamily:
    return SeriesFamily(pattern, N, {j: build(j) for j in range(k + 1)})


def _rational(num, den, N: int) -> TruncatedSeries:
    return RationalFunction(num, den).expand(N)


def _one(N: int) -> TruncatedSeries:
    return TruncatedSeries.constant(1, N)


def _x(N: int) -> TruncatedSeries:
    return TruncatedSeries.monomial(1, N)


def _counts_series(values, N: int) -> TruncatedSeries:
    return TruncatedSeries(values, N)


# ---------------------------------------------------------------- two-letter and trivial

def count_1(n: int, k: int) -> int:
    return 1 if n == 0 else 0


def count_1dash1(n: int, k: int) -> int:
    """Words with no repeated letter: the falling factorial (k)_n."""
    return falling_factorial(k, n) if n <= k else 0


def count_11(n: int, k: int) -> int:
    return 1 if n == 0 else k * (k - 1) ** (n - 1)


def count_1dash2(n: int, k: int) -> int:
    """Non-increasing words; also the count for the adjacent pattern 12."""
    if n == 0:
        return 1
    return binomial(n + k - 1, n)


def occpoly_all_ones(l: int, n: int, k: int) -> QPolynomial:
    """Occurrence polynomial of 11...1 (l ones)."""
    return _occpoly_all_ones_list(l, n, k)[n]


@lru_cache(maxsize=None)
def _occpoly_all_ones_list(l: int, n: int, k: int) -> tuple[QPolynomial, ...]:
    if l < 2:
        raise Unsupported("all-ones occurrence polynomial needs l >= 2")
    q = QPolynomial.q()
    step = q + (k - 1)
    tail = (k - 1) * (1 - q)
    F: list[QPolynomial] = []
    for m in range(n + 1):
        if m <= l - 1:
            F.append(QPolynomial(k ** m))
        else:
            v = step * F[m - 1]
            for d in range(2, l):
                v = v + tail * F[m - d]
            F.append(v)
    return tuple(F)


def occpoly_12(n: int, k: int) -> QPolynomial:
    """Occurrence polynomial of the adjacent ascent 12."""
    return _occpoly_12_list(n, k)[n]


@lru_cache(maxsize=None)
def _occpoly_12_list(n: int, k: int) -> tuple[QPolynomial, ...]:
    qm1 = QPolynomial.q() - 1
    F = [QPolynomial(1)]
    for m in range(1, n + 1):
        v = QPolynomial()
        for j in range(1, min(k, m) + 1):
            v = v + binomial(k, j) * qm1 ** (j - 1) * F[m - j]
        F.append(v)
    return tuple(F)


def series_all_ones_q(l: int, k: int, N: int) -> TruncatedSeries:
    """Bivariate GF of 11...1 in x with q-polynomial coefficients.

    Denominator read off the occurrence recurrence, numerator fixed by the
    initial values k^n for n < l.
    """
    q = QPolynomial.q()
    den = [QPolynomial(1), -(q + (k - 1))] + [-(k - 1) * (1 - q)] * (l - 2)
    init = [QPolynomial(k ** m) for m in range(l)]
    num = [
        sum((den[j] * init[i - j] for j in range(i + 1)), QPolynomial())
        for i in range(l)
    ]
    return _rational(num, den, N)


def series_12_q(k: int, N: int) -> TruncatedSeries:
    """Bivariate GF of 12: 1 / (1 - sum_j C(k,j) (q-1)^(j-1) x^j)."""
    qm1 = QPolynomial.q() - 1
    den = [QPolynomial(1)] + [-binomial(k, j) * qm1 ** (j - 1) for j in range(1, k + 1)]
    return _rational([QPolynomial(1)], den, N)


def series_all_ones(l: int, k: int, N: int) -> SeriesFamily:
    """(1 + x + ... + x^(l-1)) / (1 - (k-1)(x + ... + x^(l-1)))."""
    name = "1" * l

    def build(j):
        return _rational([1] * l, [1] + [-(j - 1)] * (l - 1), N)

    return _family(name, N, build, k)


# ---------------------------------------------------------------- classical three-letter

def count_1dash2dash3(n: int, k: int) -> int:
    """Closed form shared by 1-2-3 and 1-3-2, evaluated in exact rationals.

    Raises IntegralityError if the rational value is not an integer.
    """
    if k <= 2:
        return k ** n
    K = k - 2
    total = Fraction(0)
    for j in range(K + 1):
        a = sum(catalan(m) * central_binomial(K - m) for m in range(j, K + 1))
        total += a * binomial(n + 2 * j, n)
    return as_integer(total * Fraction(2) ** (n - 2 * K))


def count_1dash1dash1(n: int, k: int) -> int:
    """sum_i B(i, n-i) (k)_i over the i where the Bessel number is defined."""
    total = 0
    for i in range(k + 1):
        s = n - i
        if 0 <= s <= i:
            total += bessel_first(i, s) * falling_factorial(k, i)
    return total


def count_1dash1dash2(n: int, k: int) -> int:
    """Stirling-weighted sum shared by 1-1-2 and 1-2-1."""
    if n == 0:
        return 1
    return sum(binomial(n + k - j - 1, n) * stirling_first_signless(n, n - j) for j in range(k + 1))


# ---------------------------------------------------------------- one adjacent pair

def _A(j: int, N: int) -> TruncatedSeries:
    return _rational([0, 0, j], [1, -(j - 1)], N)


def _B(j: int, N: int) -> TruncatedSeries:
    return _rational([1, 1], [1, -(j - 1)], N)


def series_11dash1(k: int, N: int) -> SeriesFamily:
    """F(x;k) = B_k + A_k F(x;k-1), F(x;0) = 1."""
    fam = SeriesFamily("11-1", N, {0: _one(N)})
    for j in range(1, k + 1):
        fam.rows[j] = _B(j, N) + _A(j, N) * fam.rows[j - 1]
    return fam


def counts_11dash1(k: int, N: int) -> SeriesFamily:
    """a(n,k) = (k-1) a(n-1,k) + k a(n-2,k-1), a(0,k) = 1, a(1,k) = k."""
    a = {(0, 0): 1}
    for n in range(1, N + 1):
        a[n, 0] = 0
    for j in range(1, k + 1):
        a[0, j] = 1
        if N >= 1:
            a[1, j] = j
        for n in range(2, N + 1):
            a[n, j] = (j - 1) * a[n - 1, j] + j * a[n - 2, j - 1]
    return SeriesFamily("11-1", N, {j: _counts_series([a[n, j] for n in range(N + 1)], N) for j in range(k + 1)})


def closed_11dash1(k: int, N: int) -> SeriesFamily:
    """prod_{i<=k} A_i + sum_j B_j prod_{i>j} A_i (expansion of the determinant)."""

    def build(j):
        A = {i: _A(i, N) for i in range(1, j + 1)}
        B = {i: _B(i, N) for i in range(1, j + 1)}
        total = _one(N)
        for i in range(1, j + 1):
            total = total * A[i]
        if j == 0:
            return _one(N)
        for jj in range(1, j + 1):
            term = B[jj]
            for i in range(jj + 1, j + 1):
                term = term * A[i]
            total = total + term
        return total

    return _family("11-1", N, build, k)


def determinant_11dash1(k: int, N: int) -> SeriesFamily:
    """The k x k determinant with B's down the first column and -A's above the diagonal."""

    def build(j):
        if j == 0:
            return _one(N)
        zero = TruncatedSeries.constant(0, N)
        M = [[zero] * j for _ in range(j)]
        for r in range(j):
            idx = j - r
            M[r][0] = _B(idx, N) if r < j - 1 else _B(1, N) + _A(1, N)
            if r >= 1:
                M[r][r] = _one(N)
            if r <= j - 2:
                M[r][r + 1] = -_A(idx, N)
        return series_determinant(M)

    return _family("11-1", N, build, k)


def series_11dash2(k: int, N: int) -> SeriesFamily:
    """Step recurrence F(x;k) = (1-(k-2)x) / (1-(k-1)x-x^2) * F(x;k-1)."""
    fam = SeriesFamily("11-2", N, {0: _one(N)})
    for j in range(1, k + 1):
        fam.rows[j] = _rational([1, -(j - 2)], [1, -(j - 1), -1], N) * fam.rows[j - 1]
    return fam


def product_11dash2(k: int, N: int) -> SeriesFamily:
    """prod_{j<k} (1-(j-1)x) / (1-(j+x)x) as a single rational function."""

    def build(kk):
        num, den = [Fraction(1)], [Fraction(1)]
        for j in range(kk):
            num = poly_mul(num, [1, -(j - 1)])
            den = poly_mul(den, [1, -j, -1])
        return _rational(num, den, N)

    return _family("11-2", N, build, k)


def counts_21dash1(k: int, N: int) -> tuple[dict, dict]:
    """Tables (f, g) from the first-letter recurrence shared by 21-1 and 21-2.

    g[n, j][i] counts avoiders of length n over [j] starting with letter i.
    """
    f: dict[tuple[int, int], int] = {}
    g: dict[tuple[int, int], list[int]] = {}
    for j in range(k + 1):
        f[0, j] = 1
    for n in range(1, N + 1):
        for j in range(k + 1):
            if n == 1:
                row = [1] * j
            else:
                prev, lower = g[n - 1, j], g[n - 1, j - 1] if j else []
                row = []
                acc = 0
                for i in range(1, j + 1):
                    row.append(f[n - 1, j] + acc)
                    if i <= j - 1:
                        acc += lower[i - 1] - prev[i - 1]
            g[n, j] = row
            f[n, j] = sum(row)
    return f, g


def series_21dash1(k: int, N: int) -> SeriesFamily:
    f, _ = counts_21dash1(k, N)
    return SeriesFamily("21-1", N, {j: _counts_series([f[n, j] for n in range(N + 1)], N) for j in range(k + 1)})


def series_21dash1_gf(k: int, N: int) -> SeriesFamily:
    """Functional equation solved for F(x;k):

    F(x;k) - 1 = sum_{d<k} x^(d+1) F(x;k-d) sum_{i=d}^{k-1} C(i,d) (1-x)^(i-d).
    """
    x = _x(N)
    omx = 1 - x
    fam = SeriesFamily("21-1", N, {0: _one(N)})
    for kk in range(1, k + 1):
        rhs = _one(N)
        for d in range(1, kk):
            inner = sum((binomial(i, d) * omx ** (i - d) for i in range(d, kk)), TruncatedSeries.constant(0, N))
            rhs = rhs + x ** (d + 1) * fam.rows[kk - d] * inner
        self_coeff = sum((omx ** i for i in range(kk)), TruncatedSeries.constant(0, N))
        fam.rows[kk] = rhs / (1 - x * self_coeff)
    return fam


def series_12dash3(k: int, N: int) -> SeriesFamily:
    """prod_{j<k} 1 / (1 - x/(1-x)^j), shared by 12-3 and 21-3."""

    def build(kk):
        x = _x(N)
        out = _one(N)
        for j in range(kk):
            out = out / (1 - x * TruncatedSeries.geometric(1, N) ** j)
        return out

    return _family("12-3", N, build, k)


def counts_12dash3(k: int, N: int) -> SeriesFamily:
    """f(n,k) = f(n,k-1) + sum_j C(j-1+k-2, k-2) f(n-j,k), f(n,1) = 1."""
    f: dict[tuple[int, int], int] = {}
    for n in range(N + 1):
        f[n, 0] = 1 if n == 0 else 0
        if k >= 1:
            f[n, 1] = 1
    for j in range(2, k + 1):
        for n in range(N + 1):
            f[n, j] = f[n, j - 1] + sum(binomial(i - 1 + j - 2, j - 2) * f[n - i, j] for i in range(1, n + 1))
    return SeriesFamily("12-3", N, {j: _counts_series([f[n, j] for n in range(N + 1)], N) for j in range(k + 1)})


def table_13dash2(k: int, N: int) -> dict[tuple[int, int], list[int]]:
    """a[n, j] = [a_{n,j}(1), ..., a_{n,j}(j)]: avoiders of 13-2 of length n over [j] by first letter."""
    a: dict[tuple[int, int], list[int]] = {}
    for j in range(k + 1):
        a[0, j] = [0] * j
        a[1, j] = [1] * j
    for n in range(2, N + 1):
        for kk in range(k + 1):
            prev = a[n - 1, kk]
            row = []
            for j in range(1, kk + 1):
                v = sum(prev[: min(j + 1, kk)])
                v += sum(a[n - 1, i][j] for i in range(j + 1, kk))
                row.append(v)
            a[n, kk] = row
    return a


def series_13dash2(k: int, N: int) -> SeriesFamily:
    a = table_13dash2(k, N)
    rows = {}
    for j in range(k + 1):
        rows[j] = _counts_series([1] + [sum(a[n, j]) for n in range(1, N + 1)], N)
    return SeriesFamily("13-2", N, rows)


CLOSED_13DASH2 = {
    0: ([1], [1]),
    1: ([1], [1, -1]),
    2: ([1], [1, -2]),
    3: ([1, -2, 1], poly_mul([1, -2], [1, -3, 1])),
    4: ([1, -4, 6, -3], poly_mul(poly_mul([1, -3], [1, -2]), [1, -3, 1])),
}


def closed_13dash2(k: int, N: int) -> SeriesFamily:
    """The rational forms known for 13-2 at k <= 4."""
    if k > 4:
        raise Unsupported("closed forms for 13-2 exist only for k <= 4")
    return _family("13-2", N, lambda j: _rational(*CLOSED_13DASH2[j], N), k)


# ---------------------------------------------------------------- no internal hyphen

def series_111(k: int, N: int) -> SeriesFamily:
    """(1 + x + x^2) / (1 - (k-1)x - (k-1)x^2)."""
    return _family("111", N, lambda j: _rational([1, 1, 1], [1, -(j - 1), -(j - 1)], N), k)


def series_122(k: int, N: int) -> SeriesFamily:
    """x / ((1-x^2)^k - (1-x)); the denominator has zero constant term."""

    def build(j):
        den = poly_pow([1, 0, -1], j) + [Fraction(0)]
        den[0] -= 1
        den[1] += 1
        return _rational([0, 1], den, N)

    return _family("122", N, build, k)


def series_212(k: int, N: int) -> SeriesFamily:
    """1 / (1 - x sum_{j<k} 1/(1 + j x^2))."""

    def build(kk):
        inner = TruncatedSeries.constant(0, N)
        for j in range(kk):
            inner = inner + _rational([1], [1, 0, j], N)
        return 1 / (1 - _x(N) * inner)

    return _family("212", N, build, k)


def _cyclic(period_values, j: int) -> int:
    return period_values[j % 3]


_A123 = (1, -1, 0)
_B123 = (1, 0, -1)


def closed_123(k: int, N: int) -> tuple[SeriesFamily, SeriesFamily]:
    """F = 1 / sum_j a_j C(k,j) x^j and D = sum_j b_j C(k,j) x^j / (same)."""
    F = SeriesFamily("123", N)
    D = SeriesFamily("123", N)
    for kk in range(k + 1):
        den = [_cyclic(_A123, j) * binomial(kk, j) for j in range(kk + 1)]
        num = [_cyclic(_B123, j) * binomial(kk, j) for j in range(kk + 1)]
        F.rows[kk] = _rational([1], den, N)
        D.rows[kk] = _rational(num, den, N)
    return F, D


def series_123(k: int, N: int, seed: int = 3) -> tuple[SeriesFamily, SeriesFamily]:
    """Step recursion on k for (F, D), seeded at k = ``seed``.

    D(x;k) counts avoiders that stay avoiders when k+1 is appended.
    """
    x = _x(N)
    Fc, Dc = closed_123(min(k, seed), N)
    F = SeriesFamily("123", N)
    D = SeriesFamily("123", N)
    for kk in range(min(k, seed) + 1):
        if kk <= 2:
            F.rows[kk] = TruncatedSeries.geometric(kk, N)
            D.rows[kk] = Dc.rows[kk]
    if k >= seed:
        if seed == 3:
            F.rows[3] = _rational([1], [1, -3, 0, 1], N)
            D.rows[3] = _rational([1, 0, -3, 1], [1, -3, 0, 1], N)
        else:
            F.rows[seed], D.rows[seed] = Fc.rows[seed], Dc.rows[seed]
    for kk in range(seed + 1, k + 1):
        prev = D.rows[kk - 1]
        step = 1 - x * prev
        F.rows[kk] = F.rows[kk - 1] / step
        D.rows[kk] = (x + (1 - x) * prev) / step
    return F, D


def series_213(k: int, N: int) -> tuple[SeriesFamily, SeriesFamily]:
    """Step recursion on k for (F, D), seeded with F(x;1) = D(x;1) = 1/(1-x).

    D(x;k) counts avoiders of length n over [k] that stay avoiders when k+1
    is appended; over a single letter that is every word.
    """
    x = _x(N)
    F = SeriesFamily("213", N, {0: _one(N)})
    D = SeriesFamily("213", N, {0: _one(N)})
    if k >= 1:
        F.rows[1] = TruncatedSeries.geometric(1, N)
        D.rows[1] = TruncatedSeries.geometric(1, N)
    for kk in range(2, k + 1):
        prev = D.rows[kk - 1]
        step = 1 - x * prev
        F.rows[kk] = F.rows[kk - 1] / step
        D.rows[kk] = (1 - (kk - 1) * x * x) * prev / step
    return F, D


def closed_213(k: int, N: int) -> SeriesFamily:
    """1 / (1 - x - x sum_{i<=k-2} prod_{j<=i} (1 - j x^2)), and 1 at k = 0."""

    def build(kk):
        if kk == 0:
            return _one(N)
        total, prod = [Fraction(0)], [Fraction(1)]
        for i in range(kk - 1):
            prod = poly_mul(prod, [1, 0, -i])
            total = [a + b for a, b in zip(total + [0] * len(prod), prod + [0] * len(total))]
        den = [Fraction(1), Fraction(-1)] + [Fraction(0)] * len(total)
        for i, c in enumerate(total):
            den[i + 1] -= c
        return _rational([1], den, N)

    return _family("213", N, build, k)


# ---------------------------------------------------------------- dispatch

def _from_series(fn, pattern_name):
    def count(n: int, k: int) -> int:
        N = max(n, 10)
        return _series_counts(fn, k, N)[n]

    count.__name__ = f"count_{pattern_name}"
    return count


@lru_cache(maxsize=None)
def _series_counts(fn, k: int, N: int) -> tuple[int, ...]:
    fam = fn(k, N)
    if isinstance(fam, tuple):
        fam = fam[0]
    return tuple(fam.counts(k))


def _series_123_record(k, N):
    return series_123(k, N)[0]


def _series_213_record(k, N):
    return series_213(k, N)[0]


# Representative pattern -> (evaluator, source tag).
EVALUATORS: dict[str, tuple[Callable[[int, int], int], str]] = {
    "1": (count_1, "trivial"),
    "1-1": (count_1dash1, "falling factorial"),
    "11": (count_11, "k(k-1)^(n-1)"),
    "1-2": (count_1dash2, "non-increasing words"),
    "12": (count_1dash2, "non-increasing words"),
    "1-2-3": (count_1dash2dash3, "Catalan/central-binomial closed form"),
    "1-3-2": (count_1dash2dash3, "Catalan/central-binomial closed form"),
    "1-1-1": (count_1dash1dash1, "Bessel-number sum"),
    "1-1-2": (count_1dash1dash2, "Stirling-number sum"),
    "1-2-1": (count_1dash1dash2, "Stirling-number sum"),
    "11-1": (_from_series(series_11dash1, "11-1"), "k-recurrence for 11-1"),
    "11-2": (_from_series(series_11dash2, "11-2"), "k-step product for 11-2"),
    "21-1": (_from_series(series_21dash1, "21-1"), "first-letter recurrence"),
    "21-2": (_from_series(series_21dash1, "21-2"), "first-letter recurrence"),
    "12-3": (_from_series(counts_12dash3, "12-3"), "count recurrence for 12-3"),
    "21-3": (_from_series(counts_12dash3, "21-3"), "count recurrence for 12-3"),
    "13-2": (_from_series(series_13dash2, "13-2"), "first-letter DP for 13-2"),
    "111": (_from_series(series_111, "111"), "rational GF for 111"),
    "122": (_from_series(series_122, "122"), "rational GF for 122"),
    "212": (_from_series(series_212, "212"), "GF for 212"),
    "123": (_from_series(_series_123_record, "123"), "F/D recursion for 123"),
    "213": (_from_series(_series_213_record, "213"), "F/D recursion for 213"),
}

REPRESENTATIVES = [p for p in EVALUATORS if p != "1"]

_BY_CANONICAL = {format_pattern(symmetry_class(p).canonical): p for p in EVALUATORS}


def representative(tau: GeneralizedPattern | str) -> str | None:
    """Name of the evaluator-backed representative in tau's symmetry class."""
    tau = as_pattern(tau)
    if len(tau.blocks) == 1 and set(tau.letters) == {1}:
        return format_pattern(tau) if tau.length > 3 else _BY_CANONICAL[format_pattern(tau)]
    return _BY_CANONICAL.get(format_pattern(symmetry_class(tau).canonical))


def has_formula(tau) -> bool:
    return representative(tau) is not None


def dispatch_count(tau: GeneralizedPattern | str, n: int, k: int, budget: EnumerationBudget | None = None) -> int:
    """Avoidance count of ``tau`` via the formula for its symmetry class.

    Patterns without a formula fall back to the brute-force oracle.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    tau = as_pattern(tau)
    rep = representative(tau)
    if rep is None:
        if tau.length <= 3:
            raise AssertionError(f"no evaluator for {tau}")  # every m <= 3 class is covered
        raise Unsupported(f"no formula for pattern {format_pattern(tau)}")
    if rep not in EVALUATORS:
        return as_integer(occpoly_all_ones(tau.length, n, k).coefficient(0))
    return EVALUATORS[rep][0](n, k)


def dispatch_or_oracle(tau, n: int, k: int, budget: EnumerationBudget | None = None) -> int:
    try:
        return dispatch_count(tau, n, k)
    except Unsupported:
        return brute_count(tau, n, k, budget)


def formula_table(tau, n_max: int, k_max: int) -> CountTable:
    tau = as_pattern(tau)
    t = CountTable(format_pattern(tau), n_max, k_max, "formula")
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            t.entries[n, k] = dispatch_count(tau, n, k)
    return t


def series_for(tau: GeneralizedPattern | str, k: int, N: int) -> list[int]:
    """Coefficients f(0..N, k) for any supported pattern."""
    return [dispatch_count(tau, n, k) for n in range(N + 1)]

