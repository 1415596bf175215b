"""Formula-versus-oracle sweep and cross-checks of alternative closed forms."""
from __future__ import annotations

from . import __version__
from . import formulas as fm
from .algebra import (
    IntegralityError,
    QPolynomial,
    RationalFunction,
    TruncatedSeries,
    binomial,
    poly_pow,
)
from .oracle import EnumerationBudget, brute_count
from .patterns import as_pattern, format_pattern

STATUSES = ("match", "mismatch", "skipped-budget", "known-discrepant")


def verify_cells(patterns, n_max: int, k_max: int, budget: EnumerationBudget) -> list[dict]:
    cells = []
    for p in patterns:
        name = format_pattern(as_pattern(p))
        for n in range(n_max + 1):
            for k in range(k_max + 1):
                cell = {"pattern": name, "n": n, "k": k, "formula": None, "oracle": None}
                try:
                    cell["formula"] = fm.dispatch_count(name, n, k)
                except IntegralityError:
                    pass
                if budget.allows(n, k):
                    cell["oracle"] = brute_count(name, n, k, budget)
                if cell["oracle"] is None:
                    cell["status"] = "skipped-budget"
                elif cell["formula"] is None:
                    cell["status"] = "known-discrepant"
                else:
                    cell["status"] = "match" if cell["formula"] == cell["oracle"] else "mismatch"
                cells.append(cell)
    return cells


# ---------------------------------------------------------------- alternative forms

def alternating_sum_11dash1(k: int, N: int) -> TruncatedSeries:
    """(-1)^(k-1) prod A_i + sum_j (-1)^(k-j) B_j prod_{i>j} A_i, signs as commonly quoted."""
    A = {i: fm._A(i, N) for i in range(1, k + 1)}
    B = {i: fm._B(i, N) for i in range(1, k + 1)}
    total = TruncatedSeries.constant((-1) ** (k - 1), N)
    for i in range(1, k + 1):
        total = total * A[i]
    for j in range(1, k + 1):
        term = B[j] * (-1) ** (k - j)
        for i in range(j + 1, k + 1):
            term = term * A[i]
        total = total + term
    return total


def functional_21dash1_shifted(k: int, N: int) -> dict[int, TruncatedSeries]:
    """Same solve as series_21dash1_gf but with inner power (1-x)^(i-1)."""
    x = TruncatedSeries.monomial(1, N)
    omx = 1 - x
    rows = {0: TruncatedSeries.constant(1, N)}
    for kk in range(1, k + 1):
        rhs = TruncatedSeries.constant(1, N)
        for d in range(1, kk):
            inner = sum((binomial(i, d) * omx ** (i - 1) for i in range(d, kk)), TruncatedSeries.constant(0, N))
            rhs = rhs + x ** (d + 1) * rows[kk - d] * inner
        self_coeff = sum((omx ** (i - 1) for i in range(kk)), TruncatedSeries.constant(0, N))
        rows[kk] = rhs / (1 - x * self_coeff)
    return rows


def q_display_12(k: int, N: int) -> TruncatedSeries:
    """1 / (1 + (1 - (1 + (1-q)x)^k) / (1-q)) expanded in x."""
    omq = 1 - QPolynomial.q()
    den = [QPolynomial(1)] + [-binomial(k, j) * omq ** (j - 1) for j in range(1, k + 1)]
    return RationalFunction([QPolynomial(1)], den).expand(N)


def q_display_111(k: int, N: int) -> TruncatedSeries:
    """(1 + x(1+x)(1-q)) / (1 - (k-1+q)x - (k-1)(1-q)x^2)."""
    q = QPolynomial.q()
    num = [QPolynomial(1), 1 - q, 1 - q]
    den = [QPolynomial(1), -(q + (k - 1)), -(k - 1) * (1 - q)]
    return RationalFunction(num, den).expand(N)


def _first_diff(pairs):
    for key, a, b in pairs:
        if a != b:
            return {"at": key, "values": [str(a), str(b)]}
    return None


def _series_pairs(fa, fb, ks, N):
    return [((k, n), fa(k)[n], fb(k)[n]) for k in ks for n in range(N + 1)]


def display_checks(N: int = 8) -> list[dict]:
    """Each alternative form is compared with the implementation of record.

    ``expect`` is "agree" or "disagree"; a check passes when the outcome
    matches the expectation. Disagreeing forms are reported as
    known-discrepant.
    """
    checks = []

    def add(name, expect, pairs):
        diff = _first_diff(pairs)
        agrees = diff is None
        if agrees == (expect == "agree"):
            status = "match" if agrees else "known-discrepant"
        else:
            status = "mismatch"
        checks.append({"name": name, "expect": expect, "status": status, "first_difference": diff})

    rec = fm.series_11dash1(5, N)
    det = fm.determinant_11dash1(5, N)
    add("11-1 determinant", "agree", _series_pairs(det.__getitem__, rec.__getitem__, range(6), N))
    cof = fm.closed_11dash1(5, N)
    add("11-1 unsigned cofactor sum", "agree", _series_pairs(cof.__getitem__, rec.__getitem__, range(6), N))
    add("11-1 alternating-sign sum", "disagree",
        _series_pairs(lambda k: alternating_sum_11dash1(k, N), rec.__getitem__, range(1, 6), N))

    add("11-2 product vs step recurrence", "agree",
        _series_pairs(fm.product_11dash2(6, N).__getitem__, fm.series_11dash2(6, N).__getitem__, range(7), N))
    add("12-3 product vs count recurrence", "agree",
        _series_pairs(fm.series_12dash3(5, N).__getitem__, fm.counts_12dash3(5, N).__getitem__, range(6), N))

    r21 = fm.series_21dash1(4, N)
    add("21-1 functional equation, inner power (1-x)^(i-d)", "agree",
        _series_pairs(fm.series_21dash1_gf(4, N).__getitem__, r21.__getitem__, range(5), N))
    shifted = functional_21dash1_shifted(4, N)
    add("21-1 functional equation, inner power (1-x)^(i-1)", "disagree",
        _series_pairs(shifted.__getitem__, r21.__getitem__, range(5), N))
    rat21 = {
        0: RationalFunction([1], [1]),
        1: RationalFunction([1], [1, -1]),
        2: RationalFunction([1, -1, 1], poly_pow([1, -1], 3)),
        3: RationalFunction([1, -3, 6, -5, 3, -1], poly_pow([1, -1], 6)),
    }
    add("21-1 rational forms k<=3", "agree",
        _series_pairs(lambda k: rat21[k].expand(N), r21.__getitem__, range(4), N))

    add("13-2 rational forms k<=4", "agree",
        _series_pairs(fm.closed_13dash2(4, N).__getitem__, fm.series_13dash2(4, N).__getitem__, range(5), N))

    F, D = fm.series_123(6, N)
    Fc, Dc = fm.closed_123(6, N)
    add("123 closed form vs F/D recursion", "agree", _series_pairs(Fc.__getitem__, F.__getitem__, range(7), N))
    add("123 D closed form vs recursion", "agree", _series_pairs(Dc.__getitem__, D.__getitem__, range(7), N))
    F213, _ = fm.series_213(6, N)
    add("213 closed form vs F/D recursion", "agree",
        _series_pairs(fm.closed_213(6, N).__getitem__, F213.__getitem__, range(7), N))

    add("111 q-series vs occurrence recurrence", "agree",
        [((k, n), q_display_111(k, N)[n], fm.occpoly_all_ones(3, n, k)) for k in range(1, 5) for n in range(N + 1)])
    add("12 q-series with (1-q) powers", "disagree",
        [((k, n), q_display_12(k, N)[n], fm.occpoly_12(n, k)) for k in range(1, 5) for n in range(N + 1)])
    add("12 q-series with (q-1) powers", "agree",
        [((k, n), fm.series_12_q(k, N)[n], fm.occpoly_12(n, k)) for k in range(1, 5) for n in range(N + 1)])

    def exact_j(n, k, j, printed):
        if printed:
            return binomial(n - 1, j) * k * (k - 1) ** j
        return k * binomial(n - 1, j) * (k - 1) ** (n - 1 - j)

    cells = [(n, k, j) for n in range(1, 7) for k in range(1, 5) for j in range(n)]
    add("11 exactly-j count k C(n-1,j) (k-1)^(n-1-j)", "agree",
        [((n, k, j), exact_j(n, k, j, False), fm.occpoly_all_ones(2, n, k).coefficient(j)) for n, k, j in cells])
    add("11 exactly-j count C(n-1,j) k (k-1)^j", "disagree",
        [((n, k, j), exact_j(n, k, j, True), fm.occpoly_all_ones(2, n, k).coefficient(j)) for n, k, j in cells])
    return checks


def build_report(patterns=None, n_max: int = 6, k_max: int = 4,
                 budget: EnumerationBudget | None = None, checks: bool = True) -> dict:
    budget = budget or EnumerationBudget.from_env()
    patterns = list(patterns) if patterns else list(fm.REPRESENTATIVES)
    cells = verify_cells(patterns, n_max, k_max, budget)
    summary = {s: sum(c["status"] == s for c in cells) for s in STATUSES}
    report = {
        "version": __version__,
        "bounds": {"n_max": n_max, "k_max": k_max, "max_states": budget.max_states},
        "patterns": [format_pattern(as_pattern(p)) for p in patterns],
        "summary": summary,
        "cells": cells,
    }
    if checks:
        report["displays"] = display_checks()
    report["ok"] = summary["mismatch"] == 0 and all(
        c["status"] != "mismatch" for c in report.get("displays", [])
    )
    return report

