"""Brute-force ground truth by exhaustive enumeration of [k]^n."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import _kernels
from .algebra import QPolynomial
from .matcher import placements
from .patterns import GeneralizedPattern, as_pattern, format_pattern

DEFAULT_MAX_STATES = 10 ** 7
ENV_MAX_STATES = "PATWORDS_MAX_STATES"


class BudgetExceeded(RuntimeError):
    def __init__(self, n: int, k: int, max_states: int):
        super().__init__(f"k^n = {k}^{n} = {k ** n} exceeds the budget of {max_states} words")
        self.n, self.k, self.max_states = n, k, max_states


@dataclass(frozen=True)
class EnumerationBudget:
    max_states: int = DEFAULT_MAX_STATES
    workers: int = 1

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError("max_states must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @classmethod
    def from_env(cls, workers: int = 1) -> "EnumerationBudget":
        raw = os.environ.get(ENV_MAX_STATES)
        return cls(int(raw) if raw else DEFAULT_MAX_STATES, workers)

    def allows(self, n: int, k: int) -> bool:
        return k ** n <= self.max_states


@dataclass
class CountTable:
    """(n, k) -> count, with ``None`` marking cells that were not computed."""

    pattern: str
    n_max: int
    k_max: int
    source: str
    entries: dict[tuple[int, int], int | None] = field(default_factory=dict)

    def __getitem__(self, cell: tuple[int, int]) -> int | None:
        return self.entries[cell]

    def cells(self):
        return sorted(self.entries)

    def missing(self) -> list[tuple[int, int]]:
        return [c for c in self.cells() if self.entries[c] is None]


def _histogram(tau: GeneralizedPattern, n: int, k: int, budget: EnumerationBudget) -> list[int]:
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if not budget.allows(n, k):
        raise BudgetExceeded(n, k, budget.max_states)
    total = k ** n
    if total == 0:
        return [0]
    arrays = _kernels.pattern_arrays(tau.letters, placements(tau.block_lengths, n))
    # shard by first letter so the decomposition is independent of worker count
    shard = total // k if n else total
    bounds = [(s, min(total, s + shard)) for s in range(0, total, shard)]

    def run(b):
        return _kernels.histogram(n, k, b[0], b[1], *arrays)

    if budget.workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=budget.workers) as pool:
            parts = list(pool.map(run, bounds))
    else:
        parts = [run(b) for b in bounds]
    hist = parts[0].copy()
    for p in parts[1:]:
        hist += p
    return [int(v) for v in hist]


def brute_count(tau, n: int, k: int, budget: EnumerationBudget | None = None) -> int:
    """|[k]^n(tau)| by exhaustive enumeration."""
    budget = budget or EnumerationBudget.from_env()
    return _histogram(as_pattern(tau), n, k, budget)[0]


def brute_occpoly(tau, n: int, k: int, budget: EnumerationBudget | None = None) -> QPolynomial:
    """Occurrence polynomial: coefficient of q^r counts words with exactly r occurrences."""
    budget = budget or EnumerationBudget.from_env()
    return QPolynomial(_histogram(as_pattern(tau), n, k, budget))


def brute_table(tau, n_max: int, k_max: int, budget: EnumerationBudget | None = None) -> CountTable:
    budget = budget or EnumerationBudget.from_env()
    tau = as_pattern(tau)
    table = CountTable(format_pattern(tau), n_max, k_max, "oracle")
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            table.entries[n, k] = brute_count(tau, n, k, budget) if budget.allows(n, k) else None
    return table


def brute_words(tau, n: int, k: int, budget: EnumerationBudget | None = None):
    """The avoiding words themselves, via the pure-Python matcher (small cases only)."""
    from itertools import product

    from .matcher import avoids

    budget = budget or EnumerationBudget.from_env()
    if not budget.allows(n, k):
        raise BudgetExceeded(n, k, budget.max_states)
    tau = as_pattern(tau)
    return [w for w in product(range(1, k + 1), repeat=n) if avoids(w, tau)]
