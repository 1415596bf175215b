"""Empirical Wilf classes: group patterns whose avoidance tables coincide on a grid.

Agreement on a finite grid is evidence, not proof; the partition always
carries the bounds it was computed under.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .formulas import dispatch_or_oracle
from .oracle import EnumerationBudget, brute_count
from .patterns import GeneralizedPattern, as_pattern, format_pattern

SOURCES = ("formula", "oracle")


@dataclass(frozen=True)
class Witness:
    n: int
    k: int
    count1: int
    count2: int

    def as_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "counts": [self.count1, self.count2]}


@dataclass
class WilfPartition:
    classes: list[list[str]]
    witnesses: dict[tuple[str, str], Witness] = field(default_factory=dict)
    n_max: int = 0
    k_max: int = 0
    source: str = "formula"

    def class_of(self, pattern: str) -> list[str]:
        return next(c for c in self.classes if pattern in c)

    def same_class(self, a: str, b: str) -> bool:
        return b in self.class_of(a)

    def as_dict(self) -> dict:
        return {
            "classes": self.classes,
            "witnesses": [
                {"patterns": [a, b], **w.as_dict()} for (a, b), w in sorted(self.witnesses.items())
            ],
            "bounds": {"n_max": self.n_max, "k_max": self.k_max},
            "source": self.source,
            "evidence": "bounded",
        }


def _grid(n_max: int, k_max: int) -> list[tuple[int, int]]:
    # lexicographic in (n, k): the first differing cell is the least witness
    return [(n, k) for n in range(n_max + 1) for k in range(k_max + 1)]


def count_table(tau, n_max: int, k_max: int, source: str = "formula",
                budget: EnumerationBudget | None = None) -> tuple[int, ...]:
    if source not in SOURCES:
        raise ValueError(f"unknown source {source!r}")
    budget = budget or EnumerationBudget.from_env()
    tau = as_pattern(tau)
    if source == "formula":
        return tuple(dispatch_or_oracle(tau, n, k, budget) for n, k in _grid(n_max, k_max))
    return tuple(brute_count(tau, n, k, budget) for n, k in _grid(n_max, k_max))


def _witness(t1, t2, n_max, k_max) -> Witness | None:
    for (n, k), a, b in zip(_grid(n_max, k_max), t1, t2):
        if a != b:
            return Witness(n, k, a, b)
    return None


def compare_pair(tau1, tau2, n_max: int, k_max: int, source: str = "formula",
                 budget: EnumerationBudget | None = None) -> Witness | None:
    """Least (n, k) separating the two patterns, or None if equal within bounds."""
    t1 = count_table(tau1, n_max, k_max, source, budget)
    t2 = count_table(tau2, n_max, k_max, source, budget)
    return _witness(t1, t2, n_max, k_max)


def classify(patterns: Iterable[GeneralizedPattern | str], n_max: int, k_max: int,
             source: str = "formula", budget: EnumerationBudget | None = None,
             jobs: int = 1) -> WilfPartition:
    names = sorted({format_pattern(as_pattern(p)) for p in patterns})

    def table(name):
        return count_table(name, n_max, k_max, source, budget)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            tables = dict(zip(names, pool.map(table, names)))
    else:
        tables = {name: table(name) for name in names}

    groups: dict[tuple[int, ...], list[str]] = {}
    for name in names:
        groups.setdefault(tables[name], []).append(name)
    classes = sorted(groups.values(), key=lambda c: c[0])

    witnesses = {}
    for a, b in combinations(names, 2):
        if tables[a] != tables[b]:
            witnesses[a, b] = _witness(tables[a], tables[b], n_max, k_max)
    return WilfPartition(classes, witnesses, n_max, k_max, source)
