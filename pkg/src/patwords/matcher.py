"""Occurrence counting for generalized patterns in words."""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .patterns import GeneralizedPattern, Word, as_pattern


def _sign(a: int, b: int) -> int:
    return (a > b) - (a < b)


@lru_cache(maxsize=None)
def placements(block_lengths: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    """Index tuples i_1 < ... < i_m in range(n) honouring block adjacency.

    Blocks are anchored at increasing start positions, each block occupying
    consecutive positions, with no overlap between blocks.
    """
    out: list[tuple[int, ...]] = []

    def rec(b: int, start: int, acc: list[int]):
        if b == len(block_lengths):
            out.append(tuple(acc))
            return
        size = block_lengths[b]
        rest = sum(block_lengths[b + 1:])
        for s in range(start, n - size - rest + 1):
            rec(b + 1, s + size, acc + list(range(s, s + size)))

    rec(0, 0, [])
    return tuple(out)


def _letters(sigma) -> Sequence[int]:
    return sigma.letters if isinstance(sigma, Word) else sigma


def _isomorphic(values: Sequence[int], tau_letters: Sequence[int]) -> bool:
    m = len(tau_letters)
    for p in range(m):
        for q in range(p + 1, m):
            if _sign(values[p], values[q]) != _sign(tau_letters[p], tau_letters[q]):
                return False
    return True


def occurrences(sigma: Word | Sequence[int], tau: GeneralizedPattern | str) -> int:
    """Number of occurrences of ``tau`` in ``sigma``.

    Equal pattern letters must match equal word letters, and letters in the
    same block must match adjacent positions.
    """
    tau = as_pattern(tau)
    w = _letters(sigma)
    t = tau.letters
    total = 0
    for idx in placements(tau.block_lengths, len(w)):
        if _isomorphic([w[i] for i in idx], t):
            total += 1
    return total


def avoids(sigma: Word | Sequence[int], tau: GeneralizedPattern | str) -> bool:
    tau = as_pattern(tau)
    w = _letters(sigma)
    t = tau.letters
    return not any(
        _isomorphic([w[i] for i in idx], t)
        for idx in placements(tau.block_lengths, len(w))
    )


def contains(sigma, tau) -> bool:
    return not avoids(sigma, tau)
