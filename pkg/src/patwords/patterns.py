"""Generalized (hyphenated) multipermutation patterns and their symmetries.

A pattern string such as ``"13-2"`` is a sequence of blocks separated by
hyphens; letters inside a block must match adjacent positions of a word.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence


class PatternError(ValueError):
    """Base class for pattern parse failures."""


class EmptyInput(PatternError):
    pass


class BadCharacter(PatternError):
    pass


class LetterGap(PatternError):
    pass


@dataclass(frozen=True)
class GeneralizedPattern:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.blocks or any(not b for b in self.blocks):
            raise EmptyInput("pattern has an empty block")
        used = {a for b in self.blocks for a in b}
        if used != set(range(1, len(used) + 1)):
            raise LetterGap(f"letters {sorted(used)} do not form {{1..{len(used)}}}")

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(a for b in self.blocks for a in b)

    @property
    def alphabet_size(self) -> int:
        return max(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def adjacency(self) -> tuple[bool, ...]:
        """``adjacency[p]`` is True when letter p must sit right after letter p-1."""
        flags = []
        for b in self.blocks:
            flags.append(False)
            flags.extend([True] * (len(b) - 1))
        return tuple(flags)

    @property
    def block_lengths(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return format_pattern(self)

    def __repr__(self) -> str:
        return f"GeneralizedPattern({format_pattern(self)!r})"


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        if self.alphabet_size < 0:
            raise ValueError("alphabet size must be non-negative")
        for a in self.letters:
            if not 1 <= a <= self.alphabet_size:
                raise ValueError(f"letter {a} outside [1..{self.alphabet_size}]")

    def __len__(self) -> int:
        return len(self.letters)

    def reversed(self) -> "Word":
        return Word(self.letters[::-1], self.alphabet_size)

    def complemented(self) -> "Word":
        k = self.alphabet_size
        return Word(tuple(k + 1 - a for a in self.letters), k)


@dataclass(frozen=True)
class SymmetryClass:
    members: frozenset[GeneralizedPattern]
    canonical: GeneralizedPattern

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, tau) -> bool:
        return tau in self.members

    def sorted_members(self) -> list[GeneralizedPattern]:
        return sorted(self.members, key=format_pattern)


def parse_pattern(s: str) -> GeneralizedPattern:
    """Parse ``digit (('-')? digit)*`` with digits 1..9."""
    if s is None or s == "":
        raise EmptyInput("empty pattern string")
    blocks: list[list[int]] = [[]]
    for pos, ch in enumerate(s):
        if ch == "-":
            if not blocks[-1]:
                raise BadCharacter(f"misplaced hyphen at position {pos} in {s!r}")
            blocks.append([])
        elif "1" <= ch <= "9":
            blocks[-1].append(int(ch))
        else:
            raise BadCharacter(f"unexpected character {ch!r} at position {pos} in {s!r}")
    if not blocks[-1]:
        raise BadCharacter(f"trailing hyphen in {s!r}")
    return GeneralizedPattern(tuple(tuple(b) for b in blocks))


def format_pattern(tau: GeneralizedPattern) -> str:
    return "-".join("".join(str(a) for a in b) for b in tau.blocks)


def as_pattern(tau: GeneralizedPattern | str) -> GeneralizedPattern:
    return parse_pattern(tau) if isinstance(tau, str) else tau


def reverse(tau: GeneralizedPattern) -> GeneralizedPattern:
    return GeneralizedPattern(tuple(tuple(reversed(b)) for b in reversed(tau.blocks)))


def complement(tau: GeneralizedPattern) -> GeneralizedPattern:
    top = tau.alphabet_size + 1
    return GeneralizedPattern(tuple(tuple(top - a for a in b) for b in tau.blocks))


def symmetry_class(tau: GeneralizedPattern | str) -> SymmetryClass:
    tau = as_pattern(tau)
    members = frozenset({tau, reverse(tau), complement(tau), complement(reverse(tau))})
    return SymmetryClass(members, min(members, key=format_pattern))


def canonical(tau: GeneralizedPattern | str) -> GeneralizedPattern:
    return symmetry_class(tau).canonical


def fully_hyphenated(tau: GeneralizedPattern) -> GeneralizedPattern:
    return GeneralizedPattern(tuple((a,) for a in tau.letters))


def hyphenations(letters: Sequence[int]) -> Iterator[GeneralizedPattern]:
    """All ways of cutting a letter string into blocks."""
    m = len(letters)
    for cuts in product((False, True), repeat=m - 1):
        blocks, cur = [], [letters[0]]
        for cut, a in zip(cuts, letters[1:]):
            if cut:
                blocks.append(tuple(cur))
                cur = []
            cur.append(a)
        blocks.append(tuple(cur))
        yield GeneralizedPattern(tuple(blocks))


def letter_strings(m: int, max_alphabet: int | None = None) -> list[tuple[int, ...]]:
    """Strings in [l]^m using every letter of [l], for l <= max_alphabet."""
    top = m if max_alphabet is None else min(m, max_alphabet)
    out = []
    for s in product(range(1, top + 1), repeat=m):
        if set(s) == set(range(1, max(s) + 1)):
            out.append(s)
    return out


def all_patterns(m: int, max_alphabet: int | None = None) -> list[GeneralizedPattern]:
    """Every generalized pattern of length m, sorted by string."""
    pats = {h for s in letter_strings(m, max_alphabet) for h in hyphenations(s)}
    return sorted(pats, key=format_pattern)
