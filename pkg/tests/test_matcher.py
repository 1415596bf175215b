from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_occurrences
from patwords.matcher import avoids, occurrences, placements
from patwords.patterns import (
    Word,
    all_patterns,
    complement,
    format_pattern,
    fully_hyphenated,
    parse_pattern,
    reverse,
)

UP_TO_3 = [p for m in (1, 2, 3) for p in all_patterns(m)]


@pytest.mark.parametrize("sigma, tau, expected", [
    ((1, 3, 2), "13-2", 1),
    ((2, 2, 2), "11", 2),
    ((1, 2, 1, 2), "1-2", 3),
])
def test_occurrence_examples(sigma, tau, expected):
    assert occurrences(sigma, tau) == expected
    assert naive_occurrences(sigma, parse_pattern(tau)) == expected


@pytest.mark.parametrize("sigma, tau, expected", [
    ((3, 2, 1), "12", True),
    ((1, 1, 2), "11-2", False),
    ((1, 2, 1), "11-2", True),
])
def test_avoids_examples(sigma, tau, expected):
    assert avoids(sigma, tau) is expected


def test_empty_word():
    for tau in UP_TO_3:
        assert occurrences((), tau) == 0
        assert avoids(Word((), 3), tau)


def test_word_objects_accepted():
    assert occurrences(Word((1, 3, 2), 3), "13-2") == 1


def test_placements_respect_blocks():
    for idx in placements((2, 1), 5):
        assert idx[1] == idx[0] + 1 and idx[2] > idx[1]
    assert len(placements((2, 1), 5)) == 6
    assert placements((3,), 2) == ()


@pytest.mark.parametrize("tau", UP_TO_3, ids=format_pattern)
def test_matches_naive_exhaustive(tau):
    for n in range(6):
        for w in product(range(1, 4), repeat=n):
            assert occurrences(w, tau) == naive_occurrences(w, tau)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.lists(st.integers(1, k), max_size=7).map(lambda w: (k, tuple(w)))),
       st.sampled_from(UP_TO_3))
def test_symmetry_invariance(kw, tau):
    k, w = kw
    occ = occurrences(w, tau)
    assert occ == occurrences(w[::-1], reverse(tau))
    assert occ == occurrences(tuple(k + 1 - a for a in w), complement(tau))


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 4), max_size=8), st.sampled_from(UP_TO_3))
def test_hyphen_refinement(w, tau):
    assert occurrences(w, fully_hyphenated(tau)) >= occurrences(w, tau)


def test_12_and_1_2_avoid_the_same_words():
    for n in range(7):
        for w in product(range(1, 4), repeat=n):
            assert avoids(w, "12") == avoids(w, "1-2")


def test_occurrence_bound():
    from math import comb
    for w in product(range(1, 3), repeat=6):
        for tau in ("1-1-1", "11", "1-2-1"):
            assert occurrences(w, tau) <= comb(6, parse_pattern(tau).length)
