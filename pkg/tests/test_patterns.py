import pytest
from hypothesis import given, strategies as st

from patwords.patterns import (
    BadCharacter,
    EmptyInput,
    GeneralizedPattern,
    LetterGap,
    Word,
    all_patterns,
    complement,
    format_pattern,
    parse_pattern,
    reverse,
    symmetry_class,
)

SMALL = [p for m in range(1, 5) for p in all_patterns(m)]


def P(s):
    return parse_pattern(s)


@pytest.mark.parametrize("s, blocks, ell, m", [
    ("13-2", ((1, 3), (2,)), 3, 3),
    ("1", ((1,),), 1, 1),
    ("2-31", ((2,), (3, 1)), 3, 3),
])
def test_parse(s, blocks, ell, m):
    tau = P(s)
    assert tau.blocks == blocks
    assert tau.alphabet_size == ell
    assert tau.length == m


@pytest.mark.parametrize("s, exc", [
    ("", EmptyInput),
    ("13", LetterGap),
    ("2", LetterGap),
    ("1a", BadCharacter),
    ("1--2", BadCharacter),
    ("-12", BadCharacter),
    ("12-", BadCharacter),
    ("1 2", BadCharacter),
    ("0", BadCharacter),
])
def test_parse_errors(s, exc):
    with pytest.raises(exc):
        parse_pattern(s)


def test_reverse_examples():
    assert format_pattern(reverse(P("13-2"))) == "2-31"
    assert format_pattern(reverse(P("11"))) == "11"
    assert format_pattern(reverse(P("21-3"))) == "3-12"


def test_complement_examples():
    assert format_pattern(complement(P("13-2"))) == "31-2"
    assert format_pattern(complement(P("11"))) == "11"
    assert format_pattern(complement(P("123"))) == "321"


def test_symmetry_class_examples():
    c = symmetry_class("13-2")
    assert {format_pattern(t) for t in c.members} == {"13-2", "2-31", "31-2", "2-13"}
    assert format_pattern(c.canonical) == "13-2"
    assert len(symmetry_class("11")) == 1
    assert {format_pattern(t) for t in symmetry_class("12-3").members} == {"12-3", "3-21", "32-1", "1-23"}


@pytest.mark.parametrize("tau", SMALL, ids=format_pattern)
def test_involutions_and_commutation(tau):
    assert reverse(reverse(tau)) == tau
    assert complement(complement(tau)) == tau
    assert reverse(complement(tau)) == complement(reverse(tau))


@pytest.mark.parametrize("tau", SMALL, ids=format_pattern)
def test_class_closure(tau):
    c = symmetry_class(tau)
    assert len(c) in (1, 2, 4)
    for t in c.members:
        assert reverse(t) in c and complement(t) in c
        assert t.alphabet_size == tau.alphabet_size and t.length == tau.length
        assert t.block_lengths in (tau.block_lengths, tau.block_lengths[::-1])
    assert format_pattern(c.canonical) == min(format_pattern(t) for t in c.members)


@pytest.mark.parametrize("tau", SMALL, ids=format_pattern)
def test_round_trip(tau):
    s = format_pattern(tau)
    assert format_pattern(parse_pattern(s)) == s


def test_three_letter_universe():
    pats = all_patterns(3)
    assert len(pats) == 13 * 4
    assert len({symmetry_class(p).canonical for p in pats}) == 17


@given(st.lists(st.integers(1, 9), min_size=1, max_size=6), st.integers(0, 31))
def test_round_trip_random_strings(letters, cut_mask):
    # relabel to the first letters of the alphabet so the pattern is valid
    ranks = {v: i + 1 for i, v in enumerate(sorted(set(letters)))}
    s = ""
    for i, a in enumerate(letters):
        if i and cut_mask >> (i - 1) & 1:
            s += "-"
        s += str(ranks[a])
    assert format_pattern(parse_pattern(s)) == s


def test_word_validation():
    assert len(Word((), 3)) == 0
    with pytest.raises(ValueError):
        Word((1, 4), 3)
    w = Word((1, 3, 2), 3)
    assert w.reversed().letters == (2, 3, 1)
    assert w.complemented().letters == (3, 1, 2)


def test_pattern_requires_full_alphabet():
    with pytest.raises(LetterGap):
        GeneralizedPattern(((1, 3),))
