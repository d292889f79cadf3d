from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from niltl.oracle import bfs_class, oracle_is_zero
from niltl.runs import monomial_to_runs
from niltl.words import (
    ZERO, InvalidWord, Monomial, RankMismatch, Word, canonical_form, commutes,
    equivalent, format_word, is_zero, parse_word,
)


def W(*letters, rank=3):
    return Word(letters, rank)


@st.composite
def words(draw, max_rank=5, max_len=10):
    rank = draw(st.integers(1, max_rank))
    letters = draw(st.lists(st.integers(1, rank), max_size=max_len))
    return Word(tuple(letters), rank)


def all_words(rank, max_len):
    for length in range(max_len + 1):
        for w in product(range(1, rank + 1), repeat=length):
            yield Word(w, rank)


@pytest.mark.parametrize("i, j, expected", [(1, 3, True), (2, 3, False), (4, 4, False),
                                            (3, 1, True), (5, 4, False)])
def test_commutes(i, j, expected):
    assert commutes(i, j) is expected


@pytest.mark.parametrize("letters, rank, expected", [
    ((3, 1, 2, 1), 3, True),
    ((1, 3, 2, 1), 3, True),
    ((3, 1, 2), 3, False),
    ((), 3, False),
    ((1, 1), 1, True),
    ((2, 3, 2), 3, True),
    ((2, 1, 3, 2), 3, False),
    ((2, 3, 1, 2), 3, False),
    ((2, 1, 3, 2, 1), 3, True),
])
def test_is_zero_examples(letters, rank, expected):
    assert is_zero(Word(letters, rank)) is expected


def test_canonical_form_examples():
    assert canonical_form(W(3, 1, 2)) == Monomial((1, 3, 2), 3)
    unit = canonical_form(W())
    assert unit == Monomial((), 3) and unit.degree == 0
    m = canonical_form(Word((3, 2, 1, 4, 3), 4))
    assert m.letters == (3, 2, 1, 4, 3)
    assert canonical_form(W(3, 1, 2, 1)) is ZERO


def test_equivalent_examples():
    assert equivalent(W(3, 1, 2), W(1, 3, 2))
    assert equivalent(W(2, 1, 3), W(2, 1, 3))
    # oracle: the class of 1 2 is just {1 2}, so 2 1 is not in it
    assert (2, 1) not in bfs_class((1, 2))
    assert not equivalent(W(1, 2), W(2, 1))
    # two zero words are equal
    assert equivalent(W(1, 1), W(3, 2, 3))


def test_equivalent_rank_mismatch():
    with pytest.raises(RankMismatch):
        equivalent(Word((1,), 2), Word((1,), 3))


@pytest.mark.parametrize("letters, rank", [((0,), 3), ((4,), 3), ((1, 2, 7), 5), ((1,), 0)])
def test_invalid_letters(letters, rank):
    with pytest.raises(InvalidWord):
        Word(letters, rank)


@pytest.mark.parametrize("text, letters", [
    ("3 2 1 4 3", (3, 2, 1, 4, 3)),
    ("3,2,1,4,3", (3, 2, 1, 4, 3)),
    ("3, 2 ,1", (3, 2, 1)),
    ("x3x2x1x4x3", (3, 2, 1, 4, 3)),
    ("x_3x_2", (3, 2)),
    ("", ()),
    ("  ", ()),
    ("1", (1,)),
])
def test_parse_word(text, letters):
    assert parse_word(text, 4).letters == letters


@pytest.mark.parametrize("text", ["3 a 1", "x3y2", "x", "3 5"])
def test_parse_word_rejects(text):
    with pytest.raises(InvalidWord):
        parse_word(text, 4)


def test_format_word():
    assert format_word((3, 2, 1)) == "3 2 1"
    assert format_word((3, 2, 1), compact=True) == "x3x2x1"
    assert format_word(()) == "1"
    assert str(ZERO) == "0" and not ZERO


@pytest.mark.parametrize("rank, max_len", [(1, 4), (2, 7), (3, 7), (4, 6)])
def test_exhaustive_against_oracle(rank, max_len):
    for w in all_words(rank, max_len):
        zero = oracle_is_zero(w.letters)
        assert is_zero(w) is zero, w
        if not zero:
            assert canonical_form(w).letters == min(bfs_class(w.letters)), w


def test_equivalence_matches_classes():
    ws = list(all_words(3, 4))
    zero = {w: oracle_is_zero(w.letters) for w in ws}
    classes = {w: bfs_class(w.letters).members for w in ws}
    for a in ws:
        for b in ws:
            expected = (zero[a] and zero[b]) or (
                not zero[a] and not zero[b] and b.letters in classes[a])
            assert equivalent(a, b) is expected, (a, b)


@settings(max_examples=400, deadline=None)
@given(words())
def test_is_zero_matches_oracle(w):
    assert is_zero(w) is oracle_is_zero(w.letters)


@settings(max_examples=300, deadline=None)
@given(words())
def test_canonical_form_is_least_reachable(w):
    m = canonical_form(w)
    if m is ZERO:
        return
    cls = bfs_class(w.letters)
    assert m.letters in cls
    assert m.letters == min(cls)
    assert canonical_form(m.word) == m


@settings(max_examples=300, deadline=None)
@given(words())
def test_runs_descend_by_one(w):
    m = canonical_form(w)
    if m is ZERO:
        return
    for a, b in zip(m.letters, m.letters[1:]):
        assert b > a or b == a - 1, m
    assert sum(r for _, r in monomial_to_runs(m).pairs) == m.degree


@settings(max_examples=200, deadline=None)
@given(words(max_rank=4, max_len=6), words(max_rank=4, max_len=6), words(max_rank=4, max_len=6))
def test_equivalent_is_an_equivalence(a, b, c):
    rank = max(a.rank, b.rank, c.rank)
    a, b, c = (Word(x.letters, rank) for x in (a, b, c))
    assert equivalent(a, a)
    assert equivalent(a, b) == equivalent(b, a)
    if equivalent(a, b) and equivalent(b, c):
        assert equivalent(a, c)
