"""
Words in the generators x_1, ..., x_n of the nil-Temperley-Lieb algebra of the
path graph P_n, and the two decisions made on them: whether a word is zero and
what its canonical (lexicographically smallest) representative is.

Relations, for generators indexed along the path:

    x_i x_i = 0
    x_i x_j = x_j x_i          if |i - j| > 1
    x_i x_{i+1} x_i = 0
    x_{i+1} x_i x_{i+1} = 0

>>> canonical_form(parse_word("x3x1x2", 3))
Monomial(letters=(1, 3, 2), rank=3)
>>> is_zero(Word((3, 1, 2, 1), 3))
True
"""

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

__all__ = [
    "InvalidWord", "RankMismatch", "Word", "Monomial", "ZERO",
    "commutes", "is_zero", "canonical_form", "equivalent",
    "parse_word", "format_word",
]


class InvalidWord(ValueError):
    """A letter index lies outside 1..rank, or the text cannot be parsed."""


class RankMismatch(ValueError):
    pass


def _check_letters(letters: tuple[int, ...], rank: int) -> None:
    if rank < 0:
        raise InvalidWord(f"rank must be nonnegative, got {rank}")
    for pos, c in enumerate(letters):
        if not isinstance(c, int) or not 1 <= c <= rank:
            raise InvalidWord(
                f"letter {c!r} at position {pos} is not a generator index of P_{rank}"
            )


@dataclass(frozen=True)
class Word:
    """A raw product of generators; may be zero or non-canonical."""
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        _check_letters(self.letters, self.rank)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_word(self.letters)


@dataclass(frozen=True, order=True)
class Monomial:
    """
    A basis element: a nonzero word that is the lexicographically smallest
    member of its commutation class.

    Instances come out of `canonical_form` or `runs.runs_to_monomial`; the
    constructor only checks letter ranges. Ordering is lexicographic on the
    letters, which is the order the basis is listed in.
    """
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        _check_letters(self.letters, self.rank)

    @property
    def degree(self) -> int:
        return len(self.letters)

    @property
    def word(self) -> Word:
        return Word(self.letters, self.rank)

    def count(self, k: int) -> int:
        return self.letters.count(k)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_word(self.letters)


class _Zero:
    """The zero element; what `canonical_form` returns for reducible words."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __bool__(self):
        return False

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


def commutes(i: int, j: int) -> bool:
    """Generators of the path graph commute iff their vertices are not adjacent.

    Equal indices do not commute: x_i x_i is zero, not a swap.

    >>> commutes(1, 3), commutes(2, 3), commutes(4, 4)
    (True, False, False)
    """
    return abs(i - j) > 1


def _is_zero_letters(letters: Sequence[int], rank: int) -> bool:
    # For each index i, count letters from {i-1, i, i+1} seen since the last
    # occurrence of i. Two occurrences of i with fewer than two such letters
    # between them can be brought together into x_i x_i, x_i x_{i+-1} x_i.
    since = [2] * (rank + 2)
    for c in letters:
        if since[c] < 2:
            return True
        since[c] = 0
        since[c - 1] += 1
        since[c + 1] += 1
    return False


def is_zero(w: Word) -> bool:
    """Return True iff `w` equals zero in the algebra.

    >>> is_zero(Word((3, 1, 2), 3)), is_zero(Word((), 3))
    (False, False)
    """
    return _is_zero_letters(w.letters, w.rank)


def _lex_normal_form(letters: Sequence[int]) -> tuple[int, ...]:
    remaining = list(letters)
    out = []
    while remaining:
        blocked = set()
        best = best_pos = None
        for pos, c in enumerate(remaining):
            if c not in blocked and (best is None or c < best):
                best, best_pos = c, pos
            blocked.update((c - 1, c, c + 1))
        out.append(best)
        del remaining[best_pos]
    return tuple(out)


def canonical_form(w: Word) -> Union[Monomial, _Zero]:
    """Return the basis monomial equal to `w`, or ZERO.

    The representative is built greedily: at each step emit the smallest
    letter that no earlier unemitted letter is blocking.

    >>> canonical_form(Word((3, 2, 1, 4, 3), 4))
    Monomial(letters=(3, 2, 1, 4, 3), rank=4)
    >>> canonical_form(Word((1, 1), 1))
    ZERO
    """
    if is_zero(w):
        return ZERO
    return Monomial(_lex_normal_form(w.letters), w.rank)


def equivalent(w1: Word, w2: Word) -> bool:
    if w1.rank != w2.rank:
        raise RankMismatch(f"cannot compare words over P_{w1.rank} and P_{w2.rank}")
    return canonical_form(w1) == canonical_form(w2)


_COMPACT = re.compile(r"x_?\{?(\d+)\}?")


def parse_word(text: str, rank: int) -> Word:
    """Parse "3 2 1", "3,2,1" or the compact "x3x2x1" into a Word.

    The empty string is the unit. A bare "1" is the generator x_1, not the unit.
    """
    s = text.strip()
    if not s:
        return Word((), rank)
    if s.startswith("x"):
        compact = s.replace(" ", "").replace("*", "")
        if _COMPACT.sub("", compact):
            raise InvalidWord(f"cannot parse word {text!r}")
        letters = [int(d) for d in _COMPACT.findall(compact)]
    else:
        try:
            letters = [int(tok) for tok in re.split(r"[\s,]+", s) if tok]
        except ValueError:
            raise InvalidWord(f"cannot parse word {text!r}") from None
    return Word(tuple(letters), rank)


def format_word(letters: Iterable[int], compact: bool = False) -> str:
    """Integer form by default; the unit prints as "1"."""
    letters = tuple(letters)
    if not letters:
        return "1"
    if compact:
        return "".join(f"x{c}" for c in letters)
    return " ".join(map(str, letters))
