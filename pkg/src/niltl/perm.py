"""
Basis monomials as 321-avoiding permutations.

The generator x_i maps to the adjacent transposition s_i swapping i and i+1.
A word maps to the composite of its transpositions with the rightmost letter
applied first, so x_2 x_1 x_3 x_2 is the function s_2(s_1(s_3(s_2(k)))).
Permutations are tuples in one-line notation on 1..n+1.

>>> monomial_to_permutation(Monomial((2, 1, 3, 2), 3))
(3, 4, 1, 2)
"""

from typing import NewType, Sequence

from .words import Monomial, Word, canonical_form, ZERO

__all__ = [
    "PermOneLine", "InvalidPermutation", "Not321Avoiding", "check_permutation",
    "monomial_to_permutation", "inversions", "is_321_avoiding",
    "reduced_word", "permutation_to_monomial", "parse_permutation",
    "format_permutation",
]

# images of 1..n+1, in one-line notation
PermOneLine = NewType("PermOneLine", tuple[int, ...])


class InvalidPermutation(ValueError):
    pass


class Not321Avoiding(ValueError):
    pass


def check_permutation(p: Sequence[int]) -> PermOneLine:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidPermutation(f"{p} is not a permutation of 1..{len(p)}")
    return PermOneLine(p)


def monomial_to_permutation(m: Monomial) -> PermOneLine:
    """Composite of s_i over the letters, rightmost first."""
    # one-line notation of f o s_i is that of f with positions i, i+1 swapped,
    # so multiplying on the right by each letter in order builds the composite.
    images = list(range(1, m.rank + 2))
    for i in m.letters:
        images[i - 1], images[i] = images[i], images[i - 1]
    return PermOneLine(tuple(images))


def inversions(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def is_321_avoiding(p: Sequence[int]) -> bool:
    """No i < j < k with p(i) > p(j) > p(k)."""
    running_max = 0
    # largest value so far with a larger value somewhere to its left
    middle = 0
    for v in p:
        if v < middle:
            return False
        if v < running_max:
            middle = max(middle, v)
        else:
            running_max = v
    return True


def reduced_word(p: Sequence[int]) -> tuple[int, ...]:
    """A reduced word for `p`: peel off the leftmost descent until sorted.

    The word's length equals inversions(p).
    """
    images = list(p)
    peeled = []
    while True:
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                peeled.append(i + 1)
                break
        else:
            break
    # p = s_{i_k} ... s_{i_1} when peeled in the order i_1, ..., i_k
    return tuple(reversed(peeled))


def permutation_to_monomial(p: Sequence[int]) -> Monomial:
    """Inverse of `monomial_to_permutation` on 321-avoiding permutations.

    >>> str(permutation_to_monomial((3, 4, 1, 2)))
    '2 1 3 2'
    """
    p = check_permutation(p)
    if not is_321_avoiding(p):
        raise Not321Avoiding(f"{format_permutation(p)} contains the pattern 321")
    m = canonical_form(Word(reduced_word(p), max(len(p) - 1, 0)))
    if m is ZERO:
        raise Not321Avoiding(f"reduced word of {format_permutation(p)} is zero")
    return m


def parse_permutation(text: str) -> PermOneLine:
    try:
        return check_permutation(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as e:
        raise InvalidPermutation(f"cannot parse permutation {text!r}: {e}") from None


def format_permutation(p: Sequence[int]) -> str:
    return " ".join(map(str, p))
