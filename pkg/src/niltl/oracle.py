"""
Brute-force reference implementations, used only to check the fast paths.

None of the normal-form, run, or enumeration code is called here: commutation
classes are explored by breadth-first search straight from the defining
relations, and permutation statistics are computed by enumerating triples
and pairs. Words are plain tuples of generator indices.
"""

from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .enumeration import DegreeDistribution

__all__ = [
    "CapExceeded", "CommutationClass", "bfs_class", "oracle_is_zero",
    "oracle_basis", "oracle_321_triangle",
]

DEFAULT_MAX_LENGTH = 12
DEFAULT_MAX_MEMBERS = 200_000


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CommutationClass:
    """Words reachable from `representative` by swapping commuting neighbours."""
    representative: tuple[int, ...]
    members: frozenset

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, word):
        return tuple(word) in self.members


def bfs_class(word, max_length: int = DEFAULT_MAX_LENGTH,
              max_members: int = DEFAULT_MAX_MEMBERS) -> CommutationClass:
    word = tuple(word)
    if len(word) > max_length:
        raise CapExceeded(f"word of length {len(word)} exceeds cap {max_length}")
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if abs(w[i] - w[i + 1]) > 1:
                v = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if v not in seen:
                    seen.add(v)
                    if len(seen) > max_members:
                        raise CapExceeded(f"class of {word} has more than {max_members} members")
                    queue.append(v)
    return CommutationClass(word, frozenset(seen))


def _has_forbidden_factor(w) -> bool:
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            return True
    for i in range(len(w) - 2):
        if w[i] == w[i + 2] and abs(w[i] - w[i + 1]) == 1:
            return True
    return False


def oracle_is_zero(word, **caps) -> bool:
    """Some member of the commutation class contains ii, i(i+1)i or (i+1)i(i+1)."""
    return any(_has_forbidden_factor(w) for w in bfs_class(word, **caps))


def oracle_basis(n: int, max_len: Optional[int] = None) -> list[tuple[int, ...]]:
    """Lexicographically least member of every nonzero class, sorted.

    Lengths are scanned upward until one has no nonzero word (or `max_len` is
    reached). Only nonzero words are extended: a word with a zero prefix is
    itself zero, since any rewrite of the prefix is also a rewrite of the word.
    """
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    found = {()}
    layer = [()]
    length = 0
    while layer and (max_len is None or length < max_len):
        length += 1
        nxt = []
        for w in layer:
            for c in range(1, n + 1):
                v = w + (c,)
                if not oracle_is_zero(v):
                    nxt.append(v)
        layer = nxt
        seen = set()
        for v in layer:
            if v not in seen:
                cls = bfs_class(v)
                seen |= cls.members
                found.add(min(cls))
    return sorted(found)


def _brute_inversions(p) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def _brute_has_321(p) -> bool:
    k = len(p)
    return any(p[a] > p[b] > p[c]
               for a in range(k) for b in range(a + 1, k) for c in range(b + 1, k))


def oracle_321_triangle(n: int) -> DegreeDistribution:
    """Inversion histogram over 321-avoiding permutations of 1..n+1."""
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    degrees = [_brute_inversions(p) for p in permutations(range(1, n + 2))
               if not _brute_has_321(p)]
    return DegreeDistribution.from_degrees(n, degrees)
