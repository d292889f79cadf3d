"""
Run encoding of basis monomials.

A basis monomial splits into maximal decreasing runs p, p-1, ..., p-r+1. Each
run is recorded as a pair (peak, length); its valley is peak - length + 1.
A sequence of pairs encodes a basis monomial exactly when

  * 1 <= length <= peak <= rank,
  * peaks strictly increase,
  * valleys strictly increase.

>>> rs = validate([(3, 3), (4, 2)], 4)
>>> str(runs_to_monomial(rs))
'3 2 1 4 3'
"""

import json
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .words import Monomial

__all__ = [
    "RunPair", "RunSequence", "RunConstraintError", "LengthExceedsPeak",
    "PeaksNotIncreasing", "ValleysNotIncreasing", "PeakExceedsRank",
    "validate", "monomial_to_runs", "runs_to_monomial",
    "parse_runs", "format_runs", "runs_to_json", "runs_from_json",
]


class RunConstraintError(ValueError):
    """A pair sequence does not encode a basis monomial.

    `position` is the index of the offending pair.
    """

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class LengthExceedsPeak(RunConstraintError):
    pass


class PeaksNotIncreasing(RunConstraintError):
    pass


class ValleysNotIncreasing(RunConstraintError):
    pass


class PeakExceedsRank(RunConstraintError):
    pass


class RunPair(NamedTuple):
    peak: int
    length: int

    @property
    def valley(self) -> int:
        return self.peak - self.length + 1

    def letters(self) -> range:
        return range(self.peak, self.valley - 1, -1)


@dataclass(frozen=True)
class RunSequence:
    pairs: tuple[RunPair, ...]
    rank: int

    @property
    def degree(self) -> int:
        return sum(pair.length for pair in self.pairs)

    @property
    def peaks(self) -> tuple[int, ...]:
        return tuple(pair.peak for pair in self.pairs)

    @property
    def valleys(self) -> tuple[int, ...]:
        return tuple(pair.valley for pair in self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __str__(self):
        return format_runs(self)


def validate(pairs: Iterable[tuple[int, int]], rank: int) -> RunSequence:
    """Check the run constraints and return a RunSequence.

    The first violated constraint, scanning pairs left to right, is raised.

    >>> validate([(2, 2), (3, 3)], 3)
    Traceback (most recent call last):
        ...
    niltl.runs.ValleysNotIncreasing: pair 1: valley 1 does not exceed previous valley 1
    """
    if rank < 0:
        raise ValueError(f"rank must be nonnegative, got {rank}")
    checked = []
    for pos, (p, r) in enumerate(pairs):
        pair = RunPair(int(p), int(r))
        if pair.length < 1:
            raise RunConstraintError(f"pair {pos}: run length {pair.length} is not positive", pos)
        if pair.length > pair.peak:
            raise LengthExceedsPeak(
                f"pair {pos}: run length {pair.length} exceeds peak {pair.peak}", pos)
        if pair.peak > rank:
            raise PeakExceedsRank(f"pair {pos}: peak {pair.peak} exceeds rank {rank}", pos)
        if checked:
            prev = checked[-1]
            if pair.peak <= prev.peak:
                raise PeaksNotIncreasing(
                    f"pair {pos}: peak {pair.peak} does not exceed previous peak {prev.peak}", pos)
            if pair.valley <= prev.valley:
                raise ValleysNotIncreasing(
                    f"pair {pos}: valley {pair.valley} does not exceed previous valley {prev.valley}",
                    pos)
        checked.append(pair)
    return RunSequence(tuple(checked), rank)


def monomial_to_runs(m: Monomial) -> RunSequence:
    """Split a basis monomial into its maximal decreasing runs."""
    pairs = []
    peak = prev = None
    for c in m.letters:
        if prev is not None and c == prev - 1:
            prev = c
            continue
        if peak is not None:
            pairs.append(RunPair(peak, peak - prev + 1))
        peak = prev = c
    if peak is not None:
        pairs.append(RunPair(peak, peak - prev + 1))
    return RunSequence(tuple(pairs), m.rank)


def runs_to_monomial(rs: RunSequence) -> Monomial:
    letters = [c for pair in rs.pairs for c in pair.letters()]
    return Monomial(tuple(letters), rs.rank)


_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_runs(text: str, rank: int) -> RunSequence:
    """Parse "(3,3)(4,2)" and validate it."""
    s = text.strip()
    if _PAIR.sub("", s).strip():
        raise ValueError(f"cannot parse run sequence {text!r}")
    return validate([(int(p), int(r)) for p, r in _PAIR.findall(s)], rank)


def format_runs(rs: RunSequence) -> str:
    return "".join(f"({p},{r})" for p, r in rs.pairs)


def runs_to_json(rs: RunSequence) -> str:
    return json.dumps([list(pair) for pair in rs.pairs])


def runs_from_json(text: str, rank: int) -> RunSequence:
    return validate([tuple(pair) for pair in json.loads(text)], rank)
