"""
Basis enumeration, dimensions and degree distributions.

The basis of P_n is generated from run sequences (depth-first over pairs that
keep peaks and valleys strictly increasing), never by searching word space.
The Dyck-side distribution walks ballot sequences directly so that the two
sides of the degree/peak-statistic identity share no code path.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .dyck import DyckPath, peak_statistic
from .runs import RunPair, RunSequence, runs_to_monomial
from .words import Monomial

__all__ = [
    "DegreeDistribution", "catalan", "run_sequences", "enumerate_basis",
    "dimension", "degree_distribution", "dyck_paths",
    "dyck_statistic_distribution", "triangle",
]


@dataclass(frozen=True)
class DegreeDistribution:
    rank: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @classmethod
    def from_degrees(cls, rank: int, degrees) -> "DegreeDistribution":
        hist = Counter(degrees)
        top = max(hist, default=0)
        return cls(rank, tuple(hist.get(d, 0) for d in range(top + 1)))


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"rank must be a nonnegative integer, got {n!r}")


def catalan(m: int) -> int:
    """C_m as the product over k = 2..m of (m + k) / k."""
    c = Fraction(1)
    for k in range(2, m + 1):
        c *= Fraction(m + k, k)
    assert c.denominator == 1
    return int(c)


def _extend(n: int, prefix: list[RunPair]) -> Iterator[tuple[RunPair, ...]]:
    yield tuple(prefix)
    last_peak = prefix[-1].peak if prefix else 0
    last_valley = prefix[-1].valley if prefix else 0
    for p in range(last_peak + 1, n + 1):
        # valley = p - r + 1 must exceed last_valley
        for r in range(1, min(p, p - last_valley) + 1):
            prefix.append(RunPair(p, r))
            yield from _extend(n, prefix)
            prefix.pop()


def run_sequences(n: int, first: Optional[RunPair] = None) -> Iterator[RunSequence]:
    """All valid run sequences of rank n (or those starting with `first`)."""
    _check_rank(n)
    if first is None:
        for pairs in _extend(n, []):
            yield RunSequence(pairs, n)
    else:
        for pairs in _extend(n, [first]):
            yield RunSequence(pairs, n)


def _branch(n: int, first: RunPair) -> list[Monomial]:
    return [runs_to_monomial(rs) for rs in run_sequences(n, first)]


def enumerate_basis(n: int, jobs: int = 1) -> list[Monomial]:
    """Basis monomials of P_n sorted lexicographically, unit first.

    With jobs > 1 the search is split on the first run pair across processes;
    output is identical to the serial run.

    >>> [m.letters for m in enumerate_basis(2)]
    [(), (1,), (1, 2), (2,), (2, 1)]
    """
    _check_rank(n)
    firsts = [RunPair(p, r) for p in range(1, n + 1) for r in range(1, p + 1)]
    basis = [Monomial((), n)]
    if jobs > 1 and firsts:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_branch, [n] * len(firsts), firsts):
                basis.extend(chunk)
    else:
        for first in firsts:
            basis.extend(_branch(n, first))
    return sorted(basis)


def dimension(n: int) -> int:
    return len(enumerate_basis(n))


def degree_distribution(n: int) -> DegreeDistribution:
    return DegreeDistribution.from_degrees(n, (m.degree for m in enumerate_basis(n)))


def dyck_paths(m: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength m, as ballot sequences."""
    steps = []

    def extend(ups, downs):
        if ups == downs == m:
            yield DyckPath(tuple(steps))
            return
        if ups < m:
            steps.append(1)
            yield from extend(ups + 1, downs)
            steps.pop()
        if downs < ups:
            steps.append(-1)
            yield from extend(ups, downs + 1)
            steps.pop()

    return extend(0, 0)


def dyck_statistic_distribution(n: int) -> DegreeDistribution:
    """Histogram of the peak statistic over all paths of semilength n + 1."""
    _check_rank(n)
    return DegreeDistribution.from_degrees(n, (peak_statistic(p) for p in dyck_paths(n + 1)))


def triangle(n_max: int) -> list[DegreeDistribution]:
    _check_rank(n_max)
    return [degree_distribution(n) for n in range(n_max + 1)]
