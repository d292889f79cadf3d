"""
Dyck paths and their correspondence with run sequences.

Paths are drawn as mountain ranges: an up step goes from (x, y) to
(x+1, y+1), a down step to (x+1, y-1). The basis of the algebra of P_n is in
bijection with paths of semilength n + 1.

A peak with apex (a, b) and b >= 2 corresponds to the run pair

    peak   = (a + b - 2) / 2
    length = b - 1

and conversely a pair (p, r) gives the apex (2p - r + 1, r + 1). Peaks of
height one carry no letters.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .runs import RunSequence, validate

__all__ = [
    "InvalidPath", "DyckPath", "Hill", "parse_path", "heights", "peaks",
    "runs_to_dyck", "dyck_to_runs", "peak_statistic", "baseline_touches",
    "hill_for", "multiplicity_via_geometry", "render_ascii",
]

UP, DOWN = 1, -1


class InvalidPath(ValueError):
    pass


@dataclass(frozen=True)
class DyckPath:
    steps: tuple[int, ...]

    def __post_init__(self):
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        height = 0
        for pos, s in enumerate(steps):
            if s not in (UP, DOWN):
                raise InvalidPath(f"step {pos} is {s!r}, expected +1 or -1")
            height += s
            if height < 0:
                raise InvalidPath(f"path goes below the baseline after step {pos + 1}")
        if height:
            raise InvalidPath(f"path ends at height {height}, not on the baseline")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    @property
    def rank(self) -> int:
        """Rank n of the path graph whose basis this path belongs to."""
        return self.semilength - 1

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return "".join("U" if s == UP else "D" for s in self.steps)


class Hill(NamedTuple):
    """Apex of a peak: x-coordinate and height."""
    x: int
    height: int


_STEP_CHARS = {"U": UP, "D": DOWN, "(": UP, ")": DOWN, "1": UP, "0": DOWN,
               "N": UP, "E": DOWN}


def parse_path(text: str) -> DyckPath:
    """Accepts U/D, parentheses, or 1/0 step strings."""
    s = re.sub(r"[\s,]", "", text.upper())
    try:
        return DyckPath(tuple(_STEP_CHARS[ch] for ch in s))
    except KeyError as e:
        raise InvalidPath(f"unexpected character {e.args[0]!r} in path {text!r}") from None


def heights(path: DyckPath) -> list[int]:
    """Heights at x = 0, 1, ..., 2m."""
    h = [0]
    for s in path.steps:
        h.append(h[-1] + s)
    return h


def peaks(path: DyckPath) -> list[Hill]:
    """All apexes (up step immediately followed by a down step), left to right.

    >>> peaks(parse_path("UUUDUDDD"))
    [Hill(x=3, height=3), Hill(x=5, height=3)]
    """
    h = heights(path)
    st = path.steps
    return [Hill(x + 1, h[x + 1]) for x in range(len(st) - 1)
            if st[x] == UP and st[x + 1] == DOWN]


def hill_for(p: int, r: int) -> Hill:
    return Hill(2 * p - r + 1, r + 1)


def runs_to_dyck(rs: RunSequence) -> DyckPath:
    """
    Superimpose the triangles of the hills for each pair, take the upper
    envelope, and tile the stretches lying on the baseline with unit hills.
    """
    width = 2 * (rs.rank + 1)
    hills = [hill_for(p, r) for p, r in rs.pairs]
    envelope = [max([0] + [b - abs(x - a) for a, b in hills]) for x in range(width + 1)]
    steps = []
    x = 0
    while x < width:
        d = envelope[x + 1] - envelope[x]
        if d:
            steps.append(d)
            x += 1
            continue
        # zero slope only happens on the baseline, starting at an even x
        assert envelope[x] == 0 and x % 2 == 0 and envelope[x + 2] == 0, (rs, x)
        steps.extend((UP, DOWN))
        x += 2
    path = DyckPath(tuple(steps))
    assert [tuple(hl) for hl in peaks(path) if hl.height > 1] == [tuple(hl) for hl in hills], rs
    return path


def dyck_to_runs(path: DyckPath) -> RunSequence:
    """Read off one run pair per peak of height at least two.

    >>> str(dyck_to_runs(parse_path("UUUUDDDD")))
    '(3,3)'
    """
    pairs = [((a + b - 2) // 2, b - 1) for a, b in peaks(path) if b >= 2]
    return validate(pairs, path.rank)


def peak_statistic(path: DyckPath) -> int:
    """Sum of peak heights minus the number of peaks."""
    return sum(b - 1 for _, b in peaks(path))


def baseline_touches(path: DyckPath) -> list[int]:
    """Interior x-coordinates where the path meets the baseline."""
    h = heights(path)
    return [x for x in range(1, len(h) - 1) if h[x] == 0]


def multiplicity_via_geometry(rs: RunSequence, k: int) -> int:
    """
    Count crossings of the line x + y = 2k with the left sides of the extended
    hills of `rs`, leaving out points on the baseline and the apexes.
    """
    if not 1 <= k <= rs.rank:
        raise ValueError(f"generator index {k} outside 1..{rs.rank}")
    count = 0
    for a, b in (hill_for(p, r) for p, r in rs.pairs):
        # left side: y = x - (a - b), for a - b <= x <= a
        foot = a - b
        x = Fraction(2 * k + foot, 2)
        y = 2 * k - x
        if foot <= x <= a and 0 < y < b:
            count += 1
    return count


def render_ascii(path: DyckPath) -> str:
    """Mountain-range drawing with / and \\."""
    h = heights(path)
    top = max(h)
    rows = [[" "] * len(path.steps) for _ in range(top)]
    for x, s in enumerate(path.steps):
        level = h[x] if s == UP else h[x] - 1
        rows[top - 1 - level][x] = "/" if s == UP else "\\"
    return "\n".join("".join(row).rstrip() for row in rows)
