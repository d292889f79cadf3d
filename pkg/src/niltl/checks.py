"""
Cross-checks behind `niltl verify`.

Each check yields a `CheckResult`; a failing result carries the first
counterexample found.
"""

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from . import dyck, enumeration, oracle, perm, runs, words

__all__ = ["CheckResult", "run_checks", "ORACLE_MAX_RANK", "PERM_MAX_RANK"]

ORACLE_MAX_RANK = 5
PERM_MAX_RANK = 7


@dataclass
class CheckResult:
    name: str
    rank: int
    ok: bool
    detail: str = ""

    def __str__(self):
        status = "ok" if self.ok else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"[{status}] P_{self.rank} {self.name}{tail}"


def _first_failure(items, predicate: Callable) -> str:
    for item in items:
        msg = predicate(item)
        if msg:
            return msg
    return ""


def _catalan(n, basis):
    got, want = len(basis), enumeration.catalan(n + 1)
    return "" if got == want else f"dimension {got} != Catalan({n + 1}) = {want}"


def _normal_forms(n, basis):
    def bad(m):
        rs = runs.monomial_to_runs(m)
        if words.canonical_form(m.word) != m:
            return f"{m} is not its own canonical form"
        if runs.runs_to_monomial(runs.validate(rs.pairs, n)) != m:
            return f"run round trip fails for {m}"
        return ""
    return _first_failure(basis, bad)


def _dyck_bijection(n, basis):
    def bad_monomial(m):
        rs = runs.monomial_to_runs(m)
        if dyck.dyck_to_runs(dyck.runs_to_dyck(rs)) != rs:
            return f"runs -> path -> runs fails for {m}"
        return ""

    def bad_path(path):
        if dyck.runs_to_dyck(dyck.dyck_to_runs(path)) != path:
            return f"path -> runs -> path fails for {path}"
        return ""
    return (_first_failure(basis, bad_monomial)
            or _first_failure(enumeration.dyck_paths(n + 1), bad_path))


def _peak_statistic(n, basis):
    def bad(m):
        stat = dyck.peak_statistic(dyck.runs_to_dyck(runs.monomial_to_runs(m)))
        return "" if stat == m.degree else f"{m}: degree {m.degree} != peak statistic {stat}"
    msg = _first_failure(basis, bad)
    if msg:
        return msg
    alg = enumeration.DegreeDistribution.from_degrees(n, (m.degree for m in basis))
    paths = enumeration.dyck_statistic_distribution(n)
    return "" if alg == paths else f"degree distribution {alg.counts} != path side {paths.counts}"


def _permutations(n, basis):
    images = {}
    for m in basis:
        p = perm.monomial_to_permutation(m)
        if p in images:
            return f"{m} and {images[p]} share the permutation {perm.format_permutation(p)}"
        images[p] = m
        if not perm.is_321_avoiding(p):
            return f"image of {m} contains 321"
        if perm.inversions(p) != m.degree:
            return f"{m}: inversions {perm.inversions(p)} != degree {m.degree}"
        if perm.permutation_to_monomial(p) != m:
            return f"permutation round trip fails for {m}"
    if n <= PERM_MAX_RANK:
        tri = oracle.oracle_321_triangle(n)
        alg = enumeration.DegreeDistribution.from_degrees(n, (m.degree for m in basis))
        if tri != alg:
            return f"321-avoiding inversion counts {tri.counts} != {alg.counts}"
    return ""


def _lemmas(n, basis):
    def bad(m):
        present = sorted(set(m.letters))
        for j, i in enumerate(present):
            mult = m.count(i)
            if mult > j + 1 or mult > len(present) - j:
                return f"{m}: x_{i} occurs {mult} times, over the rank bound"
        rs = runs.monomial_to_runs(m)
        path = dyck.runs_to_dyck(rs)
        for x in dyck.baseline_touches(path):
            if x % 2 or m.count(x // 2):
                return f"{m}: path touches baseline at x={x} but x_{x // 2} is present"
        for k in range(1, n + 1):
            geo = dyck.multiplicity_via_geometry(rs, k)
            if geo != m.count(k):
                return f"{m}: geometry counts {geo} copies of x_{k}, word has {m.count(k)}"
        return ""
    return _first_failure(basis, bad)


def _oracle_zero(n, basis, max_length):
    for length in range(max_length + 1):
        for w in product(range(1, n + 1), repeat=length):
            if words.is_zero(words.Word(w, n)) != oracle.oracle_is_zero(w):
                return f"is_zero disagrees with the oracle on {words.format_word(w)}"
    return ""


def _oracle_basis(n, basis):
    ref = oracle.oracle_basis(n)
    got = [m.letters for m in basis]
    return "" if ref == got else f"oracle basis has {len(ref)} words, enumeration {len(got)}"


def run_checks(n: int, with_oracle: bool = False,
               oracle_length: int = 7) -> Iterator[CheckResult]:
    """Run every check for ranks 0..n in turn."""
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    for rank in range(n + 1):
        basis = enumeration.enumerate_basis(rank)
        suite = [
            ("catalan", _catalan),
            ("normal forms and runs", _normal_forms),
            ("dyck bijection", _dyck_bijection),
            ("peak statistic", _peak_statistic),
            ("permutations", _permutations),
            ("multiplicity and baseline lemmas", _lemmas),
        ]
        if with_oracle and rank <= ORACLE_MAX_RANK:
            suite.append((f"oracle zero test (length <= {oracle_length})",
                          lambda r, b: _oracle_zero(r, b, oracle_length)))
            suite.append(("oracle basis", _oracle_basis))
        for name, check in suite:
            msg = check(rank, basis)
            yield CheckResult(name, rank, not msg, msg)
