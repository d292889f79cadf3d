"""
nil-Temperley-Lieb algebras of the path graphs P_n.

Normal forms of generator words, the monomial basis, and its correspondences
with Dyck paths and 321-avoiding permutations.
"""

from .words import (
    InvalidWord, RankMismatch, Word, Monomial, ZERO,
    commutes, is_zero, canonical_form, equivalent, parse_word, format_word,
)
from .runs import (
    RunPair, RunSequence, RunConstraintError, LengthExceedsPeak, PeaksNotIncreasing,
    ValleysNotIncreasing, PeakExceedsRank, validate, monomial_to_runs, runs_to_monomial,
)
from .dyck import (
    DyckPath, Hill, parse_path, peaks, runs_to_dyck, dyck_to_runs, peak_statistic,
    baseline_touches, multiplicity_via_geometry,
)
from .perm import (
    Not321Avoiding, monomial_to_permutation, inversions, is_321_avoiding,
    permutation_to_monomial,
)
from .enumeration import (
    DegreeDistribution, catalan, enumerate_basis, dimension, degree_distribution,
    dyck_statistic_distribution,
)

__version__ = "0.1.0"
