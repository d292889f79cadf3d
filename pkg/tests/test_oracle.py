from collections import Counter

import pytest

from niltl.enumeration import DegreeDistribution
from niltl.oracle import (
    CapExceeded, bfs_class, oracle_321_triangle, oracle_basis, oracle_is_zero,
)


def test_bfs_class_examples():
    assert bfs_class((1, 3)).members == {(1, 3), (3, 1)}
    assert bfs_class((1, 2)).members == {(1, 2)}
    assert bfs_class((3, 1, 2)).members == {(3, 1, 2), (1, 3, 2)}
    assert bfs_class(()).members == {()}
    assert bfs_class((1, 3)).representative == (1, 3)


def test_class_invariants():
    w = (1, 3, 5, 2, 4, 1)
    cls = bfs_class(w)
    for v in cls:
        assert Counter(v) == Counter(w)
        for i in range(len(v) - 1):
            if abs(v[i] - v[i + 1]) > 1:
                assert v[:i] + (v[i + 1], v[i]) + v[i + 2:] in cls


def test_oracle_is_zero_examples():
    assert oracle_is_zero((3, 1, 2, 1))
    assert not oracle_is_zero((2, 1, 3, 2))
    assert oracle_is_zero((1, 1))
    assert not oracle_is_zero(())


def test_caps():
    with pytest.raises(CapExceeded):
        bfs_class(tuple(range(1, 14)), max_length=12)
    with pytest.raises(CapExceeded):
        bfs_class((1, 3, 5, 7, 9, 11), max_members=100)


def test_oracle_basis():
    assert oracle_basis(0) == [()]
    assert oracle_basis(1) == [(), (1,)]
    assert oracle_basis(2) == [(), (1,), (1, 2), (2,), (2, 1)]
    assert len(oracle_basis(3)) == 14
    assert oracle_basis(3, max_len=1) == [(), (1,), (2,), (3,)]


@pytest.mark.parametrize("n, counts", [(0, (1,)), (1, (1, 1)), (3, (1, 3, 5, 4, 1))])
def test_oracle_321_triangle(n, counts):
    assert oracle_321_triangle(n) == DegreeDistribution(n, counts)
