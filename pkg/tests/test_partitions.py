from math import comb

import pytest
from hypothesis import given, strategies as st

from schubert.partitions import (InvalidArguments, Partition, add_ones, enumerate_partitions,
                                 hook_indices, partition_from_indices, partitions_of, pieri_interlace)


def test_trailing_zeros_trimmed():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition((0,)) == Partition() == ()
    assert Partition((3, 1)).weight == 4 and Partition((3, 1)).length == 2


@pytest.mark.parametrize("bad", [(1, 2), (2, -1)])
def test_rejects_bad_parts(bad):
    with pytest.raises(InvalidArguments):
        Partition(bad)


def test_enumerate_p24_order():
    assert enumerate_partitions(2, 4) == [(), (1,), (1, 1), (2,), (2, 1), (2, 2)]


@pytest.mark.parametrize("r,n", [(0, 0), (1, 5), (2, 5), (3, 6), (4, 8)])
def test_enumerate_counts(r, n):
    parts = enumerate_partitions(r, n)
    assert len(parts) == comb(n, r)
    assert all(len(p) <= r and (not p or p[0] <= n - r) for p in parts)


def test_enumerate_rejects_n_below_r():
    with pytest.raises(InvalidArguments):
        enumerate_partitions(3, 2)


def test_hook_indices_examples():
    assert hook_indices((2, 2), 2) == (2, 3)
    assert hook_indices((), 3) == (0, 1, 2)
    assert hook_indices((2, 1), 2) == (1, 3)


@given(st.lists(st.integers(0, 5), max_size=4).map(lambda xs: sorted(xs, reverse=True)), st.integers(0, 3))
def test_indices_roundtrip(parts, extra):
    lam = Partition(parts)
    r = len(parts) + extra
    back, rr = partition_from_indices(hook_indices(lam, r))
    assert back == lam and rr == r


def test_add_ones():
    assert add_ones((2, 1), 2, 1) == (3, 2)
    assert add_ones((2, 1), 2, -1) == (1,)
    assert add_ones((2,), 2, -1) is None


def test_pieri_interlace():
    assert pieri_interlace((1,), (2, 1), 2)
    assert not pieri_interlace((1, 1), (2,), 2)
    assert pieri_interlace((), (3,), 2)
    assert not pieri_interlace((), (1, 1), 2)


def test_partitions_of_counts():
    assert [len(partitions_of(w)) for w in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
