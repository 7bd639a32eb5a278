from itertools import product

import pytest
from hypothesis import given, strategies as st

from grassdeg.partitions import (
    Partition,
    SOWeight,
    dominates,
    enumerate_dominators,
    enumerate_weights,
    partitions_of,
    staircase,
)


def all_partitions(total, max_parts):
    """Brute force: every weakly decreasing tuple of the right size."""
    out = set()
    for parts in product(range(total + 1), repeat=max_parts):
        if sum(parts) == total and all(a >= b for a, b in zip(parts, parts[1:])):
            out.add(tuple(p for p in parts if p))
    return out


def naive_dominates(a, b):
    length = max(len(a), len(b))
    a = list(a) + [0] * (length - len(a))
    b = list(b) + [0] * (length - len(b))
    return sum(a) == sum(b) and all(sum(a[:i]) >= sum(b[:i]) for i in range(1, length + 1))


partition_st = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_trailing_zeros_ignored():
    assert Partition((2, 1, 0)) == Partition((2, 1))
    assert hash(Partition((2, 1, 0))) == hash(Partition((2, 1)))
    assert Partition((1, 0, 0)).length == 1
    assert Partition((2, 1)).padded(4) == (2, 1, 0, 0)
    assert len(Partition((2, 1)).padded(4)) == 4
    with pytest.raises(ValueError):
        Partition((1, 1, 1)).padded(2)


@pytest.mark.parametrize("total,parts", [(0, 3), (4, 2), (6, 3), (7, 7), (10, 4)])
def test_partitions_of_matches_brute_force(total, parts):
    got = [p.stripped() for p in partitions_of(total, max_parts=parts)]
    assert set(got) == all_partitions(total, parts)
    assert len(got) == len(set(got))
    assert got == sorted(got, reverse=True)


def test_staircase():
    assert staircase(1) == ()
    assert tuple(staircase(4)) == (3, 2, 1, 0)


@given(partition_st, partition_st)
def test_dominates_matches_prefix_sums(a, b):
    assert dominates(a, b) == naive_dominates(a, b)


@given(partition_st)
def test_dominance_reflexive(a):
    assert dominates(a, a)


@given(partition_st, partition_st)
def test_dominance_antisymmetric(a, b):
    if dominates(a, b) and dominates(b, a):
        assert a == b


@given(partition_st, partition_st, partition_st)
def test_dominance_transitive(a, b, c):
    if dominates(a, b) and dominates(b, c):
        assert dominates(a, c)


@pytest.mark.parametrize("k", range(1, 7))
def test_enumerate_dominators_brute_force(k):
    delta = tuple(range(k - 1, -1, -1))
    expected = sorted(
        (p for p in all_partitions(sum(delta), k) if naive_dominates(delta, p)), reverse=True
    )
    got = enumerate_dominators(k)
    assert [p.stripped() for p in got] == expected
    assert all(len(p) == k for p in got)


def test_enumerate_dominators_small():
    assert [tuple(p) for p in enumerate_dominators(3)] == [(2, 1, 0), (1, 1, 1)]
    assert [tuple(p) for p in enumerate_dominators(2)] == [(1, 0)]


@pytest.mark.parametrize("k", range(1, 7))
def test_dominators_are_a_lower_set(k):
    # descending lex order lists every partition after everything that dominates it
    got = enumerate_dominators(k)
    for i, a in enumerate(got):
        for b in got[i + 1 :]:
            assert not (dominates(b, a) and b != a)


def test_so_weight_validation():
    SOWeight((2, -2), 4)
    SOWeight((3, 1, 0), 7)
    with pytest.raises(ValueError):
        SOWeight((1, 2), 5)
    with pytest.raises(ValueError):
        SOWeight((1, -1), 5)
    with pytest.raises(ValueError):
        SOWeight((1, -2), 4)
    with pytest.raises(ValueError):
        SOWeight((1,), 4)
    assert SOWeight((2, -2)).norm == 4


def test_enumerate_weights_examples():
    assert [tuple(w) for w in enumerate_weights(2, 4, 1)] == [(0, 0), (2, 0)]
    assert [tuple(w) for w in enumerate_weights(1, 2, 2)] == [(0,), (2,), (-2,), (4,), (-4,)]
    assert [tuple(w) for w in enumerate_weights(1, 5, 2)] == [(0, 0), (2, 0), (4, 0)]
    assert [tuple(w) for w in enumerate_weights(2, 5, 2)] == [(0, 0), (2, 0), (4, 0), (2, 2)]


@given(st.integers(1, 4), st.integers(0, 4), st.integers(0, 5))
def test_enumerate_weights_properties(k, extra, dmax):
    n = 2 * k + extra
    ws = enumerate_weights(k, n, dmax)
    assert len(set(ws)) == len(ws)
    for w in ws:
        w.check(n)
        assert w.norm <= 2 * dmax
        assert all(c % 2 == 0 for c in w)
        assert all(c == 0 for c in w[k:])
    keys = [(w.norm, tuple(-c for c in w)) for w in ws]
    assert keys == sorted(keys)


def test_enumerate_weights_rejects_bad_input():
    with pytest.raises(ValueError):
        enumerate_weights(3, 5, 1)
    with pytest.raises(ValueError):
        enumerate_weights(1, 3, -1)
