import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcterm.partitions import (
    Partition,
    conjugate,
    contained_in,
    dominance_leq,
    is_horizontal_strip,
    partitions_of,
    stats,
)

parts = st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_conjugate_examples():
    assert conjugate((6, 4, 3, 1)) == (4, 3, 3, 2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((3,)) == (1, 1, 1)


def test_dominance_examples():
    assert dominance_leq((1, 1, 1), (3,))
    assert not dominance_leq((3,), (1, 1, 1))
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    with pytest.raises(ValueError):
        dominance_leq((1,), (2,))


def test_strips():
    assert is_horizontal_strip((6, 4, 3, 1), (5, 3, 1), 5)
    assert is_horizontal_strip((2, 1), (2, 1), 0)
    assert not is_horizontal_strip((2, 2), (1,), 3)


def test_stats():
    assert stats((2, 1)) == {"size": 3, "length": 2, "n_stat": 1, "z": 2}
    assert stats(()) == {"size": 0, "length": 0, "n_stat": 0, "z": 1}
    assert stats((1, 1, 1))["n_stat"] == 3
    assert stats((1, 1, 1))["z"] == 6


def test_validation():
    assert Partition([2, 1, 0]) == Partition([2, 1])
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@given(parts)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))))
def test_conjugation_reverses_dominance(pair):
    mu, lam = pair
    assert dominance_leq(mu, lam) == dominance_leq(conjugate(lam), conjugate(mu))


@given(parts, parts)
def test_strip_implies_containment(lam, mu):
    r = sum(lam) - sum(mu)
    if r >= 0 and is_horizontal_strip(lam, mu, r):
        assert contained_in(mu, lam)
        assert all(lam[i + 1] <= mu[i] for i in range(len(lam) - 1) if i < len(mu))
