from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from rookharmonics.partitions import (
    EMPTY,
    Partition,
    cells,
    contains,
    even_partitions,
    format_partition,
    hook_length_dimension,
    is_horizontal_strip,
    parse_partition,
    partitions_of,
    pieri_h,
)

# Partition numbers p(0..12), OEIS A000041.
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


@pytest.mark.parametrize("n", range(13))
def test_partition_counts(n):
    assert len(partitions_of(n)) == PARTITION_COUNTS[n]


@pytest.mark.parametrize("n", range(9))
def test_enumeration_is_reverse_lex_and_distinct(n):
    ps = partitions_of(n)
    assert ps == sorted(ps, reverse=True)
    assert len(set(ps)) == len(ps)
    assert all(p.size() == n for p in ps)


def test_small_enumeration():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(0) == [EMPTY]


def test_normal_form():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert hash(Partition((3, 0))) == hash(Partition((3,)))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


@pytest.mark.parametrize("text, parts", [("[3,2,1]", (3, 2, 1)), ("[]", ()), ("4, 4", (4, 4)), ("(2,1)", (2, 1))])
def test_parse(text, parts):
    assert parse_partition(text) == Partition(parts)


@given(partitions(12))
def test_format_parse_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam
    assert str(lam) == format_partition(lam)


@given(partitions(12))
def test_conjugate_is_involution(lam):
    conj = lam.conjugate()
    assert conj.conjugate() == lam
    assert conj.size() == lam.size()
    assert {(j, i) for i, j in cells(lam)} == cells(conj)


def _strip_by_columns(inner, outer):
    """Column-by-column definition: at most one skew cell in each column."""
    skew = cells(outer) - cells(inner)
    cols = [j for _, j in skew]
    return len(cols) == len(set(cols))


@pytest.mark.parametrize("n", range(11))
def test_horizontal_strip_matches_cell_definition(n):
    for outer in partitions_of(n):
        for k in range(n + 1):
            for inner in partitions_of(n - k):
                expected = contains(inner, outer) and _strip_by_columns(inner, outer)
                assert is_horizontal_strip(inner, outer) == expected, (inner, outer)


@given(partitions(9), st.integers(0, 5))
def test_pieri_is_exactly_the_strip_extensions(mu, k):
    expected = [lam for lam in partitions_of(mu.size() + k) if is_horizontal_strip(mu, lam)]
    assert pieri_h(mu, k) == expected


def test_pieri_example():
    assert pieri_h((1,), 2) == [(3,), (2, 1)]
    with pytest.raises(ValueError):
        pieri_h((1,), -1)


@pytest.mark.parametrize("n", range(1, 9))
def test_dimensions_square_sum_to_factorial(n):
    assert sum(hook_length_dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("lam, dim", [((3, 2), 5), ((2, 2), 2), ((3, 1, 1), 6), ((), 1)])
def test_dimension_values(lam, dim):
    assert hook_length_dimension(lam) == dim


def test_even_partitions():
    assert even_partitions(4) == [(4,), (2, 2)]
    assert even_partitions(5) == []
    assert all(all(p % 2 == 0 for p in lam) for lam in even_partitions(10))
