from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from rookharmonics.loci import permutation_of_cycle_type
from rookharmonics.oracle.characters import (
    CharacterError,
    character_of,
    class_size,
    class_table,
    frobenius_from_character,
    inner_product,
    mn_character,
    z_lambda,
)
from rookharmonics.partitions import hook_length_dimension, partitions_of
from rookharmonics.symfunc import QPoly, SchurExpansion, schur, schur2


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality(n):
    ps = partitions_of(n)
    for a in ps:
        for b in ps:
            total = sum(mn_character(lam, a) * mn_character(lam, b) for lam in ps)
            assert total == (z_lambda(a) if a == b else 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_row_orthogonality(n):
    table = class_table(n)
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            chi = {c: mn_character(lam, c) for c in table.labels()}
            psi = {c: mn_character(mu, c) for c in table.labels()}
            assert inner_product(chi, psi, n) == (1 if lam == mu else 0)


@given(partitions(9, min_size=1))
def test_degree_is_hook_dimension(lam):
    assert mn_character(lam, (1,) * lam.size()) == hook_length_dimension(lam)


@pytest.mark.parametrize(
    "lam, cls, value",
    [((2, 1), (3,), -1), ((2, 1), (2, 1), 0), ((1, 1, 1), (2, 1), -1), ((3, 1), (2, 2), -1), ((2, 2), (3, 1), -1), ((2, 2), (2, 2), 2)],
)
def test_known_values(lam, cls, value):
    assert mn_character(lam, cls) == value


def test_sign_and_trivial():
    for n in range(1, 7):
        for c in partitions_of(n):
            assert mn_character((n,), c) == 1
            assert mn_character((1,) * n, c) == (-1) ** (n - len(c))


def test_class_sizes_sum_to_group_order():
    for n in range(1, 8):
        assert sum(class_size(c) for c in partitions_of(n)) == class_table(n).order
    assert class_table(2, 3).order == 12


def _permutation_character(n):
    """Trace of each class on C^n (number of fixed points), computed on actual permutations."""
    return {c: sum(1 for i, x in enumerate(permutation_of_cycle_type(c), start=1) if i == x) for c in partitions_of(n)}


def test_defining_representation():
    assert frobenius_from_character(_permutation_character(4), 4) == schur((4,)) + schur((3, 1))


def test_regular_representation():
    for n in range(1, 6):
        chi = {c: (class_table(n).order if all(p == 1 for p in c) else 0) for c in partitions_of(n)}
        expected = SchurExpansion({lam: hook_length_dimension(lam) for lam in partitions_of(n)}, degrees=(n,))
        assert frobenius_from_character(chi, n) == expected


def test_counting_fixed_points_on_small_group():
    # Brute-force the permutation character of S_3 on C^3 over all 6 elements.
    for g in permutations(range(1, 4)):
        fixed = sum(1 for i, x in enumerate(g, start=1) if i == x)
        lengths = []
        seen = set()
        for s in range(1, 4):
            if s not in seen:
                k, x = 0, s
                while x not in seen:
                    seen.add(x)
                    x = g[x - 1]
                    k += 1
                lengths.append(k)
        assert _permutation_character(3)[tuple(sorted(lengths, reverse=True))] == fixed


def test_round_trip_two_factors():
    F = schur2((2, 1), (2,), 3) + schur2((1, 1, 1), (1, 1))
    chi = character_of(F)
    assert frobenius_from_character(chi, 3, 2) == F


def test_q_power_selection():
    F = schur2((2,), (2,)) + schur2((1, 1), (2,), QPoly.monomial(1))
    assert frobenius_from_character(character_of(F, q_power=1), 2, 2) == schur2((1, 1), (2,))


def test_rejects_non_characters():
    with pytest.raises(CharacterError):
        frobenius_from_character({c: Fraction(1, 2) if c == (2,) else 0 for c in partitions_of(2)}, 2)
    with pytest.raises(CharacterError):
        frobenius_from_character({(2,): -1, (1, 1): -1}, 2)
    virtual = frobenius_from_character({(2,): -1, (1, 1): -1}, 2, require_genuine=False)
    assert virtual == schur((2,), coeff=-1)
    with pytest.raises(CharacterError):
        frobenius_from_character({(2,): 1}, 2)


def test_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2,), (1,))
