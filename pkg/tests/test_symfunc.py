from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from rookharmonics.partitions import Partition, hook_length_dimension, partitions_of
from rookharmonics.symfunc import (
    DoublySchurExpansion,
    QPoly,
    SchurExpansion,
    coef_closed_form,
    coefficient,
    filtered_strip_pair_sum,
    first_part_equals,
    interchange_is_vacuous,
    mul_h,
    plethysm_h_h2,
    schur,
    schur2,
    schur_interchange_sides,
    schur_times_h,
    sf,
    sf_or_zero,
    tensor,
    truncate,
    verify_refinement,
    verify_schur_interchange,
    verify_schur_sum,
    zero_double,
)


def _dim(F):
    total = 0
    for key, poly in F.items():
        if isinstance(F, DoublySchurExpansion):
            total += poly.at_one() * hook_length_dimension(key[0]) * hook_length_dimension(key[1])
        else:
            total += poly.at_one() * hook_length_dimension(key)
    return total


class TestQPoly:
    def test_arithmetic(self):
        p = QPoly.from_list([1, 2])
        assert p * p == QPoly.from_list([1, 4, 4])
        assert p - p == QPoly()
        assert (p + 3).to_list() == [4, 2]
        assert p.shift(2) == QPoly({2: 1, 3: 2})
        assert p(2) == 5 and p.at_one() == 3

    def test_rendering(self):
        assert str(QPoly.from_list([1, 8, 9])) == "1 + 8q + 9q^2"
        assert str(QPoly()) == "0"

    @given(st.lists(st.integers(-5, 5), max_size=5), st.lists(st.integers(-5, 5), max_size=5), st.integers(-3, 3))
    def test_ring_laws(self, a, b, x):
        p, q = QPoly.from_list(a), QPoly.from_list(b)
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)
        assert p * q == q * p


class TestExpansions:
    def test_zero_terms_are_dropped(self):
        F = schur2((2,), (1, 1)) - schur2((2,), (1, 1))
        assert not F and len(F) == 0
        assert F == zero_double(2, 2)

    def test_render_canonical_order(self):
        F = schur2((1, 1), (2,)) + schur2((2,), (2,)) + schur2((2,), (1, 1), QPoly({1: 1}))
        assert F.render() == [
            "q^0  s[2]*s[2]  1",
            "q^1  s[2]*s[1,1]  1",
            "q^0  s[1,1]*s[2]  1",
        ]

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            schur2((2,), (2,)) + schur2((1,), (2,))

    def test_q_parts(self):
        F = schur2((2,), (2,)) + schur2((1, 1), (2,), QPoly.from_list([0, 2, 1]))
        assert F.q_part(1) == schur2((1, 1), (2,), 2)
        assert F.max_q_degree() == 2
        assert F.at_q_one() == schur2((2,), (2,)) + schur2((1, 1), (2,), 3)

    def test_positivity_and_dominance(self):
        F = schur2((2,), (2,), 2)
        G = schur2((2,), (2,))
        assert F.is_schur_positive() and F.dominates(G) and not G.dominates(F)
        assert not (G - F).is_schur_positive()


@given(partitions(7), st.integers(0, 4), st.integers(0, 4))
def test_h_products_commute(mu, j, k):
    F = schur(mu)
    assert mul_h(mul_h(F, j), k) == mul_h(mul_h(F, k), j)


@given(partitions(6), partitions(6), st.integers(0, 3), st.integers(0, 3))
def test_h_on_different_sides_commute(l1, l2, j, k):
    F = schur2(l1, l2)
    assert mul_h(mul_h(F, j, "left"), k, "right") == mul_h(mul_h(F, k, "right"), j, "left")


@given(partitions(7), st.integers(0, 4))
def test_pieri_dimension(mu, k):
    # dim(V^mu (x) trivial) induced up: f^mu * binom(|mu|+k, k).
    assert _dim(schur_times_h(mu, k)) == hook_length_dimension(mu) * comb(mu.size() + k, k)


@pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 6) for m in range(1, 6)])
def test_truncate_idempotent_and_monotone(n, m):
    F = sf(n, m, min(n, m)) + sf(n, m, 0).shift_q(1)
    for L in range(n + m + 1):
        for L2 in range(n + m + 1):
            assert truncate(truncate(F, L), L2) == truncate(F, min(L, L2))


def test_truncate_single():
    F = schur((3,)) + schur((2, 1))
    assert truncate(F, 2) == schur((2, 1))


def test_first_part_filter():
    F = sf(2, 2, 1)
    assert first_part_equals(F, 2, 2) == schur2((2,), (2,))


class TestSF:
    def test_small_values(self):
        assert sf(2, 2, 0) == schur2((2,), (2,))
        expected = sum(
            (schur2(a, b) for a in [(2,), (1, 1)] for b in [(2,), (1, 1)]), zero_double(2, 2)
        )
        assert sf(2, 2, 1) == expected

    @pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 7) for m in range(1, 7)])
    def test_dimension_is_rook_count(self, n, m):
        for d in range(min(n, m) + 1):
            assert _dim(sf(n, m, d)) == comb(n, d) * comb(m, d) * factorial(d)

    def test_domain(self):
        with pytest.raises(ValueError):
            sf(2, 2, 3)
        assert sf_or_zero(2, 2, -1) == zero_double(2, 2)

    def test_sf_is_schur_positive_and_symmetric(self):
        for n, m in [(3, 4), (4, 4)]:
            for d in range(min(n, m) + 1):
                F = sf(n, m, d)
                assert F.is_schur_positive()
                swapped = DoublySchurExpansion({(b, a): v for (a, b), v in sf(m, n, d).items()}, degrees=(n, m))
                assert swapped == F


class TestPlethysm:
    def test_small(self):
        assert plethysm_h_h2(2) == schur((4,)) + schur((2, 2))
        assert plethysm_h_h2(0) == schur(())

    @pytest.mark.parametrize("d", range(6))
    def test_dimension_counts_perfect_matchings(self, d):
        # h_d[h_2] is the permutation module on perfect matchings of [2d].
        assert _dim(plethysm_h_h2(d)) == factorial(2 * d) // (2**d * factorial(d))


class TestCoefficientFormula:
    def test_example(self):
        assert coef_closed_form(1, 1, 1, 2, 2, (2,), (2,)) == 1

    def test_size_precondition(self):
        with pytest.raises(ValueError):
            coef_closed_form(1, 1, 1, 2, 2, (3,), (2,))

    @pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 7) for m in range(1, 7)])
    def test_matches_brute_force_on_sf(self, n, m):
        for d in range(min(n, m) + 1):
            F = sf(n, m, d)
            for lam1 in partitions_of(n):
                for lam2 in partitions_of(m):
                    brute = coefficient(F, lam1, lam2).coefficient(0)
                    assert coef_closed_form(d, n - d, m - d, lam1.first, lam2.first, lam1, lam2) == brute

    @pytest.mark.parametrize("d, a, b", list(product(range(4), repeat=3)))
    def test_matches_brute_force_with_filter(self, d, a, b):
        for p in range(a + d + 1):
            for q in range(b + d + 1):
                F = filtered_strip_pair_sum(d, a, b, p, q)
                for lam1 in partitions_of(a + d):
                    for lam2 in partitions_of(b + d):
                        assert coef_closed_form(d, a, b, p, q, lam1, lam2) == coefficient(F, lam1, lam2).coefficient(0)


class TestIdentities:
    def test_interchange_example(self):
        assert verify_schur_interchange(1, 1, 1, 2, 2)
        lhs, rhs = schur_interchange_sides(1, 1, 1, 2, 2)
        assert lhs == rhs == schur2((2,), (2,))

    @pytest.mark.parametrize("d", range(5))
    def test_interchange_grid(self, d):
        for a, b, p, q in product(range(5), repeat=4):
            assert verify_schur_interchange(d, a, b, p, q), (d, a, b, p, q)

    def test_vacuous_cases_have_zero_left_side(self):
        # Reading h with a negative index as 0, both sides vanish.
        for d, a, b, p, q in product(range(4), repeat=5):
            if interchange_is_vacuous(d, a, b, p, q):
                lhs, rhs = schur_interchange_sides(d, a, b, p, q)
                assert not lhs and not rhs, (d, a, b, p, q)

    def test_interchange_rejects_negative(self):
        with pytest.raises(ValueError):
            verify_schur_interchange(-1, 0, 0, 0, 0)

    @pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 8) for m in range(1, 8)])
    def test_refinement_and_sum(self, n, m):
        assert verify_schur_sum(n, m)
        for r in range(min(n, m) + 1):
            assert verify_refinement(n, m, r)

    def test_refinement_by_hand(self):
        # SF_1 = {SF_0}_{<=3} + {SF_1 - SF_0}_{<=2} for n = m = 2.
        lhs = truncate(sf(2, 2, 0), 3) + truncate(sf(2, 2, 1) - sf(2, 2, 0), 2)
        assert lhs == sf(2, 2, 1)
        assert verify_refinement(2, 2, 1)


def test_tensor():
    assert tensor(schur((2,)), schur((1,))) == schur2((2,), (1,))
    assert isinstance(schur((1,)), SchurExpansion)
