from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from rookharmonics.formulas import (
    METHODS,
    grfrob,
    grfrob_bad,
    grfrob_good,
    grfrob_involution,
    grfrob_signed,
    grfrob_uz,
    hilbert,
    piece,
    rook_count,
)
from rookharmonics.symfunc import QPoly, mul_h, plethysm_h_h2, schur, schur2, sf, truncate, zero_double

Q = QPoly.monomial(1)
Q2 = QPoly.monomial(2)

SMALL = [(n, m, r) for n in range(1, 5) for m in range(1, 5) for r in range(min(n, m) + 1)]


def _swap(F, n, m):
    out = zero_double(m, n)
    for (a, b), v in F.items():
        out = out + schur2(b, a, v)
    return out


class TestExamples:
    def test_two_by_two_one(self):
        expected = schur2((2,), (2,)) + schur2((2,), (1, 1), Q) + schur2((1, 1), (2,), Q) + schur2((1, 1), (1, 1), Q)
        for method in METHODS:
            if method != "uz":
                assert grfrob(2, 2, 1, method) == expected

    def test_two_by_two_two(self):
        expected = schur2((2,), (2,)) + schur2((1, 1), (1, 1), Q)
        assert grfrob_signed(2, 2, 2) == expected
        assert grfrob_uz(2, 2, 2) == expected

    def test_three_by_three_two(self):
        s3, s21, s111 = (3,), (2, 1), (1, 1, 1)
        expected = (
            schur2(s3, s3)
            + schur2(s3, s21, Q) + schur2(s21, s3, Q) + schur2(s21, s21, Q)
            + schur2(s21, s21, Q2) + schur2(s21, s111, Q2) + schur2(s111, s21, Q2) + schur2(s111, s111, Q2)
        )
        assert grfrob_bad(3, 3, 2) == expected
        assert hilbert(expected) == QPoly.from_list([1, 8, 9])

    @pytest.mark.parametrize("n, m", [(1, 1), (3, 2), (4, 5)])
    def test_r_zero(self, n, m):
        for method in ("signed", "bad", "good"):
            assert grfrob(n, m, 0, method) == schur2((n,), (m,))

    def test_good_formula_grading(self):
        # mu = (1) inside lam1 = lam2 = (2) has width 3, hence exponent 0.
        assert piece(grfrob_good(2, 2, 1), 0) == schur2((2,), (2,))

    def test_errors(self):
        with pytest.raises(ValueError):
            grfrob_signed(2, 2, 3)
        with pytest.raises(ValueError):
            grfrob(2, 2, 1, "nope")
        with pytest.raises(ValueError):
            grfrob_involution(4, 1)


@pytest.mark.parametrize("n, m, r", SMALL)
def test_three_routes_agree(n, m, r):
    signed = grfrob_signed(n, m, r)
    assert grfrob_bad(n, m, r) == signed
    assert grfrob_good(n, m, r) == signed


@pytest.mark.parametrize("n, m, r", [(n, m, r) for n in range(1, 7) for m in range(1, 7) for r in range(min(n, m) + 1)])
def test_structural_laws(n, m, r):
    F = grfrob_signed(n, m, r)
    assert F.is_schur_positive()
    assert F.max_q_degree() <= r
    assert F.at_q_one() == sf(n, m, r)
    assert hilbert(F).at_one() == rook_count(n, m, r) == comb(n, r) * comb(m, r) * factorial(r)
    assert _swap(F, n, m) == grfrob_signed(m, n, r)


@pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 6) for m in range(1, 6)])
def test_truncation_chain(n, m):
    for r in range(min(n, m)):
        upper, lower = grfrob_signed(n, m, r), grfrob_signed(n, m, r + 1)
        for d in range(r + 1):
            assert lower.q_part(d) == truncate(upper.q_part(d), n + m - d - r - 1)


@pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 6) for m in range(1, 6)])
def test_upper_rook_collapses_to_sum(n, m):
    for r in range(min(n, m) + 1):
        F = grfrob_uz(n, m, r)
        total = zero_double(n, m)
        for s in range(r, min(n, m) + 1):
            total = total + sf(n, m, s)
        assert F.at_q_one() == total
        assert hilbert(F).at_one() == sum(rook_count(n, m, s) for s in range(r, min(n, m) + 1))


class TestInvolution:
    def test_examples(self):
        assert grfrob_involution(3, 1) == schur((3,)) + schur((2, 1), coeff=Q)
        assert grfrob_involution(4, 0) == schur((4,)) + schur((2, 2), coeff=Q)
        for n in range(1, 6):
            assert grfrob_involution(n, n) == schur((n,))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_collapse_to_permutation_module(self, n):
        for a in range(n % 2, n + 1, 2):
            k = (n - a) // 2
            F = grfrob_involution(n, a)
            assert F.is_schur_positive()
            # Ungraded: induced from the stabilizer S_2 wr S_k x S_a.
            assert F.at_q_one() == mul_h(plethysm_h_h2(k), a)
            assert hilbert(F).at_one() == factorial(n) // (factorial(a) * 2**k * factorial(k))


def test_hilbert_anchors():
    assert hilbert(grfrob_signed(2, 2, 1)) == QPoly.from_list([1, 3])
    assert str(hilbert(grfrob_signed(3, 3, 2))) == "1 + 8q + 9q^2"


@given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 7))
def test_rook_count(n, m, r):
    brute = 0 if r > min(n, m) else comb(n, r) * comb(m, r) * factorial(r)
    assert rook_count(n, m, r) == brute
