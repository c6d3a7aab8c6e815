from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rookharmonics.oracle import _kernels_py, linalg
from rookharmonics.oracle.linalg import ExactMatrix, IntEchelon, integer_rank, sparse_rank

try:
    from rookharmonics.oracle import _kernels as compiled
except ImportError:  # pragma: no cover - depends on the build
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")

matrices = st.integers(1, 7).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-4, 4), min_size=cols, max_size=cols), max_size=8)
)


def _fraction_rank(rows):
    """Textbook Gaussian elimination over Fraction, kept independent of the kernels."""
    a = [[Fraction(x) for x in row] for row in rows]
    rank, cols = 0, len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def _matmul(A, B):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*B)] for row in A]


@given(matrices)
def test_pure_echelon_rank(rows):
    ncols = len(rows[0]) if rows else 3
    ech = _kernels_py.Echelon(ncols)
    for row in rows:
        ech.insert(row)
    assert ech.rank == _fraction_rank(rows)
    for row in rows:
        assert ech.contains(row)


@needs_compiled
@given(matrices)
def test_compiled_matches_pure(rows):
    ncols = len(rows[0]) if rows else 3
    a, b = _kernels_py.Echelon(ncols), compiled.Echelon(ncols)
    for row in rows:
        assert a.insert(row) == b.insert(row)
    assert a.rank == b.rank
    assert list(a.pivots) == list(b.pivots)
    probe = [1] * ncols
    assert a.contains(probe) == b.contains(probe)


@needs_compiled
@given(st.integers(1, 6).flatmap(lambda k: st.lists(st.lists(st.integers(-5, 5), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_compiled_adjugate_matches_pure(M):
    try:
        expected = _kernels_py.adjugate(M)
    except ZeroDivisionError:
        with pytest.raises(ZeroDivisionError):
            compiled.adjugate(M)
        return
    assert compiled.adjugate(M) == expected


@given(st.integers(1, 6).flatmap(lambda k: st.lists(st.lists(st.integers(-5, 5), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_adjugate_identity(M):
    k = len(M)
    if _fraction_rank(M) < k:
        with pytest.raises(ZeroDivisionError):
            linalg.adjugate(M)
        return
    A, D = linalg.adjugate(M)
    assert D != 0
    assert _matmul(A, M) == [[D * (i == j) for j in range(k)] for i in range(k)]


def test_overflow_promotes_to_big_integers():
    big = 2**62
    rows = [[big, 1, 0], [1, big, 1], [3, 1, big]]
    ech = IntEchelon(3)
    for row in rows:
        ech.insert(row)
    assert ech.rank == 3
    assert ech.contains([1, 2, 3])
    assert ech.pivots == [0, 1, 2]


def test_echelon_length_check():
    with pytest.raises(ValueError):
        _kernels_py.Echelon(3).insert([1, 2])


def test_backend_is_reported():
    assert linalg.BACKEND in ("python", "cython")


@given(matrices)
def test_sparse_rank_matches_dense(rows):
    sparse = [{j: x for j, x in enumerate(row) if x} for row in rows]
    assert sparse_rank(sparse) == _fraction_rank(rows)
    if rows:
        assert integer_rank(rows, len(rows[0])) == _fraction_rank(rows)


class TestExactMatrix:
    def test_inverse_and_trace(self):
        M = ExactMatrix([[2, 1], [1, 1]])
        inv = M.inverse()
        assert inv.tolist() == [[1, -1], [-1, 2]]
        assert M @ inv == ExactMatrix.identity(2)
        assert M.trace() == 3

    def test_rational_entries(self):
        M = ExactMatrix([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
        assert M.inverse().tolist() == [[2, 0], [0, 3]]
        assert M.rank() == 2

    def test_solve(self):
        M = ExactMatrix([[1, 2], [2, 4]])
        x = M.solve([3, 6])
        assert M @ ExactMatrix([[v] for v in x]) == ExactMatrix([[3], [6]])
        with pytest.raises(ValueError):
            M.solve([1, 0])

    def test_shape_errors(self):
        with pytest.raises(ValueError):
            ExactMatrix([[1, 2], [3]])
        with pytest.raises(ValueError):
            ExactMatrix([[1, 2]]).trace()
        with pytest.raises(ZeroDivisionError):
            ExactMatrix([[1, 2], [2, 4]]).inverse()

    @given(st.integers(1, 5).flatmap(lambda k: st.lists(st.lists(st.integers(-3, 3), min_size=k, max_size=k), min_size=k, max_size=k)))
    def test_inverse_property(self, rows):
        M = ExactMatrix(rows)
        if M.rank() < M.rows:
            return
        assert M @ M.inverse() == ExactMatrix.identity(M.rows)
        assert M.transpose().transpose() == M
