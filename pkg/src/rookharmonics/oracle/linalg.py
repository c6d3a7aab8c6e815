"""Exact linear algebra over the rationals.

The oracle only ever needs three things: the rank of a growing set of integer
rows, membership of a vector in their span, and the inverse of a square
integer matrix (returned as an adjugate and a scalar).  These go through the
kernels in :mod:`._kernels` when the compiled extension is importable and
through :mod:`._kernels_py` otherwise.  Setting ``ROOKHARMONICS_PURE=1`` in the
environment forces the pure-Python kernels.

:class:`ExactMatrix` is a small dense matrix of :class:`fractions.Fraction`
for general use and for tests.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from . import _kernels_py

Rational = Fraction


def _load_compiled():
    if os.environ.get("ROOKHARMONICS_PURE", "") not in ("", "0"):
        return None
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _kernels


_compiled = _load_compiled()
kernels = _compiled if _compiled is not None else _kernels_py
BACKEND: str = kernels.BACKEND


class IntEchelon:
    """Incremental echelon form of integer rows with automatic big-integer fallback.

    The compiled kernel works in 64-bit arithmetic.  If a row overflows, the
    rows accepted so far are replayed into the arbitrary-precision kernel and
    work continues there; the pivot columns come out the same either way.
    """

    def __init__(self, ncols: int, backend=None) -> None:
        self.ncols = ncols
        self._impl = (backend or kernels).Echelon(ncols)
        self.basis: list[list[int]] = []

    @property
    def rank(self) -> int:
        return self._impl.rank

    @property
    def pivots(self) -> list[int]:
        return list(self._impl.pivots)

    def _promote(self) -> None:
        impl = _kernels_py.Echelon(self.ncols)
        for row in self.basis:
            impl.insert(row)
        self._impl = impl

    def insert(self, vector: Sequence[int]) -> bool:
        try:
            added = self._impl.insert(vector)
        except OverflowError:
            self._promote()
            added = self._impl.insert(vector)
        if added:
            self.basis.append(list(vector))
        return added

    def contains(self, vector: Sequence[int]) -> bool:
        try:
            return self._impl.contains(vector)
        except OverflowError:
            self._promote()
            return self._impl.contains(vector)


def adjugate(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """``(A, D)`` with ``A @ matrix == D * I``; raises ``ZeroDivisionError`` if singular."""
    return kernels.adjugate(matrix)


def integer_rank(rows: Iterable[Sequence[int]], ncols: int) -> int:
    ech = IntEchelon(ncols)
    for row in rows:
        ech.insert(row)
    return ech.rank


def sparse_rank(rows: Iterable[Mapping[object, int]]) -> int:
    """Rank of sparse integer rows given as ``{column: value}`` maps.

    Columns may be any mutually comparable keys.  Each stored row's pivot is
    its least column, so eliminating a pivot only introduces larger columns.
    """
    pivots: dict[object, dict[object, int]] = {}
    for source in rows:
        row = {k: v for k, v in source.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if row[c] < 0:
                    g = -g
                pivots[c] = {k: v // g for k, v in row.items()}
                break
            a, p = row[c], prow[c]
            g = gcd(a, p)
            a, p = a // g, p // g
            if p != 1:
                row = {k: p * v for k, v in row.items()}
            for k, v in prow.items():
                nv = row.get(k, 0) - a * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


class ExactMatrix:
    """Dense matrix of rationals with exact rank, solve, inverse and trace."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence[object]]) -> None:
        self._data = [[Fraction(x) for x in row] for row in data]
        self.rows = len(self._data)
        self.cols = len(self._data[0]) if self._data else 0
        if any(len(row) != self.cols for row in self._data):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, k: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(k)] for i in range(k)])

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._data == other._data

    def __repr__(self) -> str:
        return f"ExactMatrix({[[str(x) for x in row] for row in self._data]})"

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other._data))
        return ExactMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._data])

    def _integer_rows(self) -> list[list[int]]:
        out = []
        for row in self._data:
            scale = lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * scale) for x in row])
        return out

    def rank(self) -> int:
        return integer_rank(self._integer_rows(), self.cols)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        return sum((self._data[i][i] for i in range(self.rows)), Fraction(0))

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse needs a square matrix")
        scale = lcm(*(x.denominator for row in self._data for x in row)) if self.rows else 1
        ints = [[int(x * scale) for x in row] for row in self._data]
        A, D = adjugate(ints)
        return ExactMatrix([[Fraction(a * scale, D) for a in row] for row in A])

    def solve(self, rhs: Sequence[object]) -> list[Fraction]:
        """One solution ``x`` of ``self @ x = rhs``; raises ``ValueError`` if none exists."""
        if len(rhs) != self.rows:
            raise ValueError("right-hand side has the wrong length")
        aug = [row[:] + [Fraction(b)] for row, b in zip(self._data, rhs)]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, self.rows) if aug[i][c]), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = 1 / aug[r][c]
            aug[r] = [x * inv for x in aug[r]]
            for i in range(self.rows):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        if any(aug[i][-1] for i in range(r, self.rows)):
            raise ValueError("system is inconsistent")
        x = [Fraction(0)] * self.cols
        for i, c in enumerate(pivots):
            x[c] = aug[i][-1]
        return x
