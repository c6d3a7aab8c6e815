"""Pure-Python exact elimination kernels.

This module is the reference implementation and the fallback used when the
compiled extension is unavailable.  All arithmetic is on Python integers;
rows are kept primitive (content 1, positive pivot) so entries stay small on
the 0/1 evaluation matrices the oracle produces.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

BACKEND = "python"


def _primitive(v: list[int], pivot: int) -> list[int]:
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if v[pivot] < 0:
        g = -g
    if g not in (0, 1):
        v = [x // g for x in v]
    return v


class Echelon:
    """Row echelon form over the integers, grown one row at a time.

    ``insert`` reduces a row against the stored pivots and keeps it when
    something nonzero survives.  The pivot of a stored row is its first
    nonzero column after reduction, and later rows are zero in every earlier
    pivot column, so a single forward pass reduces any vector.
    """

    def __init__(self, ncols: int) -> None:
        self.ncols = ncols
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Sequence[int]) -> list[int]:
        if len(vector) != self.ncols:
            raise ValueError(f"expected {self.ncols} entries, got {len(vector)}")
        v = [int(x) for x in vector]
        for row, c in zip(self.rows, self.pivots):
            a = v[c]
            if a:
                p = row[c]
                g = gcd(p, a)
                p //= g
                a //= g
                v = [p * x - a * y for x, y in zip(v, row)]
        return v

    def contains(self, vector: Sequence[int]) -> bool:
        return not any(self.reduce(vector))

    def insert(self, vector: Sequence[int]) -> bool:
        v = self.reduce(vector)
        for c, x in enumerate(v):
            if x:
                self.rows.append(_primitive(v, c))
                self.pivots.append(c)
                return True
        return False


def adjugate(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Return ``(A, D)`` with ``A @ matrix == D * I`` for a nonsingular square integer matrix.

    Fraction-free Gauss-Jordan elimination: every intermediate entry is a
    minor of the augmented matrix, so each division is exact.
    """
    k = len(matrix)
    aug = [list(map(int, row)) + [int(i == j) for j in range(k)] for i, row in enumerate(matrix)]
    if any(len(row) != 2 * k for row in aug):
        raise ValueError("matrix must be square")
    prev = 1
    for col in range(k):
        piv = next((i for i in range(col, k) if aug[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        p = prow[col]
        for i in range(k):
            if i == col:
                continue
            row = aug[i]
            a = row[col]
            aug[i] = [(p * x - a * y) // prev for x, y in zip(row, prow)]
        prev = p
    D = aug[0][0]
    return [row[k:] for row in aug], D
