"""Integer partitions, Young-diagram containment and horizontal strips.

A :class:`Partition` is a tuple of positive integers in weakly decreasing
order.  Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
and ``Partition((2, 1))`` are the same object as far as ``==`` and ``hash`` go.

Enumerations return partitions in reverse lexicographic order, which for
partitions of a fixed size is the usual "largest first part first" order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers in normal form."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        for i, p in enumerate(values):
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {values}")
            if i and p > values[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing, got {values}")
        return super().__new__(cls, values)

    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), with implicit zero padding."""
        return self[i] if 0 <= i < len(self) else 0

    @property
    def first(self) -> int:
        return self[0] if self else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition(())


def format_partition(parts: Sequence[int]) -> str:
    """Render as ``[a,b,c]``; the empty partition renders as ``[]``."""
    return "[" + ",".join(str(p) for p in parts) + "]"


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`format_partition`; also accepts ``3,2,1`` without brackets."""
    body = text.strip().strip("[]()").strip()
    if not body:
        return EMPTY
    return Partition(int(tok) for tok in body.replace(" ", "").split(",") if tok)


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out: list[Partition] = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append(Partition((first, *rest)))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_bounded(n, n))


def contains(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """True when the diagram of ``inner`` sits inside the diagram of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def is_horizontal_strip(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """True when ``outer/inner`` is a skew shape with at most one cell per column.

    The interlacing form ``outer[i+1] <= inner[i]`` is used; together with
    containment it is equivalent to the column condition.
    """
    if not contains(inner, outer):
        return False
    for i in range(1, len(outer)):
        if outer[i] > (inner[i - 1] if i - 1 < len(inner) else 0):
            return False
    return True


@lru_cache(maxsize=None)
def _pieri(base: Partition, k: int) -> tuple[Partition, ...]:
    # Row i may grow up to the old length of row i-1 (row 0 is unbounded);
    # one extra row below the base may receive up to base[-1] cells.
    rows = len(base) + 1
    caps = [k] + [base[i - 1] - base.part(i) for i in range(1, rows)]
    out: list[Partition] = []

    def place(i: int, left: int, grown: list[int]) -> None:
        if i == rows:
            if left == 0:
                out.append(Partition(base.part(j) + grown[j] for j in range(rows)))
            return
        for add in range(min(caps[i], left), -1, -1):
            grown.append(add)
            place(i + 1, left - add, grown)
            grown.pop()

    place(0, k, [])
    out.sort(reverse=True)
    return tuple(out)


def pieri_h(base: Sequence[int], k: int) -> list[Partition]:
    """Shapes obtained from ``base`` by adding a horizontal strip of ``k`` cells."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return list(_pieri(Partition(base), k))


def even_partitions(n: int) -> list[Partition]:
    """Partitions of ``n`` all of whose parts are even."""
    if n % 2:
        return []
    return [Partition(2 * p for p in lam) for lam in partitions_of(n // 2)]


def cells(lam: Sequence[int]) -> set[tuple[int, int]]:
    """Cells ``(row, column)`` of the Young diagram, both 1-based."""
    return {(i + 1, j + 1) for i, p in enumerate(lam) for j in range(p)}


def hook_length_dimension(lam: Sequence[int]) -> int:
    """Dimension of the irreducible symmetric-group module indexed by ``lam``."""
    lam = Partition(lam)
    conj = lam.conjugate()
    n = lam.size()
    numerator = 1
    for i in range(2, n + 1):
        numerator *= i
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return numerator // hooks
