"""Finite loci of 0/1 matrices and the symmetric-group actions on them.

Points are stored combinatorially.  A rook placement is a frozenset of
``(row, col)`` cells (1-based) with no two in a row or column, and an
involution is stored as its set of 2-cycles.  Both convert to a cell set via
:func:`support`, which is all the monomial evaluation needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Sequence

Cell = tuple[int, int]
RookPlacement = frozenset  # frozenset[Cell]


def placement(cells: Iterable[Cell]) -> RookPlacement:
    """Validated rook placement from an iterable of cells."""
    out = frozenset((int(i), int(j)) for i, j in cells)
    rows = [i for i, _ in out]
    cols = [j for _, j in out]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError(f"cells {sorted(out)} attack each other")
    return out


def enumerate_rook(n: int, m: int, r: int) -> list[RookPlacement]:
    """All placements of exactly ``r`` non-attacking rooks on an ``n x m`` board."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r > min(n, m):
        return []
    out = []
    for rows in combinations(range(1, n + 1), r):
        for cols in permutations(range(1, m + 1), r):
            out.append(frozenset(zip(rows, cols)))
    out.sort(key=lambda p: sorted(p))
    return out


def enumerate_uz(n: int, m: int, r: int) -> list[RookPlacement]:
    """Placements with at least ``r`` rooks (the upper rook locus)."""
    if not 0 <= r <= min(n, m):
        raise ValueError("r must lie in 0..min(n, m)")
    out: list[RookPlacement] = []
    for size in range(r, min(n, m) + 1):
        out.extend(enumerate_rook(n, m, size))
    return out


@dataclass(frozen=True)
class InvolutionPoint:
    """An involution of ``[n]`` given by its disjoint 2-cycles."""

    n: int
    pairing: frozenset  # frozenset[tuple[int, int]] with i < j

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "InvolutionPoint":
        normalized = frozenset((min(p), max(p)) for p in pairs)
        used = [x for p in normalized for x in p]
        if len(set(used)) != len(used) or any(not 1 <= x <= n for x in used):
            raise ValueError(f"pairs {sorted(normalized)} are not disjoint 2-cycles of [{n}]")
        if any(i == j for i, j in normalized):
            raise ValueError("a 2-cycle needs two distinct points")
        return cls(n, normalized)

    @property
    def fixed_points(self) -> list[int]:
        moved = {x for p in self.pairing for x in p}
        return [i for i in range(1, self.n + 1) if i not in moved]

    def as_permutation(self) -> tuple[int, ...]:
        w = list(range(1, self.n + 1))
        for i, j in self.pairing:
            w[i - 1], w[j - 1] = j, i
        return tuple(w)

    def cells(self) -> frozenset:
        """Cells of the permutation matrix."""
        return frozenset((i, w) for i, w in enumerate(self.as_permutation(), start=1))


def enumerate_involutions(n: int, a: int) -> list[InvolutionPoint]:
    """All involutions of ``[n]`` with exactly ``a`` fixed points."""
    if not 0 <= a <= n:
        raise ValueError("need 0 <= a <= n")
    if (n - a) % 2:
        return []

    def matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        for k, other in enumerate(rest):
            remaining = rest[:k] + rest[k + 1 :]
            for tail in matchings(remaining):
                yield [(first, other)] + tail

    out = []
    for fixed in combinations(range(1, n + 1), a):
        moving = tuple(i for i in range(1, n + 1) if i not in fixed)
        for pairs in matchings(moving):
            out.append(InvolutionPoint(n, frozenset(pairs)))
    out.sort(key=lambda w: w.as_permutation())
    return out


def _apply(perm: Sequence[int], i: int) -> int:
    return perm[i - 1]


def act_rook(g: Sequence[int], h: Sequence[int], p: Iterable[Cell]) -> RookPlacement:
    """Permute rows by ``g`` and columns by ``h`` (one-line notation, 1-based)."""
    return frozenset((_apply(g, i), _apply(h, j)) for i, j in p)


def act_involution(g: Sequence[int], w: InvolutionPoint) -> InvolutionPoint:
    """Conjugate ``w`` by ``g``: each 2-cycle ``{i, j}`` goes to ``{g(i), g(j)}``."""
    return InvolutionPoint.from_pairs(w.n, [(_apply(g, i), _apply(g, j)) for i, j in w.pairing])


def support(point) -> frozenset:
    """Occupied cells of a point, whatever its kind."""
    if isinstance(point, InvolutionPoint):
        return point.cells()
    return frozenset(point)


def eval_rook_monomial(monomial_support: Iterable[Cell], point) -> int:
    """Value of the squarefree monomial on the cells of ``point``: 1 iff contained."""
    return int(frozenset(monomial_support) <= support(point))


def eval_general_monomial(exponents: Mapping[Cell, int], point) -> int:
    """Value of ``prod x_c^{e_c}`` at a 0/1 point."""
    occupied = support(point)
    for cell, e in exponents.items():
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        if e and cell not in occupied:
            return 0
    return 1


def format_placement(p: Iterable[Cell]) -> str:
    return "{" + ",".join(f"({i},{j})" for i, j in sorted(p)) + "}"


def compose(g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    """``g o h`` in one-line notation."""
    return tuple(g[h[i] - 1] for i in range(len(h)))


def permutation_of_cycle_type(cycle_type: Sequence[int]) -> tuple[int, ...]:
    """A representative permutation whose cycle lengths are ``cycle_type``."""
    perm: list[int] = []
    start = 1
    for length in cycle_type:
        block = list(range(start, start + length))
        perm.extend(block[1:] + block[:1])
        start += length
    return tuple(perm)


@dataclass(frozen=True)
class Locus:
    """A finite point set with the data the oracle needs.

    ``kind`` is ``"rook"``, ``"uz"`` or ``"involution"``.  ``shape`` is the
    matrix size ``(rows, cols)``; ``groups`` lists the symmetric groups acting
    (``(n, m)`` for rook loci, ``(n,)`` for involutions).
    """

    kind: str
    shape: tuple[int, int]
    points: tuple
    params: tuple[int, ...]

    @property
    def groups(self) -> tuple[int, ...]:
        return self.shape if self.kind in ("rook", "uz") else (self.shape[0],)

    def supports(self) -> list[frozenset]:
        return [support(p) for p in self.points]

    def act(self, perms: Sequence[Sequence[int]], cells: Iterable[Cell]) -> frozenset:
        """Image of a set of cells under a group element."""
        if self.kind in ("rook", "uz"):
            g, h = perms
        else:
            (g,) = perms
            h = g
        return frozenset((_apply(g, i), _apply(h, j)) for i, j in cells)

    def __len__(self) -> int:
        return len(self.points)


def rook_locus(n: int, m: int, r: int) -> Locus:
    return Locus("rook", (n, m), tuple(enumerate_rook(n, m, r)), (n, m, r))


def uz_locus(n: int, m: int, r: int) -> Locus:
    return Locus("uz", (n, m), tuple(enumerate_uz(n, m, r)), (n, m, r))


def involution_locus(n: int, a: int) -> Locus:
    return Locus("involution", (n, n), tuple(enumerate_involutions(n, a)), (n, a))
