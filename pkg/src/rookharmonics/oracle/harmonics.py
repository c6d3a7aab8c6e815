"""Brute-force orbit harmonics on a finite locus of 0/1 matrices.

For a finite point set ``Z`` the graded ring ``R(Z)`` has ``dim R(Z)_d`` equal
to ``rank E_{<=d} - rank E_{<=d-1}``, where ``E_{<=d}`` evaluates all monomials
of degree at most ``d`` at the points of ``Z``.  A group acting on ``Z`` acts on
the span ``V_{<=d}`` of those evaluation vectors, and the character of
``R(Z)_d`` is the difference of the characters on ``V_{<=d}`` and ``V_{<=d-1}``.

Every point here is a 0/1 matrix whose ones form a partial permutation, so a
monomial evaluates to 1 exactly when its support is contained in the point.
Two consequences are used:

* a monomial and its squarefree support have equal evaluation vectors;
* a support with two cells in one row or column evaluates to the zero vector.

So the rows of ``E_{<=d}`` that matter are indexed by partial permutations of
size at most ``d`` (the "restricted" basis).  The "full" basis, every
monomial with exponents, is kept for cross-checking ranks on small cases.

Nothing in this module looks at the closed formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterable, Iterator, Sequence

from ..loci import Cell, Locus, permutation_of_cycle_type
from ..partitions import partitions_of
from ..symfunc import DoublySchurExpansion, QPoly, SchurExpansion, _Expansion
from .characters import frobenius_from_character
from .linalg import IntEchelon, adjugate


def variable_index(cell: Cell, cols: int) -> int:
    """Position of ``x_{i,j}`` in the order ``x11, ..., x1m, x21, ...`` (0-based)."""
    i, j = cell
    return (i - 1) * cols + (j - 1)


def variable_cell(index: int, cols: int) -> Cell:
    return (index // cols + 1, index % cols + 1)


def partial_permutation_supports(rows: int, cols: int, size: int) -> list[tuple[Cell, ...]]:
    """Sets of ``size`` cells with distinct rows and columns, in lexicographic order."""
    out = []
    for rs in combinations(range(1, rows + 1), size):
        for cs in permutations(range(1, cols + 1), size):
            out.append(tuple(zip(rs, cs)))
    out.sort()
    return out


def monomials_of_degree(nvars: int, deg: int) -> Iterator[tuple[int, ...]]:
    """Monomials as sorted tuples of variable indices (with repetition)."""
    return combinations_with_replacement(range(nvars), deg)


def evaluation_vector(cells: Iterable[Cell], point_supports: Sequence[frozenset]) -> list[int]:
    s = frozenset(cells)
    return [1 if s <= p else 0 for p in point_supports]


def _monomial_cells(monomial: Sequence[int], cols: int) -> frozenset:
    return frozenset(variable_cell(v, cols) for v in monomial)


@dataclass
class GradedSpan:
    """Nested bases of ``V_{<=0} <= V_{<=1} <= ...`` inside functions on the locus.

    ``basis[d]`` lists the supports first added in degree ``d``; ``ranks[d]``
    is ``dim V_{<=d}``; ``pivots`` are the echelon pivot columns (points), in
    the order the basis was built.
    """

    locus: Locus
    basis: list[list[tuple[Cell, ...]]]
    ranks: list[int]
    echelon: IntEchelon

    @property
    def supports(self) -> list[frozenset]:
        return self.locus.supports()


def graded_span(locus: Locus, dmax: int | None = None, basis: str = "restricted") -> GradedSpan:
    """Build ``V_{<=d}`` degree by degree.

    Without ``dmax`` the construction stops at the first degree where the
    span is all functions on the locus.  ``basis="full"`` feeds every monomial
    (with exponents) instead of partial-permutation supports.
    """
    if not locus.points:
        raise ValueError("locus is empty")
    rows, cols = locus.shape
    pts = locus.supports()
    ech = IntEchelon(len(pts))
    added: list[list[tuple[Cell, ...]]] = []
    ranks: list[int] = []
    d = 0
    while True:
        new: list[tuple[Cell, ...]] = []
        if basis == "restricted":
            candidates: Iterable[Sequence[Cell]] = partial_permutation_supports(rows, cols, d)
        elif basis == "full":
            candidates = (
                tuple(sorted(_monomial_cells(mono, cols))) for mono in monomials_of_degree(rows * cols, d)
            )
        else:
            raise ValueError("basis must be 'restricted' or 'full'")
        for cells in candidates:
            if ech.insert(evaluation_vector(cells, pts)):
                new.append(tuple(cells))
        added.append(new)
        ranks.append(ech.rank)
        d += 1
        if dmax is not None:
            if d > dmax:
                break
        elif ech.rank == len(pts):
            break
    return GradedSpan(locus, added, ranks, ech)


def oracle_hilbert(locus: Locus, dmax: int, basis: str = "restricted") -> list[int]:
    """``[dim R(Z)_0, ..., dim R(Z)_dmax]`` from ranks of evaluation matrices."""
    span = graded_span(locus, dmax, basis)
    prev = 0
    out = []
    for r in span.ranks:
        out.append(r - prev)
        prev = r
    return out


def class_representatives(locus: Locus) -> list[tuple[object, tuple[tuple[int, ...], ...]]]:
    """``(label, permutations)`` for one element of each conjugacy class of the acting group."""
    groups = locus.groups
    if len(groups) == 2:
        n, m = groups
        return [
            ((c1, c2), (permutation_of_cycle_type(c1), permutation_of_cycle_type(c2)))
            for c1 in partitions_of(n)
            for c2 in partitions_of(m)
        ]
    (n,) = groups
    return [(c, (permutation_of_cycle_type(c),)) for c in partitions_of(n)]


def _traces_on_span(
    locus: Locus, basis: list[tuple[Cell, ...]], pivots: list[int], reps
) -> dict[object, Fraction]:
    """Trace of each class representative on the span of ``basis``.

    With ``M`` the square matrix of basis evaluations at the pivot points,
    ``g`` sends basis vector ``b_i`` to the evaluation vector of ``g(b_i)``;
    its coordinates are ``g(b_i)|_pivots @ M^{-1}``, and the trace is the sum
    of the diagonal coordinates.
    """
    pts = locus.supports()
    pivot_pts = [pts[c] for c in pivots]
    k = len(basis)
    if k == 0:
        return {label: Fraction(0) for label, _ in reps}
    M = [[1 if frozenset(b) <= p else 0 for p in pivot_pts] for b in basis]
    A, D = adjugate(M)
    out = {}
    for label, perms in reps:
        total = 0
        for i, b in enumerate(basis):
            image = locus.act(perms, b)
            for j, p in enumerate(pivot_pts):
                if image <= p:
                    total += A[j][i]
        out[label] = Fraction(total, D)
    return out


def graded_characters(locus: Locus, dmax: int | None = None) -> list[dict[object, Fraction]]:
    """Characters of ``R(Z)_0, R(Z)_1, ...`` on class representatives."""
    span = graded_span(locus, dmax)
    reps = class_representatives(locus)
    flat: list[tuple[Cell, ...]] = []
    pivots = span.echelon.pivots
    characters = []
    previous = {label: Fraction(0) for label, _ in reps}
    for new in span.basis:
        flat.extend(new)
        current = _traces_on_span(locus, flat, pivots[: len(flat)], reps) if new else previous
        characters.append({label: current[label] - previous[label] for label, _ in reps})
        previous = current
    return characters


def oracle_graded_frobenius(locus: Locus, dmax: int | None = None) -> _Expansion:
    """Graded Frobenius image of ``R(Z)`` computed from traces on evaluation spans."""
    chars = graded_characters(locus, dmax)
    groups = locus.groups
    if len(groups) == 2:
        total: _Expansion = DoublySchurExpansion(degrees=groups)
    else:
        total = SchurExpansion(degrees=groups)
    for d, chi in enumerate(chars):
        piece = frobenius_from_character(chi, *groups)
        for key, poly in piece.items():
            total._accumulate(key, QPoly({d: poly.coefficient(0)}))
    return total
