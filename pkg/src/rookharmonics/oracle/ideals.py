"""Degreewise comparison of explicit ideals with associated graded ideals.

Polynomials are dictionaries from monomials to integer coefficients, where a
monomial is a sorted tuple of variable indices (repetition allowed), using the
variable order ``x11, ..., x1m, x21, ...``.  The degree-``d`` piece of the
ideal generated by homogeneous forms is the span of ``generator * monomial``
products, and its dimension is a sparse exact rank.

On the locus side, ``dim (gr I(Z))_d`` is the number of degree-``d`` monomials
minus ``dim R(Z)_d``, and a form ``f`` of degree ``d`` lies in ``gr I(Z)``
exactly when its evaluation vector is a combination of evaluations of
lower-degree monomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from ..loci import Locus, enumerate_involutions, enumerate_rook, involution_locus, rook_locus
from .harmonics import graded_span, monomials_of_degree, variable_cell, variable_index
from .linalg import sparse_rank

Monomial = tuple[int, ...]
Form = dict[Monomial, int]


def form_degree(form: Form) -> int:
    degrees = {len(mono) for mono, c in form.items() if c}
    if len(degrees) != 1:
        raise ValueError("form must be nonzero and homogeneous")
    return degrees.pop()


def multiply(f: Form, g: Form) -> Form:
    out: Form = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            key = tuple(sorted(m1 + m2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def product(forms: Iterable[Form]) -> Form:
    out: Form = {(): 1}
    for f in forms:
        out = multiply(out, f)
    return out


def linear_form(indices: Iterable[int], coeff: int = 1) -> Form:
    out: Form = {}
    for v in indices:
        out[(v,)] = out.get((v,), 0) + coeff
    return out


def monomial_form(indices: Iterable[int]) -> Form:
    return {tuple(sorted(indices)): 1}


def _dedupe(named: list[tuple[str, Form]]) -> list[tuple[str, Form]]:
    seen = set()
    out = []
    for name, form in named:
        key = frozenset(form.items())
        neg = frozenset((k, -v) for k, v in form.items())
        if key in seen or neg in seen:
            continue
        seen.add(key)
        out.append((name, form))
    return out


def rook_ideal_generators(n: int, m: int, r: int) -> list[tuple[str, Form]]:
    """Named homogeneous generators of the ideal ``I^{(r)}_{n,m}``."""
    if not 0 <= r <= min(n, m):
        raise ValueError("r must lie in 0..min(n, m)")

    def x(i: int, j: int) -> int:
        return variable_index((i, j), m)

    gens: list[tuple[str, Form]] = [("total-sum", linear_form(range(n * m)))]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            for j2 in range(j, m + 1):
                gens.append((f"row-product x{i}{j}*x{i}{j2}", monomial_form([x(i, j), x(i, j2)])))
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            for i2 in range(i, n + 1):
                gens.append((f"column-product x{i}{j}*x{i2}{j}", monomial_form([x(i, j), x(i2, j)])))
    row_sums = [linear_form(x(i, j) for j in range(1, m + 1)) for i in range(1, n + 1)]
    col_sums = [linear_form(x(i, j) for i in range(1, n + 1)) for j in range(1, m + 1)]
    for rows in combinations(range(n), n - r + 1):
        gens.append((f"row-sums {[i + 1 for i in rows]}", product(row_sums[i] for i in rows)))
    for cols in combinations(range(m), m - r + 1):
        gens.append((f"column-sums {[j + 1 for j in cols]}", product(col_sums[j] for j in cols)))
    for size in range(r + 1, min(n, m) + 1):
        for p in enumerate_rook(n, m, size):
            gens.append((f"rook-monomial {sorted(p)}", monomial_form(x(i, j) for i, j in p)))
    return _dedupe(gens)


def involution_ideal_generators(n: int, a: int) -> list[tuple[str, Form]]:
    """Named homogeneous generators of the ideal ``I_n^{(a)}``."""
    if not 0 <= a <= n or (n - a) % 2:
        raise ValueError("need 0 <= a <= n with a = n mod 2")

    def x(i: int, j: int) -> int:
        return variable_index((i, j), n)

    span = range(1, n + 1)
    gens: list[tuple[str, Form]] = []
    for i in span:
        gens.append((f"row-sum {i}", linear_form(x(i, j) for j in span)))
    for j in span:
        gens.append((f"column-sum {j}", linear_form(x(i, j) for i in span)))
    for i in span:
        for j in span:
            for j2 in range(j, n + 1):
                gens.append((f"row-product x{i}{j}*x{i}{j2}", monomial_form([x(i, j), x(i, j2)])))
    for j in span:
        for i in span:
            for i2 in range(i, n + 1):
                gens.append((f"column-product x{i}{j}*x{i2}{j}", monomial_form([x(i, j), x(i2, j)])))
    for i in span:
        for j in span:
            if i < j:
                gens.append((f"symmetric-difference x{i}{j}-x{j}{i}", {(x(i, j),): 1, (x(j, i),): -1}))
    gens.append(("diagonal-sum", linear_form(x(i, i) for i in span)))
    if a + 1 <= n:
        for S in combinations(span, a + 1):
            gens.append((f"diagonal-product {list(S)}", monomial_form(x(i, i) for i in S)))
    for fewer in range(n % 2, a, 2):
        for w in enumerate_involutions(n, fewer):
            cells = sorted(w.pairing)
            gens.append((f"involution-monomial {cells}", monomial_form(x(i, j) for i, j in cells)))
    return _dedupe(gens)


def ideal_degree_dim(generators: Sequence[Form], deg: int, nvars: int) -> int:
    """Dimension of the degree-``deg`` piece of the ideal generated by homogeneous forms."""
    rows: list[Form] = []
    for g in generators:
        e = form_degree(g)
        if e > deg:
            continue
        for mono in monomials_of_degree(nvars, deg - e):
            rows.append(multiply(g, {mono: 1}))
    # Short rows first: single monomials become pivots that later rows shed cheaply.
    rows.sort(key=len)
    return sparse_rank(rows)


def _span_ranks(locus: Locus, deg: int) -> list[int]:
    return graded_span(locus, deg).ranks


def monomial_count(nvars: int, deg: int) -> int:
    """Number of monomials of degree exactly ``deg``."""
    if deg < 0:
        return 0
    return comb(nvars + deg - 1, deg)


def gr_ideal_dim(locus: Locus, deg: int) -> int:
    """``dim (gr I(Z))_deg``."""
    nvars = locus.shape[0] * locus.shape[1]
    ranks = _span_ranks(locus, deg)
    dim_r = ranks[deg] - (ranks[deg - 1] if deg else 0)
    return monomial_count(nvars, deg) - dim_r


def form_evaluation(form: Form, locus: Locus) -> list[int]:
    cols = locus.shape[1]
    pts = locus.supports()
    out = [0] * len(pts)
    for mono, c in form.items():
        cells = frozenset(variable_cell(v, cols) for v in mono)
        for k, p in enumerate(pts):
            if cells <= p:
                out[k] += c
    return out


def gr_ideal_member(form: Form, locus: Locus) -> bool:
    """Whether the homogeneous ``form`` is the top-degree part of some element of ``I(Z)``."""
    deg = form_degree(form)
    vector = form_evaluation(form, locus)
    if deg == 0:
        return not any(vector)
    span = graded_span(locus, deg - 1)
    return span.echelon.contains(vector)


@dataclass
class IdealReport:
    """Per-degree results of an ideal comparison."""

    label: str
    lines: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _compare(label: str, locus: Locus, generators: list[tuple[str, Form]], dmax: int) -> IdealReport:
    report = IdealReport(label)
    nvars = locus.shape[0] * locus.shape[1]
    span = graded_span(locus, max(dmax, 0))
    forms = [f for _, f in generators]
    by_degree: dict[int, list[tuple[str, Form]]] = {}
    for name, f in generators:
        by_degree.setdefault(form_degree(f), []).append((name, f))
    for d in range(dmax + 1):
        lower = graded_span(locus, d - 1).echelon if d > 0 else None
        for name, f in by_degree.get(d, []):
            vec = form_evaluation(f, locus)
            member = (not any(vec)) if lower is None else lower.contains(vec)
            if not member:
                report.failures.append(f"degree {d}: generator {name} is not in gr I")
        dim_r = span.ranks[d] - (span.ranks[d - 1] if d else 0)
        expected = monomial_count(nvars, d) - dim_r
        got = ideal_degree_dim(forms, d, nvars)
        report.lines.append(f"degree {d}: ideal {got} gr {expected}")
        if got != expected:
            report.failures.append(f"degree {d}: ideal dimension {got} != {expected}")
    return report


def verify_ideal_equality(n: int, m: int, r: int, dmax: int) -> IdealReport:
    """Compare ``I^{(r)}_{n,m}`` with ``gr I(Z_{n,m,r})`` in degrees ``0..dmax``."""
    return _compare(
        f"rook n={n} m={m} r={r}", rook_locus(n, m, r), rook_ideal_generators(n, m, r), dmax
    )


def verify_involution_ideal(n: int, a: int, dmax: int) -> IdealReport:
    """Compare ``I_n^{(a)}`` with ``gr I(M_{n,a})`` in degrees ``0..dmax``."""
    return _compare(
        f"involution n={n} a={a}", involution_locus(n, a), involution_ideal_generators(n, a), dmax
    )
