"""Closed formulas for graded Frobenius images of the rook and involution loci.

Three routes are given for the rook-placement locus ``Z_{n,m,r}``:

* :func:`grfrob_signed` uses truncated differences ``{SF_d - SF_{d-1}}``;
* :func:`grfrob_bad` counts paths that stay above the axis (``H+`` sets);
* :func:`grfrob_good` grades every ``mu`` in ``H(r)`` by its width.

They are computed independently of each other, so comparing them is a genuine
check.  :func:`grfrob_uz` covers the upper rook locus and
:func:`grfrob_involution` the locus of involutions with a given number of fixed
points.
"""

from __future__ import annotations

from math import comb, factorial

from .lattice import hori_positive, hori_set, width
from .partitions import hook_length_dimension, partitions_of
from .symfunc import (
    DoublySchurExpansion,
    QPoly,
    SchurExpansion,
    _Expansion,
    mul_h,
    plethysm_h_h2,
    sf,
    signed_piece,
    truncate,
    zero_double,
    zero_single,
)


def _check_rook_args(n: int, m: int, r: int) -> None:
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if not 0 <= r <= min(n, m):
        raise ValueError(f"r={r} outside 0..min(n, m)={min(n, m)}")


def grfrob_signed(n: int, m: int, r: int) -> DoublySchurExpansion:
    """``sum_{d=0}^{r} q^d {SF_d - SF_{d-1}}_{lambda_1 <= n+m-d-r}`` with ``SF_{-1} = 0``."""
    _check_rook_args(n, m, r)
    total = zero_double(n, m)
    for d in range(r + 1):
        total = total + signed_piece(n, m, r, d).shift_q(d)
    return total


def grfrob_bad(n: int, m: int, r: int) -> DoublySchurExpansion:
    """Degree ``d`` coefficient of ``s_lam1 (x) s_lam2`` is ``|H+(d, lam1, lam2)|``.

    Only pairs with both first parts at most ``n+m-d-r`` contribute.
    """
    _check_rook_args(n, m, r)
    out = zero_double(n, m)
    lams1, lams2 = partitions_of(n), partitions_of(m)
    for d in range(r + 1):
        window = n + m - d - r
        for lam1 in lams1:
            if lam1.first > window:
                continue
            for lam2 in lams2:
                if lam2.first > window:
                    continue
                count = len(hori_positive(d, lam1, lam2, n, m, r))
                if count:
                    out._accumulate((lam1, lam2), QPoly({d: count}))
    return out


def grfrob_good(n: int, m: int, r: int) -> DoublySchurExpansion:
    """``sum_{lam1, lam2} sum_{mu in H(r)} q^{n+m-r-wid(mu)} s_lam1 (x) s_lam2``."""
    _check_rook_args(n, m, r)
    out = zero_double(n, m)
    for lam1 in partitions_of(n):
        for lam2 in partitions_of(m):
            poly: dict[int, int] = {}
            for mu in hori_set(r, lam1, lam2):
                e = n + m - r - width(mu, lam1, lam2)
                poly[e] = poly.get(e, 0) + 1
            if poly:
                out._accumulate((lam1, lam2), QPoly(poly))
    return out


def grfrob_uz(n: int, m: int, r: int) -> DoublySchurExpansion:
    """Upper rook locus: ``sum_{d=0}^{min(n,m)} q^d {SF_d}_{lambda_1 <= n+m-d-r}``."""
    _check_rook_args(n, m, r)
    total = zero_double(n, m)
    for d in range(min(n, m) + 1):
        total = total + truncate(sf(n, m, d), n + m - d - r).shift_q(d)
    return total


def _pleth_times_h(d: int, k: int) -> SchurExpansion:
    """``h_d[h_2] * h_k`` with ``h_{-1} = 0``."""
    if d < 0 or k < 0:
        return zero_single(2 * max(d, 0) + max(k, 0))
    return mul_h(plethysm_h_h2(d), k)


def grfrob_involution(n: int, a: int) -> SchurExpansion:
    """Involutions of ``[n]`` with ``a`` fixed points under conjugation.

    ``sum_{d=0}^{(n-a)/2} q^d {h_d[h_2] h_{n-2d} - h_{d-1}[h_2] h_{n-2d+2}}_{lambda_1 <= n-2d+a}``.
    """
    if n < 1 or not 0 <= a <= n:
        raise ValueError("need n >= 1 and 0 <= a <= n")
    if (n - a) % 2:
        raise ValueError("a and n must have the same parity")
    total = zero_single(n)
    for d in range((n - a) // 2 + 1):
        piece = _pleth_times_h(d, n - 2 * d)
        if d >= 1:
            piece = piece - _pleth_times_h(d - 1, n - 2 * d + 2)
        total = total + truncate(piece, n - 2 * d + a).shift_q(d)
    return total


def hilbert(expansion: _Expansion) -> QPoly:
    """Replace every ``s_lambda`` by the dimension of the matching irreducible module."""
    total = QPoly()
    for key, poly in expansion.items():
        if isinstance(expansion, DoublySchurExpansion):
            dim = hook_length_dimension(key[0]) * hook_length_dimension(key[1])
        else:
            dim = hook_length_dimension(key)
        total = total + poly * dim
    return total


def rook_count(n: int, m: int, r: int) -> int:
    """``binom(n, r) binom(m, r) r!``."""
    if r < 0 or r > min(n, m):
        return 0
    return comb(n, r) * comb(m, r) * factorial(r)


METHODS = {
    "signed": grfrob_signed,
    "bad": grfrob_bad,
    "good": grfrob_good,
    "uz": grfrob_uz,
}


def grfrob(n: int, m: int, r: int, method: str = "signed") -> DoublySchurExpansion:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(n, m, r)


def piece(F: DoublySchurExpansion, d: int) -> DoublySchurExpansion:
    """The ``q^d`` component of a graded expansion, as an ungraded expansion."""
    return F.q_part(d)


__all__ = [
    "METHODS",
    "grfrob",
    "grfrob_bad",
    "grfrob_good",
    "grfrob_involution",
    "grfrob_signed",
    "grfrob_uz",
    "hilbert",
    "piece",
    "rook_count",
]
