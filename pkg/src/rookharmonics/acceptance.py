"""The ten acceptance criteria as plain functions.

Each ``criterion_k()`` returns ``(ok, detail)``.  ``selftest`` on the command
line and ``tests/test_acceptance.py`` both run them from :data:`CRITERIA`.
"""

from __future__ import annotations

import time
from functools import lru_cache
from itertools import product
from typing import Callable

from .conjectures import (
    check_log_concavity,
    check_surj_to_isom,
    check_surjection_chain,
    check_uz_identity,
    expected_star_pattern,
    isomorphism_grid,
    star_pattern,
)
from .formulas import grfrob_bad, grfrob_good, grfrob_involution, grfrob_signed, hilbert, rook_count
from .lattice import (
    check_ls,
    check_phi,
    hori_set,
    lattice_path,
    phi,
    phi_column,
    phi_inverse,
    StripPairContext,
)
from .loci import involution_locus, rook_locus
from .oracle.harmonics import oracle_graded_frobenius, oracle_hilbert
from .oracle.ideals import verify_ideal_equality, verify_involution_ideal
from .partitions import Partition, partitions_of
from .symfunc import (
    QPoly,
    coef_closed_form,
    coefficient,
    filtered_strip_pair_sum,
    sf,
    truncate,
    verify_refinement,
    verify_schur_interchange,
    verify_schur_sum,
)

Result = tuple[bool, str]

ORACLE_SHAPES = [(n, m) for n in range(1, 4) for m in range(1, 4)] + [(4, 3), (3, 4), (4, 4)]


def _rook_cases(nmax: int):
    for n in range(1, nmax + 1):
        for m in range(1, nmax + 1):
            for r in range(min(n, m) + 1):
                yield n, m, r


@lru_cache(maxsize=None)
def _oracle_rook(n: int, m: int, r: int):
    return oracle_graded_frobenius(rook_locus(n, m, r))


def _first_failure(failures: list[str], total: int, what: str) -> Result:
    if failures:
        return False, f"{len(failures)} of {total} {what} failed, first: {failures[0]}"
    return True, f"{total} {what}"


def criterion_1() -> Result:
    """The signed, bad and good formulas agree for ``n, m <= 5``."""
    failures, total = [], 0
    for n, m, r in _rook_cases(5):
        total += 1
        signed = grfrob_signed(n, m, r)
        if not signed == grfrob_bad(n, m, r) == grfrob_good(n, m, r):
            failures.append(f"(n,m,r)=({n},{m},{r})")
    return _first_failure(failures, total, "rook cases")


def criterion_2() -> Result:
    """The oracle agrees with the signed formula on small rook loci."""
    failures, total = [], 0
    for n, m in ORACLE_SHAPES:
        for r in range(min(n, m) + 1):
            total += 1
            if _oracle_rook(n, m, r) != grfrob_signed(n, m, r):
                failures.append(f"(n,m,r)=({n},{m},{r})")
    return _first_failure(failures, total, "oracle comparisons")


def criterion_3() -> Result:
    """Hilbert series: point counts, oracle ranks and two anchors."""
    failures, total = [], 0
    for n, m, r in _rook_cases(6):
        total += 1
        if hilbert(grfrob_signed(n, m, r)).at_one() != rook_count(n, m, r):
            failures.append(f"count (n,m,r)=({n},{m},{r})")
    for n, m, r in _rook_cases(4):
        total += 1
        formula = hilbert(grfrob_signed(n, m, r))
        ranks = oracle_hilbert(rook_locus(n, m, r), r + 1)
        if ranks != formula.to_list(r + 2):
            failures.append(f"oracle (n,m,r)=({n},{m},{r}): {ranks} vs {formula}")
    anchors = {(2, 2, 1): QPoly.from_list([1, 3]), (3, 3, 2): QPoly.from_list([1, 8, 9])}
    for (n, m, r), expected in anchors.items():
        total += 1
        if hilbert(grfrob_signed(n, m, r)) != expected:
            failures.append(f"anchor (n,m,r)=({n},{m},{r})")
    return _first_failure(failures, total, "Hilbert checks")


def criterion_4() -> Result:
    """Symmetric-function identities and the closed coefficient formula."""
    failures, total = [], 0
    for d, a, b, p, q in product(range(5), repeat=5):
        total += 1
        if not verify_schur_interchange(d, a, b, p, q):
            failures.append(f"interchange {(d, a, b, p, q)}")
    for n, m, r in _rook_cases(7):
        total += 1
        if not verify_refinement(n, m, r):
            failures.append(f"refinement (n,m,r)=({n},{m},{r})")
    for n in range(1, 8):
        for m in range(1, 8):
            total += 1
            if not verify_schur_sum(n, m):
                failures.append(f"schur sum (n,m)=({n},{m})")
    for n in range(1, 7):
        for m in range(1, 7):
            for d in range(min(n, m) + 1):
                F = sf(n, m, d)
                for lam1 in partitions_of(n):
                    for lam2 in partitions_of(m):
                        total += 1
                        brute = coefficient(F, lam1, lam2).coefficient(0)
                        closed = coef_closed_form(d, n - d, m - d, lam1.first, lam2.first, lam1, lam2)
                        if brute != closed:
                            failures.append(f"coefficient d={d} {lam1} {lam2}: {brute} vs {closed}")
    # The filtered sum itself, for first parts other than the shapes' own.
    for d, a, b in product(range(4), repeat=3):
        for p in range(a + d + 1):
            for q in range(b + d + 1):
                F = filtered_strip_pair_sum(d, a, b, p, q)
                for lam1 in partitions_of(a + d):
                    for lam2 in partitions_of(b + d):
                        total += 1
                        brute = coefficient(F, lam1, lam2).coefficient(0)
                        if brute != coef_closed_form(d, a, b, p, q, lam1, lam2):
                            failures.append(f"filtered {(d, a, b, p, q)} {lam1} {lam2}")
    return _first_failure(failures, total, "identity checks")


def criterion_5() -> Result:
    """Exhaustive certification of both bijections plus the worked instance."""
    failures, total = [], 0
    for n in range(1, 6):
        for m in range(1, 6):
            for report in (check_phi(n, m), check_ls(n, m)):
                total += 1
                if not report.ok:
                    failures.append(f"{report.name} (n,m)=({n},{m}): {report.failures[0]}")
    # Worked instance with d = r = 36 and window 15.
    mu = Partition((13, 8, 6, 5, 2, 2))
    lam1, lam2 = Partition((13, 12, 7, 6, 2, 2, 1)), Partition((13, 13, 7, 5, 2, 2, 2))
    ctx = StripPairContext(lam1, lam2, 43, 44, 36, 36)
    total += 1
    x0, nu = phi_column(mu, ctx), phi(mu, ctx)
    if (x0, nu) != (5, Partition((13, 8, 6, 4, 2, 2))) or phi_inverse(nu, ctx) != mu:
        failures.append(f"worked instance: x0={x0} nu={nu}")
    return _first_failure(failures, total, "bijection checks")


def criterion_6() -> Result:
    """Explicit ideals agree with associated graded ideals degree by degree."""
    failures, total = [], 0
    for n, m, r in _rook_cases(3):
        total += 1
        report = verify_ideal_equality(n, m, r, r + 1)
        if not report.ok:
            failures.append(f"{report.label}: {report.failures[0]}")
    for n in range(1, 5):
        for a in range(n % 2, n + 1, 2):
            total += 1
            report = verify_involution_ideal(n, a, (n - a) // 2 + 1)
            if not report.ok:
                failures.append(f"{report.label}: {report.failures[0]}")
    return _first_failure(failures, total, "ideal comparisons")


def criterion_7() -> Result:
    """The involution formula agrees with the oracle for ``n <= 5``."""
    failures, total = [], 0
    for n in range(1, 6):
        for a in range(n % 2, n + 1, 2):
            total += 1
            if oracle_graded_frobenius(involution_locus(n, a)) != grfrob_involution(n, a):
                failures.append(f"(n,a)=({n},{a})")
    total += 1
    anchor = grfrob_involution(3, 1)
    if anchor.render() != ["q^0  s[3]  1", "q^1  s[2,1]  1"]:
        failures.append(f"anchor (3,1): {anchor.render()}")
    return _first_failure(failures, total, "involution checks")


def criterion_8() -> Result:
    """Surjection chain, isomorphism range and upper rook identity; the star pattern."""
    failures, total = [], 0
    for n in range(1, 6):
        for m in range(1, 6):
            for report in (check_surjection_chain(n, m), check_surj_to_isom(n, m), check_uz_identity(n, m)):
                total += 1
                if not report.ok:
                    failures.append(f"{report.title}: {report.failures()[0].line()}")
    total += 1
    if star_pattern(6, 6) != expected_star_pattern(6, 6):
        failures.append("star pattern for min=6 differs")
    total += 1
    above = [cell for cell, iso in isomorphism_grid(6, 6).items() if iso and cell[1] > 6 - cell[0] - 1]
    if above:
        failures.append(f"isomorphisms above the line at {above}")
    return _first_failure(failures, total, "proposition checks")


def criterion_9() -> Result:
    """Equivariant log-concavity for ``n, m <= 5``."""
    failures, total = [], 0
    for n, m, r in _rook_cases(5):
        report = check_log_concavity(n, m, r)
        total += len(report.checks)
        failures.extend(c.line() for c in report.failures())
    return _first_failure(failures, total, "interior degrees")


def criterion_10() -> Result:
    """Structural laws checked exhaustively at desk scale."""
    failures, total = [], 0
    for n, m, r in _rook_cases(5):
        total += 1
        F = grfrob_signed(n, m, r)
        if not F.is_schur_positive():
            failures.append(f"positivity (n,m,r)=({n},{m},{r})")
        if F.max_q_degree() > r:
            failures.append(f"top degree (n,m,r)=({n},{m},{r})")
        for L in range(n + m + 1):
            once = truncate(F, L)
            if truncate(once, L) != once or truncate(once, L + 1) != once:
                failures.append(f"truncate (n,m,r)=({n},{m},{r}) L={L}")
    for n, m in ORACLE_SHAPES:
        for r in range(min(n, m) + 1):
            total += 1
            for (l1, l2), poly in _oracle_rook(n, m, r).items():
                for d, c in poly.coeffs().items():
                    if c and max(l1.first, l2.first) > n + m - d - r:
                        failures.append(f"upper bound (n,m,r)=({n},{m},{r}) d={d} {l1} {l2}")
    for n in range(1, 9):
        for m in range(1, 9):
            for lam1 in partitions_of(n):
                for lam2 in partitions_of(m):
                    top = max(lam1.first, lam2.first)
                    for d in range(min(n, m) + 1):
                        for mu in hori_set(d, lam1, lam2):
                            total += 1
                            path = lattice_path(mu, lam1, lam2, top + 3)
                            for L in range(top, top + 4):
                                if path.height(L) != n + m - 2 * d - L:
                                    failures.append(f"height {mu} {lam1} {lam2} L={L}")
    return _first_failure(failures, total, "property checks")


CRITERIA: list[tuple[int, str, Callable[[], Result]]] = [
    (1, "triple formula agreement", criterion_1),
    (2, "oracle agreement", criterion_2),
    (3, "Hilbert series", criterion_3),
    (4, "symmetric function identities", criterion_4),
    (5, "bijection certification", criterion_5),
    (6, "ideal equality", criterion_6),
    (7, "involution formula", criterion_7),
    (8, "proposition checks", criterion_8),
    (9, "log-concavity", criterion_9),
    (10, "property suites", criterion_10),
]


def run_criterion(number: int) -> tuple[bool, str, float]:
    """Run one criterion; returns ``(ok, detail, seconds)``."""
    for k, _, fn in CRITERIA:
        if k == number:
            start = time.perf_counter()
            ok, detail = fn()
            return ok, detail, time.perf_counter() - start
    raise KeyError(number)


def format_line(number: int, ok: bool, detail: str) -> str:
    name = dict((k, label) for k, label, _ in CRITERIA)[number]
    return f"{'PASS' if ok else 'FAIL'} criterion {number} ({name}): {detail}"
