"""Desk-scale checks of structural statements about the graded pieces.

Every checker returns a :class:`Report` of named checks; ``Report.ok`` is
True when all of them pass.  The graded pieces come from the closed formula
:func:`~rookharmonics.formulas.grfrob_signed`; the upper rook identity can
additionally be cross-checked against the orbit-harmonics oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formulas import grfrob_signed, grfrob_uz
from .loci import uz_locus
from .oracle.characters import character_of, frobenius_from_character
from .oracle.harmonics import oracle_graded_frobenius
from .symfunc import DoublySchurExpansion


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"CHECK {self.name} {status} {self.detail}".rstrip()


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, ok, detail))

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def _pieces(n: int, m: int, r: int) -> list[DoublySchurExpansion]:
    F = grfrob_signed(n, m, r)
    return [F.q_part(d) for d in range(r + 1)]


def _kronecker(chi1: dict, chi2: dict, n: int, m: int) -> DoublySchurExpansion:
    """Frobenius image of the internal tensor product of two modules, by characters."""
    product = {c: chi1[c] * chi2[c] for c in chi1}
    return frobenius_from_character(product, n, m)


def _total(expansion: DoublySchurExpansion) -> int:
    """Number of irreducible summands, counted with multiplicity."""
    return sum(v.at_one() for _, v in expansion.items())


def check_log_concavity(n: int, m: int, r: int) -> Report:
    """For ``0 < d < r``: ``R_{d-1} (x) R_{d+1}`` embeds in ``R_d (x) R_d``.

    With semisimple group algebras an embedding exists exactly when every
    irreducible multiplicity on the left is at most the one on the right.
    """
    report = Report(f"log-concavity n={n} m={m} r={r}")
    pieces = _pieces(n, m, r)
    chars = [character_of(p) for p in pieces]
    for d in range(1, r):
        square = _kronecker(chars[d], chars[d], n, m)
        outer = _kronecker(chars[d - 1], chars[d + 1], n, m)
        ok = square.dominates(outer)
        detail = f"irreducibles {_total(outer)} <= {_total(square)}"
        if not ok:
            excess = [k for k, v in (outer - square).items() if not (-v).is_nonnegative()]
            detail += f" violated at {excess[:3]}"
        report.add(f"logconcave[n={n},m={m},r={r},d={d}]", ok, detail)
    return report


def check_surjection_chain(n: int, m: int) -> Report:
    """``R(Z_r)_d`` surjects onto ``R(Z_{r+1})_d`` for ``0 <= d <= r < min(n, m)``."""
    report = Report(f"surjection chain n={n} m={m}")
    k = min(n, m)
    graded = [grfrob_signed(n, m, r) for r in range(k + 1)]
    for r in range(k):
        for d in range(r + 1):
            upper, lower = graded[r].q_part(d), graded[r + 1].q_part(d)
            report.add(f"chain[r={r},d={d}]", upper.dominates(lower))
    return report


def isomorphism_grid(n: int, m: int) -> dict[tuple[int, int], bool]:
    """``(r, d) -> whether R(Z_r)_d and R(Z_{r+1})_d have equal Frobenius images``."""
    k = min(n, m)
    graded = [grfrob_signed(n, m, r) for r in range(k + 1)]
    return {
        (r, d): graded[r].q_part(d) == graded[r + 1].q_part(d)
        for r in range(k)
        for d in range(r + 1)
    }


def star_pattern(n: int, m: int) -> set[tuple[int, int]]:
    """Cells ``(r, d)`` joined to the diagonal cell ``(d, d)`` by isomorphisms.

    Row ``d`` starts at ``r = d`` and extends to the right while consecutive
    pieces have equal Frobenius images.  A row with no isomorphism at all
    keeps its diagonal cell only when ``2d <= min(n, m)``, i.e. when that cell
    lies on or below the line ``d = min(n, m) - r``.
    """
    k = min(n, m)
    grid = isomorphism_grid(n, m)
    stars = set()
    for d in range(k + 1):
        r = d
        run = [(d, d)]
        while r < k and grid[(r, d)]:
            r += 1
            run.append((r, d))
        if len(run) > 1 or 2 * d <= k:
            stars.update(run)
    return stars


def expected_star_pattern(n: int, m: int) -> set[tuple[int, int]]:
    """``{(r, d) : d <= r and d <= min(n, m) - r}``."""
    k = min(n, m)
    return {(r, d) for r in range(k + 1) for d in range(r + 1) if d <= k - r}


def check_surj_to_isom(n: int, m: int) -> Report:
    """Equality for ``d <= min(n, m) - r - 1``; strict surjection reported elsewhere."""
    report = Report(f"surjection to isomorphism n={n} m={m}")
    k = min(n, m)
    grid = isomorphism_grid(n, m)
    for (r, d), iso in sorted(grid.items()):
        if d <= k - r - 1:
            report.add(f"isom[r={r},d={d}]", iso)
        else:
            report.add(f"strict[r={r},d={d}]", True, "isomorphic" if iso else "proper surjection")
    return report


def check_uz_identity(n: int, m: int, oracle_rmax: int | None = None) -> Report:
    """``UZ_r[d+1] - UZ_{r+1}[d] = Z_r[d+1]`` and the difference is Schur-positive.

    For ``r <= oracle_rmax`` the closed upper-rook formula is also compared
    with the oracle on the upper rook locus.
    """
    report = Report(f"upper rook identity n={n} m={m}")
    k = min(n, m)
    uz = [grfrob_uz(n, m, r) for r in range(k + 1)]
    z = [grfrob_signed(n, m, r) for r in range(k + 1)]
    for r in range(k):
        for d in range(r):
            diff = uz[r].q_part(d + 1) - uz[r + 1].q_part(d)
            report.add(f"uz[r={r},d={d}]", diff == z[r].q_part(d + 1))
            report.add(f"uz-positive[r={r},d={d}]", diff.is_schur_positive())
    if oracle_rmax is not None:
        for r in range(min(oracle_rmax, k) + 1):
            report.add(f"uz-oracle[r={r}]", oracle_graded_frobenius(uz_locus(n, m, r)) == uz[r])
    return report
