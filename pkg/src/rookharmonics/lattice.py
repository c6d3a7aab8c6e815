"""Lattice paths attached to pairs of horizontal strips over a common shape.

Given ``mu`` inside both ``lam1`` and ``lam2`` with both skew shapes horizontal
strips, column ``i`` of the plane contributes one step to a path starting at
the origin: NE (+1) when column ``i`` meets both strips, SE (-1) when it meets
neither, and HE (0) when it meets exactly one.  Past the first parts of the
outer shapes every step is SE, so a finite prefix determines the whole path.

The index sets ``H(d)``, ``H+(d)`` and ``Hwid(d)`` and the maps ``phi`` and
``ls`` (left shadow) between them live here as well.  Window lengths use
``n + m - d - r`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .partitions import Partition, is_horizontal_strip, partitions_of

NE, HE, SE = 1, 0, -1
STEP_NAMES = {NE: "NE", HE: "HE", SE: "SE"}
STEP_VALUES = {name: value for value, name in STEP_NAMES.items()}


class DomainError(ValueError):
    """An argument lies outside the domain of a map."""


@dataclass(frozen=True)
class LatticePath:
    """A finite prefix of steps; every step past the prefix is SE."""

    steps: tuple[int, ...]

    @classmethod
    def from_names(cls, names: Sequence[str]) -> "LatticePath":
        return cls(tuple(STEP_VALUES[s] for s in names))

    def __len__(self) -> int:
        return len(self.steps)

    def step(self, i: int) -> int:
        """Value of step ``i`` (1-based), continuing with SE past the prefix."""
        if i < 1:
            raise IndexError("steps are indexed from 1")
        return self.steps[i - 1] if i <= len(self.steps) else SE

    def height(self, x: int) -> int:
        """Height after ``x`` steps."""
        if x <= len(self.steps):
            return sum(self.steps[:x])
        return sum(self.steps) - (x - len(self.steps))

    def heights(self, upto: int | None = None) -> list[int]:
        """Heights at ``x = 0, 1, ..., upto``."""
        upto = len(self.steps) if upto is None else upto
        out = [0]
        h = 0
        for i in range(1, upto + 1):
            h += self.step(i)
            out.append(h)
        return out

    def extended(self, length: int) -> "LatticePath":
        if length <= len(self.steps):
            return self
        return LatticePath(self.steps + (SE,) * (length - len(self.steps)))

    def names(self) -> list[str]:
        return [STEP_NAMES[s] for s in self.steps]

    def dump(self) -> list[str]:
        h = 0
        lines = []
        for i, s in enumerate(self.steps, start=1):
            h += s
            lines.append(f"x={i} step={STEP_NAMES[s]} h={h}")
        return lines


def _conj(lam: Sequence[int], length: int) -> list[int]:
    """Column lengths of ``lam`` for columns ``1..length``."""
    return [sum(1 for p in lam if p >= c) for c in range(1, length + 1)]


def _check_strips(mu: Partition, lam1: Partition, lam2: Partition) -> None:
    if not (is_horizontal_strip(mu, lam1) and is_horizontal_strip(mu, lam2)):
        raise DomainError(f"{lam1}/{mu} and {lam2}/{mu} must both be horizontal strips")


def lattice_path(mu: Sequence[int], lam1: Sequence[int], lam2: Sequence[int], L: int) -> LatticePath:
    """The first ``L`` steps of the path of ``(mu, lam1, lam2)``."""
    mu, lam1, lam2 = Partition(mu), Partition(lam1), Partition(lam2)
    _check_strips(mu, lam1, lam2)
    cm, c1, c2 = _conj(mu, L), _conj(lam1, L), _conj(lam2, L)
    steps = []
    for i in range(L):
        meets = (c1[i] > cm[i]) + (c2[i] > cm[i])
        steps.append(meets - 1)
    return LatticePath(tuple(steps))


def _pairs_in_prefix(steps: Sequence[int], limit: int) -> list[tuple[int, int]]:
    """Reflection pairs ``(i, j)`` with ``j <= limit`` (steps past the prefix are SE)."""
    heights = [0]
    for x in range(1, limit + 1):
        heights.append(heights[-1] + (steps[x - 1] if x <= len(steps) else SE))
    pairs = []
    for i in range(1, limit + 1):
        if heights[i] - heights[i - 1] != NE:
            continue
        start = heights[i - 1]
        for j in range(i + 1, limit + 1):
            if heights[j] - heights[j - 1] == SE and heights[j] == start:
                pairs.append((i, j))
    return pairs


def _search_bound(path: LatticePath) -> int:
    # Past the prefix the path falls by one per step, so a pair ending there
    # must end no lower than the lowest start height inside the prefix.
    hs = path.heights()
    return len(path) + max(0, hs[-1] - min(hs))


def reflection_pairs(path: LatticePath) -> set[tuple[int, int]]:
    """Every pair ``i < j`` with NE step ``i``, SE step ``j``, start(i) = end(j).

    The SE continuation past the stored prefix is taken into account.
    """
    return set(_pairs_in_prefix(path.steps, _search_bound(path)))


def reflection_pairs_within(path: LatticePath, window: int) -> set[tuple[int, int]]:
    """Reflection pairs with both indices in ``1..window``."""
    return set(_pairs_in_prefix(path.steps, window))


def width(mu: Sequence[int], lam1: Sequence[int], lam2: Sequence[int]) -> int:
    """``max(M, lam1_1, lam2_1)`` where ``M`` is the largest right end of a reflection pair.

    ``M`` is taken to be 0 when the path has no reflection pair.
    """
    mu, lam1, lam2 = Partition(mu), Partition(lam1), Partition(lam2)
    top = max(lam1.first, lam2.first)
    path = lattice_path(mu, lam1, lam2, max(top, 1))
    pairs = reflection_pairs(path)
    M = max((j for _, j in pairs), default=0)
    return max(M, top)


def hori_set(d: int, lam1: Sequence[int], lam2: Sequence[int]) -> list[Partition]:
    """All ``mu |- d`` with ``lam1/mu`` and ``lam2/mu`` both horizontal strips."""
    lam1, lam2 = Partition(lam1), Partition(lam2)
    if d < 0:
        return []
    rows = max(len(lam1), len(lam2))
    lo = [max(lam1.part(i + 1), lam2.part(i + 1)) for i in range(rows)]
    hi = [min(lam1.part(i), lam2.part(i)) for i in range(rows)]
    if any(l > h for l, h in zip(lo, hi)):
        return []
    out: list[Partition] = []
    suffix_lo = [0] * (rows + 1)
    suffix_hi = [0] * (rows + 1)
    for i in range(rows - 1, -1, -1):
        suffix_lo[i] = suffix_lo[i + 1] + lo[i]
        suffix_hi[i] = suffix_hi[i + 1] + hi[i]

    def build(i: int, left: int, parts: list[int]) -> None:
        if i == rows:
            if left == 0:
                out.append(Partition(parts))
            return
        for v in range(hi[i], lo[i] - 1, -1):
            rest = left - v
            if suffix_lo[i + 1] <= rest <= suffix_hi[i + 1]:
                parts.append(v)
                build(i + 1, rest, parts)
                parts.pop()

    if suffix_lo[0] <= d <= suffix_hi[0]:
        build(0, d, [])
    out.sort(reverse=True)
    return out


@dataclass(frozen=True)
class StripPairContext:
    """The data ``(lam1, lam2, n, m, r, d)`` shared by ``phi`` and ``ls``."""

    lam1: Partition
    lam2: Partition
    n: int
    m: int
    r: int
    d: int
    window: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam1", Partition(self.lam1))
        object.__setattr__(self, "lam2", Partition(self.lam2))
        if self.lam1.size() != self.n or self.lam2.size() != self.m:
            raise DomainError("lam1 and lam2 must be partitions of n and m")
        if not 0 <= self.d <= self.r <= min(self.n, self.m):
            raise DomainError("need 0 <= d <= r <= min(n, m)")
        object.__setattr__(self, "window", self.n + self.m - self.d - self.r)

    def fits_window(self) -> bool:
        return max(self.lam1.first, self.lam2.first) <= self.window

    def path(self, mu: Sequence[int]) -> LatticePath:
        top = max(self.window, self.lam1.first, self.lam2.first, 1)
        return lattice_path(mu, self.lam1, self.lam2, top)


def _is_positive(path: LatticePath, window: int) -> bool:
    return min(path.heights(window)) >= 0


def hori_positive(
    d: int, lam1: Sequence[int], lam2: Sequence[int], n: int, m: int, r: int
) -> list[Partition]:
    """Members of ``H(d)`` whose path stays weakly above the axis on ``0..n+m-d-r``."""
    ctx = StripPairContext(Partition(lam1), Partition(lam2), n, m, r, d)
    if not ctx.fits_window():
        raise DomainError("first parts of lam1 and lam2 must not exceed n+m-d-r")
    return [mu for mu in hori_set(d, lam1, lam2) if _is_positive(ctx.path(mu), ctx.window)]


def hori_wid(
    d: int, lam1: Sequence[int], lam2: Sequence[int], n: int, m: int, r: int
) -> list[Partition]:
    """Members of ``H(r)`` whose width is exactly ``n+m-d-r``."""
    if d > r:
        raise DomainError("need d <= r")
    target = n + m - d - r
    return [mu for mu in hori_set(r, lam1, lam2) if width(mu, lam1, lam2) == target]


def _adjust_columns(lam: Partition, columns: Sequence[int], delta: int) -> Partition:
    """Add (or remove) one cell at the bottom of each listed column."""
    if not columns:
        return lam
    top = max(max(columns), lam.first)
    conj = _conj(lam, top)
    for c in columns:
        conj[c - 1] += delta
    if any(v < 0 for v in conj) or any(conj[i] < conj[i + 1] for i in range(len(conj) - 1)):
        raise DomainError(f"adjusting columns {list(columns)} of {lam} does not give a partition")
    return Partition(conj).conjugate()


def first_minimum(heights: Sequence[int]) -> int:
    low = min(heights)
    return heights.index(low)


def last_minimum(heights: Sequence[int]) -> int:
    low = min(heights)
    return len(heights) - 1 - heights[::-1].index(low)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def phi_column(mu: Sequence[int], ctx: StripPairContext) -> int:
    """The column ``x0`` that ``phi`` removes a cell from."""
    mu = Partition(mu)
    _require(ctx.d > 0, "phi needs d > 0")
    _require(ctx.fits_window(), "first parts of lam1 and lam2 exceed the window")
    _require(mu.size() == ctx.d, "mu must be a partition of d")
    path = ctx.path(mu)
    heights = path.heights(ctx.window)
    _require(min(heights) < 0, f"{mu} lies in H+ and is outside the domain of phi")
    return first_minimum(heights)


def phi(mu: Sequence[int], ctx: StripPairContext) -> Partition:
    """Remove the lowest cell of the column where the windowed path first hits its minimum."""
    mu = Partition(mu)
    x0 = phi_column(mu, ctx)
    return _adjust_columns(mu, [x0], -1)


def phi_inverse(nu: Sequence[int], ctx: StripPairContext) -> Partition:
    """Add a cell to column ``x0' + 1`` where ``x0'`` is the last minimum of the windowed path."""
    nu = Partition(nu)
    _require(ctx.d > 0, "phi needs d > 0")
    _require(ctx.fits_window(), "first parts of lam1 and lam2 exceed the window")
    _require(nu.size() == ctx.d - 1, "nu must be a partition of d - 1")
    path = ctx.path(nu)
    x0 = last_minimum(path.heights(ctx.window))
    return _adjust_columns(nu, [x0 + 1], +1)


def ls(mu: Sequence[int], ctx: StripPairContext) -> Partition:
    """Left shadow: add a cell to each NE column of the window not opening a reflection pair."""
    mu = Partition(mu)
    _require(ctx.fits_window(), "first parts of lam1 and lam2 exceed the window")
    _require(mu.size() == ctx.d, "mu must be a partition of d")
    path = ctx.path(mu)
    W = ctx.window
    _require(_is_positive(path, W), f"{mu} is not in H+")
    opened = {i for i, _ in reflection_pairs_within(path, W)}
    lit = [i for i in range(1, W + 1) if path.step(i) == NE and i not in opened]
    return _adjust_columns(mu, lit, +1)


def ls_inverse(nu: Sequence[int], ctx: StripPairContext) -> Partition:
    """Remove the lowest cell of each SE column of the window not closing a reflection pair."""
    nu = Partition(nu)
    _require(nu.size() == ctx.r, "nu must be a partition of r")
    _require(width(nu, ctx.lam1, ctx.lam2) == ctx.window, f"{nu} is not in Hwid")
    path = ctx.path(nu)
    W = ctx.window
    closed = {j for _, j in reflection_pairs_within(path, W)}
    lit = [j for j in range(1, W + 1) if path.step(j) == SE and j not in closed]
    return _adjust_columns(nu, lit, -1)


@dataclass
class BijectionReport:
    """Outcome of an exhaustive bijection check."""

    name: str
    contexts: int = 0
    elements: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < 20:
            self.failures.append(message)
        else:
            self.failures[-1] = "... more failures"


def contexts(n: int, m: int) -> Iterator[StripPairContext]:
    """Every admissible ``(lam1, lam2, r, d)`` for sizes ``n, m``."""
    for lam1 in partitions_of(n):
        for lam2 in partitions_of(m):
            for r in range(min(n, m) + 1):
                for d in range(r + 1):
                    ctx = StripPairContext(lam1, lam2, n, m, r, d)
                    if ctx.fits_window():
                        yield ctx


def check_phi(n: int, m: int) -> BijectionReport:
    """Exhaustively certify ``phi: H(d) minus H+(d) -> H(d-1)`` with its inverse."""
    report = BijectionReport("phi")
    for ctx in contexts(n, m):
        if ctx.d == 0:
            continue
        report.contexts += 1
        positive = set(hori_positive(ctx.d, ctx.lam1, ctx.lam2, n, m, ctx.r))
        domain = [mu for mu in hori_set(ctx.d, ctx.lam1, ctx.lam2) if mu not in positive]
        codomain = hori_set(ctx.d - 1, ctx.lam1, ctx.lam2)
        report.elements += len(domain)
        tag = f"lam1={ctx.lam1} lam2={ctx.lam2} r={ctx.r} d={ctx.d}"
        if len(domain) != len(codomain):
            report.fail(f"{tag}: |domain|={len(domain)} |codomain|={len(codomain)}")
        images = set()
        codomain_set = set(codomain)
        for mu in domain:
            try:
                x0 = phi_column(mu, ctx)
                nu = phi(mu, ctx)
                back = phi_inverse(nu, ctx)
            except DomainError as exc:
                report.fail(f"{tag} mu={mu}: {exc}")
                continue
            if not 0 < x0 < ctx.window:
                report.fail(f"{tag} mu={mu}: x0={x0} outside (0, {ctx.window})")
            if nu not in codomain_set:
                report.fail(f"{tag} mu={mu}: image {nu} not in H(d-1)")
            if back != mu:
                report.fail(f"{tag} mu={mu}: inverse gives {back}")
            images.add(nu)
        if len(images) != len(domain):
            report.fail(f"{tag}: phi is not injective")
        for nu in codomain:
            try:
                mu = phi_inverse(nu, ctx)
            except DomainError as exc:
                report.fail(f"{tag} nu={nu}: {exc}")
                continue
            if mu in positive or mu not in set(domain) or phi(mu, ctx) != nu:
                report.fail(f"{tag} nu={nu}: inverse image {mu} is not a preimage")
    return report


def check_ls(n: int, m: int) -> BijectionReport:
    """Exhaustively certify ``ls: H+(d) -> Hwid(d)`` with its inverse."""
    report = BijectionReport("ls")
    for ctx in contexts(n, m):
        report.contexts += 1
        domain = hori_positive(ctx.d, ctx.lam1, ctx.lam2, n, m, ctx.r)
        codomain = hori_wid(ctx.d, ctx.lam1, ctx.lam2, n, m, ctx.r)
        report.elements += len(domain)
        tag = f"lam1={ctx.lam1} lam2={ctx.lam2} r={ctx.r} d={ctx.d}"
        if len(domain) != len(codomain):
            report.fail(f"{tag}: |H+|={len(domain)} |Hwid|={len(codomain)}")
        codomain_set = set(codomain)
        images = set()
        for mu in domain:
            try:
                nu = ls(mu, ctx)
                back = ls_inverse(nu, ctx)
            except DomainError as exc:
                report.fail(f"{tag} mu={mu}: {exc}")
                continue
            if nu not in codomain_set:
                report.fail(f"{tag} mu={mu}: image {nu} not in Hwid")
            if back != mu:
                report.fail(f"{tag} mu={mu}: inverse gives {back}")
            images.add(nu)
        if len(images) != len(domain):
            report.fail(f"{tag}: ls is not injective")
        domain_set = set(domain)
        for nu in codomain:
            try:
                mu = ls_inverse(nu, ctx)
            except DomainError as exc:
                report.fail(f"{tag} nu={nu}: {exc}")
                continue
            if mu not in domain_set or ls(mu, ctx) != nu:
                report.fail(f"{tag} nu={nu}: inverse image {mu} is not a preimage")
    return report
