"""Sparse Schur expansions with coefficients in Z[q].

Two containers are provided: :class:`SchurExpansion` for elements of a single
ring of symmetric functions and :class:`DoublySchurExpansion` for the tensor
square, indexed by pairs of partitions.  Both keep a normal form with no zero
coefficients, and both render terms in a canonical order (reverse lexicographic
on the index, then increasing q-exponent).

The module also hosts the symmetric functions ``SF_d`` that index the graded
pieces of the rook-placement modules, the truncation operator, and checkers
for the identities relating them.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .partitions import (
    EMPTY,
    Partition,
    even_partitions,
    format_partition,
    partitions_of,
    pieri_h,
)


class QPoly:
    """Polynomial in ``q`` with integer coefficients, stored sparsely."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        c: dict[int, int] = {}
        if coeffs:
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError("exponents must be nonnegative")
                if v:
                    c[int(e)] = int(v)
        self._c = c

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> "QPoly":
        return cls(dict(enumerate(coeffs)))

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def coefficient(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def to_list(self, length: int | None = None) -> list[int]:
        top = self.degree() + 1 if length is None else length
        return [self._c.get(e, 0) for e in range(top)]

    def degree(self) -> int:
        """Largest exponent; ``-1`` for the zero polynomial."""
        return max(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._c.values())

    def __call__(self, q: int) -> int:
        return sum(v * q**e for e, v in self._c.items())

    def at_one(self) -> int:
        return sum(self._c.values())

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k``."""
        return QPoly({e + k: v for e, v in self._c.items()})

    def __add__(self, other: "QPoly | int") -> "QPoly":
        other = _as_qpoly(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return QPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "QPoly | int") -> "QPoly":
        return self + (-_as_qpoly(other))

    def __rsub__(self, other: int) -> "QPoly":
        return _as_qpoly(other) - self

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            return QPoly({e: v * other for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return QPoly(c)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"QPoly({dict(sorted(self._c.items()))!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        pieces = []
        for e in sorted(self._c):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not pieces:
                pieces.append(body if v > 0 else f"-{body}")
            else:
                pieces.append(("+ " if v > 0 else "- ") + body)
        return " ".join(pieces)


def _as_qpoly(value: "QPoly | int") -> QPoly:
    if isinstance(value, QPoly):
        return value
    return QPoly({0: value})


ONE = QPoly({0: 1})

Key = Union[Partition, tuple[Partition, Partition]]


class _Expansion:
    """Shared arithmetic for Schur expansions; subclasses fix the key shape."""

    __slots__ = ("_terms", "degrees")
    arity = 0

    def __init__(self, terms: Mapping | None = None, degrees: tuple[int, ...] | None = None) -> None:
        self._terms: dict = {}
        self.degrees = degrees
        if terms:
            for key, value in terms.items():
                self._accumulate(self._normalize_key(key), _as_qpoly(value))

    def _normalize_key(self, key):
        raise NotImplementedError

    def _key_degrees(self, key) -> tuple[int, ...]:
        raise NotImplementedError

    def _accumulate(self, key, value: QPoly) -> None:
        if value.is_zero():
            return
        kd = self._key_degrees(key)
        if self.degrees is None:
            self.degrees = kd
        elif kd != self.degrees:
            raise ValueError(f"term of degree {kd} added to expansion of degree {self.degrees}")
        new = self._terms.get(key, None)
        new = value if new is None else new + value
        if new.is_zero():
            self._terms.pop(key, None)
        else:
            self._terms[key] = new

    def _empty_like(self):
        return type(self)(degrees=self.degrees)

    def _check_compatible(self, other: "_Expansion") -> None:
        if type(other) is not type(self):
            raise TypeError("cannot combine expansions of different kinds")
        if self.degrees is not None and other.degrees is not None and self.degrees != other.degrees:
            raise ValueError(f"degree mismatch: {self.degrees} vs {other.degrees}")

    def copy(self):
        out = self._empty_like()
        out._terms = dict(self._terms)
        return out

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __getitem__(self, key) -> QPoly:
        return self._terms.get(self._normalize_key(key), QPoly())

    def __add__(self, other):
        self._check_compatible(other)
        out = self.copy()
        if out.degrees is None:
            out.degrees = other.degrees
        for k, v in other._terms.items():
            out._accumulate(k, v)
        return out

    def __neg__(self):
        out = self._empty_like()
        out._terms = {k: -v for k, v in self._terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: "QPoly | int"):
        factor = _as_qpoly(factor)
        out = self._empty_like()
        for k, v in self._terms.items():
            out._accumulate(k, v * factor)
        return out

    def __mul__(self, factor: "QPoly | int"):
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Expansion) or type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def shift_q(self, k: int):
        out = self._empty_like()
        out._terms = {key: v.shift(k) for key, v in self._terms.items()}
        return out

    def q_part(self, d: int):
        """The coefficient of ``q**d`` as an expansion with constant coefficients."""
        out = self._empty_like()
        for k, v in self._terms.items():
            c = v.coefficient(d)
            if c:
                out._terms[k] = QPoly({0: c})
        return out

    def at_q_one(self):
        out = self._empty_like()
        for k, v in self._terms.items():
            c = v.at_one()
            if c:
                out._terms[k] = QPoly({0: c})
        return out

    def max_q_degree(self) -> int:
        return max((v.degree() for v in self._terms.values()), default=-1)

    def is_schur_positive(self) -> bool:
        return all(v.is_nonnegative() for v in self._terms.values())

    def dominates(self, other) -> bool:
        """Coefficientwise ``self >= other`` for every Schur index and q-power."""
        return (self - other).is_schur_positive()

    def filter(self, keep: Callable[..., bool]):
        out = self._empty_like()
        out._terms = {k: v for k, v in self._terms.items() if keep(k)}
        return out

    def sorted_keys(self) -> list:
        return sorted(self._terms, reverse=True)

    def term_lines(self) -> list[tuple[int, object, int]]:
        """``(exponent, key, coefficient)`` triples in canonical order."""
        lines = []
        for key in self.sorted_keys():
            poly = self._terms[key]
            for e in sorted(poly.coeffs()):
                lines.append((e, key, poly.coefficient(e)))
        return lines


class SchurExpansion(_Expansion):
    """Finite sum of Schur functions ``s_lambda`` with coefficients in Z[q]."""

    __slots__ = ()
    arity = 1

    def _normalize_key(self, key) -> Partition:
        return Partition(key)

    def _key_degrees(self, key) -> tuple[int]:
        return (key.size(),)

    def render(self) -> list[str]:
        return [f"q^{e}  s{format_partition(lam)}  {c}" for e, lam, c in self.term_lines()]

    def __repr__(self) -> str:
        inside = ", ".join(f"{format_partition(k)}: {v}" for k, v in sorted(self._terms.items(), reverse=True))
        return f"SchurExpansion({{{inside}}})"


class DoublySchurExpansion(_Expansion):
    """Finite sum of ``s_lambda (x) s_mu`` with coefficients in Z[q]."""

    __slots__ = ()
    arity = 2

    def _normalize_key(self, key) -> tuple[Partition, Partition]:
        lam1, lam2 = key
        return (Partition(lam1), Partition(lam2))

    def _key_degrees(self, key) -> tuple[int, int]:
        return (key[0].size(), key[1].size())

    def render(self) -> list[str]:
        return [
            f"q^{e}  s{format_partition(l1)}*s{format_partition(l2)}  {c}"
            for e, (l1, l2), c in self.term_lines()
        ]

    def __repr__(self) -> str:
        inside = ", ".join(
            f"({format_partition(a)}, {format_partition(b)}): {v}"
            for (a, b), v in sorted(self._terms.items(), reverse=True)
        )
        return f"DoublySchurExpansion({{{inside}}})"


def schur(*parts: Iterable[int], coeff: "QPoly | int" = 1) -> SchurExpansion:
    """``coeff * s_lambda``; ``schur((2, 1))`` or ``schur(2, 1)`` both work."""
    lam = parts[0] if len(parts) == 1 and not isinstance(parts[0], int) else parts
    lam = Partition(lam)
    return SchurExpansion({lam: coeff}, degrees=(lam.size(),))


def schur2(lam1: Iterable[int], lam2: Iterable[int], coeff: "QPoly | int" = 1) -> DoublySchurExpansion:
    """``coeff * s_lam1 (x) s_lam2``."""
    l1, l2 = Partition(lam1), Partition(lam2)
    return DoublySchurExpansion({(l1, l2): coeff}, degrees=(l1.size(), l2.size()))


def zero_double(n: int, m: int) -> DoublySchurExpansion:
    return DoublySchurExpansion(degrees=(n, m))


def zero_single(n: int) -> SchurExpansion:
    return SchurExpansion(degrees=(n,))


def tensor(left: SchurExpansion, right: SchurExpansion) -> DoublySchurExpansion:
    """Outer tensor product of two single expansions."""
    out = DoublySchurExpansion(degrees=(left.degrees or (0,))[:1] + (right.degrees or (0,))[:1])
    for l1, v1 in left.items():
        for l2, v2 in right.items():
            out._accumulate((l1, l2), v1 * v2)
    return out


def truncate(F: _Expansion, L: int) -> _Expansion:
    """Keep the terms whose index partitions all have first part at most ``L``."""
    if isinstance(F, DoublySchurExpansion):
        return F.filter(lambda key: key[0].first <= L and key[1].first <= L)
    return F.filter(lambda key: key.first <= L)


def first_part_equals(F: _Expansion, *targets: int) -> _Expansion:
    """Keep terms whose first parts equal ``targets`` (one per tensor factor)."""
    if isinstance(F, DoublySchurExpansion):
        p, q = targets
        return F.filter(lambda key: key[0].first == p and key[1].first == q)
    (p,) = targets
    return F.filter(lambda key: key.first == p)


def mul_h(F: _Expansion, k: int, side: str = "left") -> _Expansion:
    """Multiply one tensor factor by ``h_k`` using the Pieri rule."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if isinstance(F, DoublySchurExpansion):
        n, m = F.degrees or (0, 0)
        degrees = (n + k, m) if side == "left" else (n, m + k)
        out = DoublySchurExpansion(degrees=degrees)
        for (l1, l2), v in F.items():
            if side == "left":
                for lam in pieri_h(l1, k):
                    out._accumulate((lam, l2), v)
            else:
                for lam in pieri_h(l2, k):
                    out._accumulate((l1, lam), v)
        return out
    (n,) = F.degrees or (0,)
    out1 = SchurExpansion(degrees=(n + k,))
    for lam0, v in F.items():
        for lam in pieri_h(lam0, k):
            out1._accumulate(lam, v)
    return out1


def schur_times_h(mu: Sequence[int], k: int) -> SchurExpansion:
    """``s_mu * h_k`` as a Schur expansion."""
    mu = Partition(mu)
    out = SchurExpansion(degrees=(mu.size() + k,))
    for lam in pieri_h(mu, k):
        out._accumulate(lam, ONE)
    return out


def _strip_pair_sum(
    d: int, a: int, b: int, keep1: Callable[[Partition], bool], keep2: Callable[[Partition], bool]
) -> DoublySchurExpansion:
    """``sum_{mu |- d} {s_mu h_a} (x) {s_mu h_b}`` with per-factor filters."""
    out = DoublySchurExpansion(degrees=(d + a, d + b))
    for mu in partitions_of(d):
        left = [lam for lam in pieri_h(mu, a) if keep1(lam)]
        if not left:
            continue
        right = [lam for lam in pieri_h(mu, b) if keep2(lam)]
        for l1 in left:
            for l2 in right:
                out._accumulate((l1, l2), ONE)
    return out


def sf(n: int, m: int, d: int) -> DoublySchurExpansion:
    """``SF_d = sum_{mu |- d} (s_mu h_{n-d}) (x) (s_mu h_{m-d})`` in degree ``(n, m)``."""
    if d < 0 or d > min(n, m):
        raise ValueError(f"d={d} outside 0..min(n, m)={min(n, m)}")
    return _strip_pair_sum(d, n - d, m - d, lambda _: True, lambda _: True)


def sf_or_zero(n: int, m: int, d: int) -> DoublySchurExpansion:
    """Like :func:`sf` but returns zero for ``d < 0`` (so ``SF_{-1} = 0``)."""
    if d < 0:
        return zero_double(n, m)
    return sf(n, m, d)


def plethysm_h_h2(d: int) -> SchurExpansion:
    """``h_d[h_2]``: the sum of ``s_lambda`` over even partitions of ``2d``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return SchurExpansion({lam: 1 for lam in even_partitions(2 * d)}, degrees=(2 * d,))


def coefficient(F: _Expansion, lam1: Sequence[int], lam2: Sequence[int] | None = None) -> QPoly:
    """The coefficient of ``s_lam1 (x) s_lam2`` (or of ``s_lam1`` for single expansions)."""
    if isinstance(F, DoublySchurExpansion):
        if lam2 is None:
            raise TypeError("doubly symmetric expansions need two partitions")
        return F[(lam1, lam2)]
    return F[lam1]


def coef_closed_form(
    d: int, a: int, b: int, p: int, q: int, lam1: Sequence[int], lam2: Sequence[int]
) -> int:
    """Closed-form coefficient of ``s_lam1 (x) s_lam2`` in the filtered strip-pair sum.

    The sum in question is ``sum_{mu |- d} {s_mu h_a}_{first=p} (x) {s_mu h_b}_{first=q}``.
    The coefficient vanishes unless the first parts are ``p`` and ``q`` and the
    two shapes interlace in the sense ``min(l1_i, l2_i) >= max(l1_{i+1}, l2_{i+1})``.
    When they do, it is read off the product of q-integers
    ``prod_i [min(l1_i, l2_i) - max(l1_{i+1}, l2_{i+1}) + 1]_q`` at the exponent
    ``d - sum_i max(l1_{i+1}, l2_{i+1})``.
    """
    l1, l2 = Partition(lam1), Partition(lam2)
    if l1.size() != a + d or l2.size() != b + d:
        raise ValueError("partition sizes must be a+d and b+d")
    if l1.first != p or l2.first != q:
        return 0
    rows = max(len(l1), len(l2))
    lows, spans = [], []
    for i in range(rows):
        upper = min(l1.part(i), l2.part(i))
        lower = max(l1.part(i + 1), l2.part(i + 1))
        if upper < lower:
            return 0
        lows.append(lower)
        spans.append(upper - lower)
    target = d - sum(lows)
    if target < 0:
        return 0
    # Coefficients of prod_i (1 + q + ... + q^span_i), truncated at the target exponent.
    poly = [1] + [0] * target
    for span in spans:
        nxt = [0] * (target + 1)
        for e, c in enumerate(poly):
            if c:
                for k in range(min(span, target - e) + 1):
                    nxt[e + k] += c
        poly = nxt
    return poly[target]


def filtered_strip_pair_sum(d: int, a: int, b: int, p: int, q: int) -> DoublySchurExpansion:
    """``sum_{mu |- d} {s_mu h_a}_{first=p} (x) {s_mu h_b}_{first=q}`` by direct expansion."""
    return _strip_pair_sum(d, a, b, lambda lam: lam.first == p, lambda lam: lam.first == q)


def interchange_is_vacuous(d: int, a: int, b: int, p: int, q: int) -> bool:
    """True when the right-hand side of the interchange identity has a negative index."""
    top = max(p, q)
    return top - b < 0 or top - a < 0 or d + a + b - top < 0


def schur_interchange_sides(
    d: int, a: int, b: int, p: int, q: int
) -> tuple[DoublySchurExpansion, DoublySchurExpansion]:
    """Both sides of the interchange identity, reading ``h_k = 0`` for ``k < 0``."""
    top = max(p, q)
    lhs = filtered_strip_pair_sum(d, a, b, p, q)
    if interchange_is_vacuous(d, a, b, p, q):
        return lhs, zero_double(d + a, d + b)
    rhs = filtered_strip_pair_sum(d + a + b - top, top - b, top - a, p, q)
    return lhs, rhs


def verify_schur_interchange(d: int, a: int, b: int, p: int, q: int) -> bool:
    """Compare both sides of the interchange identity exactly.

    Parameter tuples whose right-hand side would need ``h`` with a negative
    index are vacuous and return True; :func:`interchange_is_vacuous` reports them.
    """
    if min(d, a, b, p, q) < 0:
        raise ValueError("all parameters must be nonnegative")
    if interchange_is_vacuous(d, a, b, p, q):
        return True
    lhs, rhs = schur_interchange_sides(d, a, b, p, q)
    return lhs == rhs


def signed_piece(n: int, m: int, r: int, d: int) -> DoublySchurExpansion:
    """``{SF_d - SF_{d-1}}`` truncated at ``n+m-d-r``."""
    return truncate(sf_or_zero(n, m, d) - sf_or_zero(n, m, d - 1), n + m - d - r)


def verify_refinement(n: int, m: int, r: int) -> bool:
    """``SF_r`` equals the sum over ``d <= r`` of the truncated differences."""
    if not 0 <= r <= min(n, m):
        raise ValueError("r must lie in 0..min(n, m)")
    total = zero_double(n, m)
    for d in range(r + 1):
        total = total + signed_piece(n, m, r, d)
    return total == sf(n, m, r)


def verify_schur_sum(n: int, m: int) -> bool:
    """Two truncated families of ``SF_d`` add up to ``sum_r SF_r``."""
    k = min(n, m)
    lhs = zero_double(n, m)
    for d in range(k + 1):
        lhs = lhs + truncate(sf(n, m, d), n + m - 2 * d)
    for d in range(k):
        lhs = lhs + truncate(sf(n, m, d), n + m - 2 * d - 1)
    rhs = zero_double(n, m)
    for r in range(k + 1):
        rhs = rhs + sf(n, m, r)
    return lhs == rhs


__all__ = [
    "EMPTY",
    "ONE",
    "DoublySchurExpansion",
    "QPoly",
    "SchurExpansion",
    "coef_closed_form",
    "coefficient",
    "filtered_strip_pair_sum",
    "first_part_equals",
    "interchange_is_vacuous",
    "mul_h",
    "plethysm_h_h2",
    "schur",
    "schur2",
    "schur_interchange_sides",
    "schur_times_h",
    "sf",
    "sf_or_zero",
    "signed_piece",
    "tensor",
    "truncate",
    "verify_refinement",
    "verify_schur_interchange",
    "verify_schur_sum",
    "zero_double",
    "zero_single",
]
