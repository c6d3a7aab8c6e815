"""Characters of ``S_n`` and ``S_n x S_m`` and the Frobenius characteristic.

Irreducible character values come from the Murnaghan-Nakayama rule, worked
on beta-sets: removing a border strip of length ``k`` from ``lambda`` is the
same as sliding one bead of the beta-set down by ``k`` onto an empty
position, and the sign is ``(-1)`` to the number of beads jumped over.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence, Union

from ..partitions import Partition, partitions_of
from ..symfunc import DoublySchurExpansion, QPoly, SchurExpansion, _Expansion


class CharacterError(ArithmeticError):
    """A class function did not decompose into a genuine module."""


@lru_cache(maxsize=None)
def _mn(beta: frozenset, rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beta:
            continue
        jumped = sum(1 for x in beta if target < x < b)
        sign = -1 if jumped % 2 else 1
        total += sign * _mn((beta - {b}) | {target}, rest)
    return total


def mn_character(lam: Sequence[int], cls: Sequence[int]) -> int:
    """``chi^lam`` evaluated on permutations of cycle type ``cls``."""
    lam, cls = Partition(lam), Partition(cls)
    if lam.size() != cls.size():
        raise ValueError(f"|{lam}| != |{cls}|")
    ell = len(lam)
    beta = frozenset(p + ell - 1 - i for i, p in enumerate(lam))
    return _mn(beta, tuple(cls))


def z_lambda(cls: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type ``cls``."""
    out = 1
    for part, mult in Counter(cls).items():
        out *= part**mult * factorial(mult)
    return out


def class_size(cls: Sequence[int]) -> int:
    return factorial(sum(cls)) // z_lambda(cls)


ClassLabel = Union[Partition, tuple[Partition, Partition]]


@dataclass(frozen=True)
class ConjClassTable:
    """Conjugacy classes of ``S_n`` (one factor) or ``S_n x S_m`` (two factors)."""

    degrees: tuple[int, ...]
    classes: tuple[tuple[ClassLabel, int], ...]

    @property
    def order(self) -> int:
        out = 1
        for n in self.degrees:
            out *= factorial(n)
        return out

    def labels(self) -> list[ClassLabel]:
        return [label for label, _ in self.classes]


@lru_cache(maxsize=None)
def class_table(*degrees: int) -> ConjClassTable:
    if len(degrees) == 1:
        (n,) = degrees
        return ConjClassTable(degrees, tuple((c, class_size(c)) for c in partitions_of(n)))
    if len(degrees) == 2:
        n, m = degrees
        rows = tuple(
            ((c1, c2), class_size(c1) * class_size(c2))
            for c1 in partitions_of(n)
            for c2 in partitions_of(m)
        )
        return ConjClassTable(degrees, rows)
    raise ValueError("only one or two symmetric-group factors are supported")


def irreducible_character(key: ClassLabel, cls: ClassLabel) -> int:
    """Character of ``V^lam`` (or ``V^lam1 (x) V^lam2``) at a class label of matching shape."""
    if isinstance(key, tuple) and key and isinstance(key[0], tuple):
        return mn_character(key[0], cls[0]) * mn_character(key[1], cls[1])
    return mn_character(key, cls)


def frobenius_from_character(
    chi: Mapping[ClassLabel, object],
    n: int,
    m: int | None = None,
    require_genuine: bool = True,
) -> _Expansion:
    """Decompose a class function into irreducibles.

    The multiplicity of each irreducible is ``(1/|G|) sum_C |C| chi(C) chi^lam(C)``.
    A non-integral multiplicity always raises :class:`CharacterError`; a
    negative one raises too unless ``require_genuine`` is False (useful for
    virtual characters).
    """
    table = class_table(n) if m is None else class_table(n, m)
    values = {label: Fraction(chi.get(label, 0)) for label in table.labels()}
    missing = [label for label in table.labels() if label not in chi]
    if missing:
        raise CharacterError(f"character is missing {len(missing)} classes, e.g. {missing[0]}")
    if m is None:
        keys = partitions_of(n)
        out: _Expansion = SchurExpansion(degrees=(n,))
    else:
        keys = [(a, b) for a in partitions_of(n) for b in partitions_of(m)]
        out = DoublySchurExpansion(degrees=(n, m))
    for key in keys:
        total = sum(
            (size * values[label] * irreducible_character(key, label) for label, size in table.classes),
            Fraction(0),
        )
        mult = total / table.order
        if mult.denominator != 1:
            raise CharacterError(f"multiplicity of {key} is {mult}, not an integer")
        if require_genuine and mult < 0:
            raise CharacterError(f"multiplicity of {key} is negative ({mult})")
        if mult:
            out._accumulate(key, QPoly({0: int(mult)}))
    return out


def character_of(expansion: _Expansion, q_power: int | None = None) -> dict[ClassLabel, int]:
    """Character of the module with the given Frobenius image.

    With ``q_power`` set, only the coefficient of ``q**q_power`` is used;
    otherwise the coefficients are evaluated at ``q = 1``.
    """
    degrees = expansion.degrees
    if degrees is None:
        raise ValueError("expansion has no degree information")
    table = class_table(*degrees)
    chi = {}
    for label, _ in table.classes:
        value = 0
        for key, poly in expansion.items():
            c = poly.at_one() if q_power is None else poly.coefficient(q_power)
            if c:
                value += c * irreducible_character(key, label)
        chi[label] = value
    return chi


def inner_product(chi: Mapping[ClassLabel, object], psi: Mapping[ClassLabel, object], *degrees: int) -> Fraction:
    table = class_table(*degrees)
    total = sum((size * Fraction(chi[c]) * Fraction(psi[c]) for c, size in table.classes), Fraction(0))
    return total / table.order
