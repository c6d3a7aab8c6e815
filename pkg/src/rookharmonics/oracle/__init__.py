"""Brute-force ground truth: characters, exact linear algebra, orbit harmonics and ideals.

Nothing here calls the closed formulas, so agreement between the two is a
genuine check.
"""

from .characters import frobenius_from_character, mn_character
from .harmonics import graded_span, oracle_graded_frobenius, oracle_hilbert
from .ideals import verify_ideal_equality, verify_involution_ideal
from .linalg import BACKEND, ExactMatrix, IntEchelon

__all__ = [
    "BACKEND",
    "ExactMatrix",
    "IntEchelon",
    "frobenius_from_character",
    "graded_span",
    "mn_character",
    "oracle_graded_frobenius",
    "oracle_hilbert",
    "verify_ideal_equality",
    "verify_involution_ideal",
]
