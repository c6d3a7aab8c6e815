"""Orbit harmonics of rook placement loci.

The package computes graded Frobenius images of the coordinate rings
``R(Z_{n,m,r})`` (rook placements of size ``r`` in an ``n x m`` board under
``S_n x S_m``) and ``R(M_{n,a})`` (involutions with ``a`` fixed points under
``S_n`` conjugation) from closed symmetric-function formulas, and checks them
against a brute-force linear-algebra oracle.

Modules:

* :mod:`.partitions` and :mod:`.symfunc`: partitions, Pieri products, Schur
  expansions with ``Z[q]`` coefficients, truncation;
* :mod:`.lattice`: strip-pair lattice paths, widths and the two bijections;
* :mod:`.formulas`: the closed formulas;
* :mod:`.loci`: the point sets and the group actions on them;
* :mod:`.oracle`: characters, exact linear algebra, orbit harmonics, ideals;
* :mod:`.conjectures` and :mod:`.acceptance`: structural checks.
"""

from .formulas import (
    grfrob,
    grfrob_bad,
    grfrob_good,
    grfrob_involution,
    grfrob_signed,
    grfrob_uz,
    hilbert,
    rook_count,
)
from .partitions import Partition, partitions_of
from .symfunc import DoublySchurExpansion, QPoly, SchurExpansion, schur, schur2

__version__ = "0.1.0"

__all__ = [
    "DoublySchurExpansion",
    "Partition",
    "QPoly",
    "SchurExpansion",
    "__version__",
    "grfrob",
    "grfrob_bad",
    "grfrob_good",
    "grfrob_involution",
    "grfrob_signed",
    "grfrob_uz",
    "hilbert",
    "partitions_of",
    "rook_count",
    "schur",
    "schur2",
]
