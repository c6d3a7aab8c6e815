"""Compare the pure-Python and compiled elimination kernels on oracle workloads.

For each locus the benchmark builds the evaluation rows the oracle feeds to
the echelon (partial-permutation supports of degree at most ``r``), inserts
them with each backend, and then inverts the pivot block with ``adjugate``.
Both backends must agree on rank, pivots and adjugate; the script exits with
status 1 if they do not.

    python3 benchmarks/bench_kernels.py --repeat 3 [--large]
"""

from __future__ import annotations

import argparse
import sys
import time

from rookharmonics.loci import rook_locus
from rookharmonics.oracle import _kernels_py
from rookharmonics.oracle.harmonics import evaluation_vector, partial_permutation_supports

try:
    from rookharmonics.oracle import _kernels as compiled
except ImportError:
    compiled = None

CASES = [(3, 3, 2), (4, 4, 2), (4, 4, 3), (5, 4, 3)]
# The pure adjugate needs about a minute here.
LARGE_CASES = [(5, 5, 3)]


def workload(n: int, m: int, r: int) -> list[list[int]]:
    locus = rook_locus(n, m, r)
    pts = locus.supports()
    rows = []
    for d in range(r + 1):
        for cells in partial_permutation_supports(n, m, d):
            rows.append(evaluation_vector(cells, pts))
    return rows


def run(backend, rows: list[list[int]]):
    ech = backend.Echelon(len(rows[0]))
    kept = []
    start = time.perf_counter()
    for row in rows:
        if ech.insert(row):
            kept.append(row)
    t_echelon = time.perf_counter() - start
    pivots = list(ech.pivots)
    block = [[row[c] for c in pivots] for row in kept]
    start = time.perf_counter()
    adj = backend.adjugate(block)
    t_adjugate = time.perf_counter() - start
    return ech.rank, pivots, adj, t_echelon, t_adjugate


def best_of(repeat: int, backend, rows):
    results = [run(backend, rows) for _ in range(repeat)]
    rank, pivots, adj = results[0][:3]
    return rank, pivots, adj, min(r[3] for r in results), min(r[4] for r in results)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--large", action="store_true", help="include the 600-point locus")
    args = parser.parse_args(argv)
    if compiled is None:
        print("compiled kernels are not built; only the pure backend is available", file=sys.stderr)
    header = f"{'locus':>10} {'rows':>6} {'rank':>5} {'pure ech':>9} {'pure adj':>9} {'cy ech':>9} {'cy adj':>9} {'speedup':>8}"
    print(header)
    ok = True
    for n, m, r in CASES + (LARGE_CASES if args.large else []):
        rows = workload(n, m, r)
        rank, piv, adj, pe, pa = best_of(args.repeat, _kernels_py, rows)
        line = f"{f'Z({n},{m},{r})':>10} {len(rows):>6} {rank:>5} {pe:>9.4f} {pa:>9.4f}"
        if compiled is not None:
            rank2, piv2, adj2, ce, ca = best_of(args.repeat, compiled, rows)
            if (rank2, piv2, adj2) != (rank, piv, adj):
                ok = False
                line += "  MISMATCH"
            line += f" {ce:>9.4f} {ca:>9.4f} {(pe + pa) / (ce + ca):>7.1f}x"
        print(line)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
