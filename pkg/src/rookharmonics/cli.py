"""Command-line interface.

Output is line oriented and byte-stable: expansions print one term per line
in canonical order, verifications print ``CHECK <name> <PASS|FAIL> <detail>``.
``--format records`` switches to one ``key=value`` record per line.

Exit codes: 0 when everything printed is a success, 1 when a verification
fails, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from . import __version__
from .formulas import METHODS, grfrob, grfrob_involution, hilbert
from .lattice import DomainError, check_ls, check_phi, lattice_path, reflection_pairs, width
from .loci import enumerate_involutions, enumerate_rook, enumerate_uz, format_placement
from .partitions import Partition, format_partition, parse_partition
from .symfunc import QPoly, _Expansion, verify_refinement, verify_schur_sum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ----------------------------------------------------------------- output


class Printer:
    """Renders terms, polynomials and check lines as text or records."""

    def __init__(self, fmt: str, stream=None) -> None:
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self.failed = False

    def emit(self, line: str) -> None:
        print(line, file=self.stream)

    def expansion(self, F: _Expansion) -> None:
        if self.fmt == "text":
            for line in F.render():
                self.emit(line)
            return
        for e, key, c in F.term_lines():
            if F.arity == 2:
                l1, l2 = key
                self.emit(f"kind=term q={e} l1={format_partition(l1)} l2={format_partition(l2)} c={c}")
            else:
                self.emit(f"kind=term q={e} l={format_partition(key)} c={c}")

    def polynomial(self, poly: QPoly) -> None:
        if self.fmt == "text":
            self.emit(str(poly))
            return
        for e in sorted(poly.coeffs()):
            self.emit(f"kind=hilbert q={e} c={poly.coefficient(e)}")

    def value(self, label: str, value: object) -> None:
        self.emit(str(value) if self.fmt == "text" else f"kind={label} value={value}")

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.failed |= not ok
        status = "PASS" if ok else "FAIL"
        if self.fmt == "text":
            self.emit(f"CHECK {name} {status} {detail}".rstrip())
        else:
            record = f"kind=check name={name} status={status}"
            self.emit(f"{record} detail={detail.replace(' ', '_')}" if detail else record)

    def info(self, text: str) -> None:
        if self.fmt == "text":
            self.emit(text)
        else:
            self.emit(f"kind=info text={text.replace(' ', '_')}")


def _parallel_map(fn: Callable, items: Sequence, jobs: int) -> list:
    """``list(map(fn, items))``, optionally over a process pool; order is preserved."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ----------------------------------------------------------------- helpers


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command}: missing {' '.join(missing)}")


# Default size limits for the expensive commands; raise them with --max-size.
DEFAULT_MAX_SIZE = {"oracle": 5, "conjecture": 6, "verify": 6}


def _check_budget(args: argparse.Namespace) -> None:
    limit = args.max_size if args.max_size is not None else DEFAULT_MAX_SIZE[args.command]
    sizes = [v for v in (args.n, getattr(args, "m", None)) if v is not None]
    if max(sizes, default=0) > limit:
        raise UsageError(f"{args.command}: n, m above {limit} can run for a long time; pass --max-size to allow it")


def _locus(args: argparse.Namespace):
    from .loci import involution_locus, rook_locus, uz_locus

    if args.type == "involution":
        _require(args, "n", "a")
        return involution_locus(args.n, args.a)
    _require(args, "n", "m", "r")
    build = rook_locus if args.type == "rook" else uz_locus
    return build(args.n, args.m, args.r)


# ----------------------------------------------------------------- workers
# Module-level so that process pools can pickle them.


def _report_lines(report) -> list[tuple[str, bool, str]]:
    return [(c.name, c.ok, c.detail) for c in report.checks]


def _log_concavity_task(nmr: tuple[int, int, int]):
    from .conjectures import check_log_concavity

    return _report_lines(check_log_concavity(*nmr))


def _criterion_task(number: int):
    from .acceptance import run_criterion

    return run_criterion(number)


# ----------------------------------------------------------------- commands


def cmd_grfrob(args, out: Printer) -> None:
    F = grfrob(args.n, args.m, args.r, args.method)
    if args.hilbert:
        out.polynomial(hilbert(F))
    else:
        out.expansion(F)


def cmd_grfrob_involution(args, out: Printer) -> None:
    F = grfrob_involution(args.n, args.a)
    if args.hilbert:
        out.polynomial(hilbert(F))
    else:
        out.expansion(F)


def cmd_hilbert(args, out: Printer) -> None:
    if args.a is not None:
        F = grfrob_involution(args.n, args.a)
    else:
        _require(args, "m", "r")
        F = grfrob(args.n, args.m, args.r, args.method)
    out.polynomial(hilbert(F))


def cmd_loci(args, out: Printer) -> None:
    if args.type == "involution":
        _require(args, "n", "a")
        points = [w.cells() for w in enumerate_involutions(args.n, args.a)]
    else:
        _require(args, "n", "m", "r")
        enum = enumerate_rook if args.type == "rook" else enumerate_uz
        points = enum(args.n, args.m, args.r)
    if args.action == "count":
        out.value("count", len(points))
    else:
        for p in sorted(sorted(p) for p in points):
            out.emit(format_placement(p))


def cmd_paths(args, out: Printer) -> None:
    length = args.length or max(args.lam1.first, args.lam2.first, 1)
    path = lattice_path(args.mu, args.lam1, args.lam2, length)
    for line in path.dump():
        out.emit(line)
    pairs = sorted(reflection_pairs(path))
    out.emit("pairs " + " ".join(f"({i},{j})" for i, j in pairs) if pairs else "pairs none")
    out.emit(f"width {width(args.mu, args.lam1, args.lam2)}")


def cmd_oracle(args, out: Printer) -> None:
    from .oracle.harmonics import oracle_graded_frobenius, oracle_hilbert

    _check_budget(args)
    locus = _locus(args)
    if args.hilbert:
        dmax = args.dmax
        if dmax is None:
            from .oracle.harmonics import graded_span

            dmax = len(graded_span(locus).ranks) - 1
        out.polynomial(QPoly.from_list(oracle_hilbert(locus, dmax)))
    else:
        out.expansion(oracle_graded_frobenius(locus, args.dmax))


def cmd_verify(args, out: Printer) -> None:
    _check_budget(args)
    what = args.what
    if what == "ideal":
        from .oracle.ideals import verify_ideal_equality, verify_involution_ideal

        if args.a is not None:
            dmax = args.dmax if args.dmax is not None else (args.n - args.a) // 2 + 1
            report = verify_involution_ideal(args.n, args.a, dmax)
        else:
            _require(args, "m", "r")
            dmax = args.dmax if args.dmax is not None else args.r + 1
            report = verify_ideal_equality(args.n, args.m, args.r, dmax)
        for line in report.lines:
            out.info(line)
        out.check("ideal", report.ok, "; ".join(report.failures))
        return
    _require(args, "m")
    n, m = args.n, args.m
    if what == "identities":
        for r in range(min(n, m) + 1):
            out.check(f"refinement[r={r}]", verify_refinement(n, m, r))
        out.check("schur-sum", verify_schur_sum(n, m))
    elif what == "bijections":
        for report in (check_phi(n, m), check_ls(n, m)):
            detail = "" if report.ok else report.failures[0]
            out.check(report.name, report.ok, detail)
    else:
        from .conjectures import check_surj_to_isom, check_surjection_chain, check_uz_identity

        if what == "chain":
            report = check_surjection_chain(n, m)
        elif what == "isom":
            report = check_surj_to_isom(n, m)
        else:
            report = check_uz_identity(n, m, args.oracle_rmax)
        for c in report.checks:
            out.check(c.name, c.ok, c.detail)
        if what == "isom":
            from .conjectures import expected_star_pattern, star_pattern

            stars = star_pattern(n, m)
            rows = " ".join(f"r={r}:{max(d for rr, d in stars if rr == r)}" for r in range(min(n, m) + 1))
            out.check("star-pattern", stars == expected_star_pattern(n, m), f"top star per column {rows}")


def cmd_conjecture(args, out: Printer) -> None:
    _check_budget(args)
    rs = [args.r] if args.r is not None else list(range(min(args.n, args.m) + 1))
    results = _parallel_map(_log_concavity_task, [(args.n, args.m, r) for r in rs], args.jobs)
    for lines in results:
        for name, ok, detail in lines:
            out.check(name, ok, detail)
    if not any(results):
        out.info("no interior degrees to check")


def cmd_selftest(args, out: Printer) -> None:
    from .acceptance import CRITERIA, format_line

    numbers = args.criteria or [k for k, _, _ in CRITERIA]
    known = {k for k, _, _ in CRITERIA}
    unknown = [k for k in numbers if k not in known]
    if unknown:
        raise UsageError(f"unknown criteria {unknown}")
    for number, (ok, detail, _seconds) in zip(numbers, _parallel_map(_criterion_task, numbers, args.jobs)):
        out.failed |= not ok
        if out.fmt == "text":
            out.emit(format_line(number, ok, detail))
        else:
            out.check(f"criterion-{number}", ok, detail)


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    def options(default_format, default_jobs) -> argparse.ArgumentParser:
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--format", choices=["text", "records"], default=default_format, help="output style")
        p.add_argument("--jobs", type=int, default=default_jobs, help="worker processes for independent cases")
        return p

    # Global flags may appear before or after the subcommand; the copies on
    # the subcommands only set a value when given, so they never mask the top level.
    common = options(argparse.SUPPRESS, argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="rookharmonics",
        description="Graded Frobenius images of rook placement loci and related checks.",
        parents=[options("text", 1)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help: str, fn, **kw) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common], **kw)
        p.set_defaults(func=fn)
        return p

    p = add("grfrob", "graded Frobenius image of R(Z_{n,m,r})", cmd_grfrob)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--method", choices=sorted(METHODS), default="signed")
    p.add_argument("--hilbert", action="store_true", help="print the Hilbert series instead")

    p = add("grfrob-involution", "graded Frobenius image of R(M_{n,a})", cmd_grfrob_involution)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--hilbert", action="store_true")

    p = add("hilbert", "Hilbert series from a closed formula", cmd_hilbert)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg)
    p.add_argument("--r", type=_nonneg)
    p.add_argument("--a", type=_nonneg, help="use the involution locus M_{n,a}")
    p.add_argument("--method", choices=sorted(METHODS), default="signed")

    p = add("loci", "enumerate point loci", cmd_loci)
    p.add_argument("action", choices=["count", "list"])
    p.add_argument("--type", choices=["rook", "uz", "involution"], default="rook")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg)
    p.add_argument("--r", type=_nonneg)
    p.add_argument("--a", type=_nonneg)

    p = add("paths", "lattice path of a strip pair", cmd_paths)
    p.add_argument("action", choices=["show"])
    p.add_argument("--mu", type=_partition_arg, required=True, help="e.g. [6,3,1]")
    p.add_argument("--lam1", type=_partition_arg, required=True)
    p.add_argument("--lam2", type=_partition_arg, required=True)
    p.add_argument("--length", type=_nonneg, help="number of steps to show")

    p = add("oracle", "brute-force orbit harmonics", cmd_oracle)
    p.add_argument("action", choices=["grfrob"])
    p.add_argument("--type", choices=["rook", "uz", "involution"], default="rook")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg)
    p.add_argument("--r", type=_nonneg)
    p.add_argument("--a", type=_nonneg)
    p.add_argument("--dmax", type=_nonneg, help="highest degree to compute (default: until full rank)")
    p.add_argument("--hilbert", action="store_true", help="print oracle ranks as a Hilbert series")
    p.add_argument("--max-size", type=_nonneg, help=f"largest n, m accepted (default {DEFAULT_MAX_SIZE['oracle']})")

    p = add("verify", "run a verification", cmd_verify)
    p.add_argument("what", choices=["ideal", "identities", "bijections", "chain", "isom", "uz"])
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg)
    p.add_argument("--r", type=_nonneg)
    p.add_argument("--a", type=_nonneg, help="ideal: use the involution ideal")
    p.add_argument("--dmax", type=_nonneg)
    p.add_argument("--oracle-rmax", type=_nonneg, help="uz: cross-check r <= this against the oracle")
    p.add_argument("--max-size", type=_nonneg, help=f"largest n, m accepted (default {DEFAULT_MAX_SIZE['verify']})")

    p = add("conjecture", "check a conjecture at desk scale", cmd_conjecture)
    p.add_argument("name", choices=["logconcavity"])
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--r", type=_nonneg, help="default: every r")
    p.add_argument("--max-size", type=_nonneg, help=f"largest n, m accepted (default {DEFAULT_MAX_SIZE['conjecture']})")

    p = add("selftest", "run the acceptance criteria", cmd_selftest)
    p.add_argument("--criteria", type=int, nargs="+", help="subset of criteria to run")
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    out = Printer(args.format)
    try:
        args.func(args, out)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_FAIL if out.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
