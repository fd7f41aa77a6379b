"""Command-line front end.

Exit codes for ``perfect``: 0 perfect, 1 not perfect, 2 infeasible or error.
``verify`` exits 1 if any row contradicts the main theorem or weak
perfectness, 2 if some rows were infeasible, else 0.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields

from . import graph as graph_mod
from .arithmetic import factorize
from .graph import build_graph, complement
from .invariants import compute_invariants
from .perfectness import (
    DEFAULT_CAP,
    NOT_PERFECT,
    SearchInfeasible,
    construct_paper_hole,
    find_odd_hole,
    is_perfect,
    largest_odd_at_most,
)

EXIT_OK, EXIT_NOT_PERFECT, EXIT_ERROR = 0, 1, 2
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class VerifyRow:
    n: int
    k: int
    vertex_count: int
    verdict: str
    hole_length: int | None
    omega: int | None
    chi: int | None
    elapsed_ms: float

    @property
    def infeasible(self) -> bool:
        return self.verdict == INFEASIBLE

    def violations(self) -> list[str]:
        """Ways this row contradicts the main theorem or weak perfectness."""
        if self.infeasible:
            return []
        problems = []
        if (self.verdict != NOT_PERFECT) != (self.k <= 4):
            problems.append(f"n={self.n}: k={self.k} but verdict {self.verdict}")
        if self.omega != self.chi:
            problems.append(f"n={self.n}: omega={self.omega} != chi={self.chi}")
        return problems


VERIFY_COLUMNS = [f.name for f in fields(VerifyRow)]


def verify_one(n: int, cap: int = DEFAULT_CAP, witness: str = "search") -> VerifyRow:
    start = time.perf_counter()
    f = factorize(n)
    vcount = f.divisor_count - 2 if n > 1 else 0
    try:
        report = is_perfect(f, cap=cap, witness=witness)
        inv = compute_invariants(f, cap=cap)
    except SearchInfeasible:
        elapsed = (time.perf_counter() - start) * 1000
        return VerifyRow(n, f.k, vcount, INFEASIBLE, None, None, None, round(elapsed, 3))
    hole = report.certificate.length if report.certificate else None
    elapsed = (time.perf_counter() - start) * 1000
    return VerifyRow(n, f.k, vcount, report.verdict, hole, inv.omega, inv.chi, round(elapsed, 3))


def _verify_task(args):
    return verify_one(*args)


def run_verify(ns, jobs: int = 1, cap: int = DEFAULT_CAP, witness: str = "search"):
    """Yield one VerifyRow per n, in ascending order of n, as they complete."""
    ns = sorted(set(ns))
    tasks = [(n, cap, witness) for n in ns]
    if jobs <= 1:
        yield from map(_verify_task, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_verify_task, tasks, chunksize=max(1, len(tasks) // (jobs * 8)))


def _csv_line(values) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(["" if v is None else v for v in values])
    return buf.getvalue()


def read_n_list(path: str) -> list[int]:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    text = re.sub(r"#.*", "", text)
    return [int(tok) for tok in re.split(r"[\s,{}\[\]]+", text) if tok]


def cmd_factor(args) -> int:
    print(factorize(args.n))
    return EXIT_OK


def cmd_graph(args) -> int:
    g = build_graph(factorize(args.n))
    if args.complement:
        g = complement(g)
    text = graph_mod.export(g, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_perfect(args) -> int:
    report = is_perfect(factorize(args.n), cap=args.cap, all_lengths=args.all_lengths, witness=args.witness)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_NOT_PERFECT if report.verdict == NOT_PERFECT else EXIT_OK


def cmd_hole(args) -> int:
    f = factorize(args.n)
    if args.method == "paper":
        cert = construct_paper_hole(f)
    else:
        g = build_graph(f)
        cert = None
        if g.vertex_count >= 5:
            hosts = (g, complement(g)) if args.host == "either" else (
                (g,) if args.host == "graph" else (complement(g),)
            )
            for h in hosts:
                cert = find_odd_hole(h, largest_odd_at_most(h.vertex_count), args.cap)
                if cert is not None:
                    break
    if cert is None:
        print(json.dumps({"n": f.n, "hole": None}))
        return EXIT_NOT_PERFECT
    print(cert.to_json())
    return EXIT_OK


def cmd_invariants(args) -> int:
    report = compute_invariants(factorize(args.n), cap=args.cap)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_list:
        ns = read_n_list(args.n_list)
    else:
        ns = range(1, args.max + 1)
    out = sys.stdout
    rows = []
    if not args.table:
        out.write(_csv_line(VERIFY_COLUMNS))
    for row in run_verify(ns, jobs=args.jobs, cap=args.cap, witness=args.witness):
        rows.append(row)
        if not args.table:
            out.write(_csv_line(astuple(row)))
            out.flush()
    if args.table:
        widths = [max(len(c), 8) for c in VERIFY_COLUMNS]
        out.write("  ".join(c.rjust(w) for c, w in zip(VERIFY_COLUMNS, widths)) + "\n")
        for row in rows:
            cells = ["-" if v is None else str(v) for v in astuple(row)]
            out.write("  ".join(c.rjust(w) for c, w in zip(cells, widths)) + "\n")
    problems = [p for row in rows for p in row.violations()]
    infeasible = sum(row.infeasible for row in rows)
    not_perfect = sum(row.verdict == NOT_PERFECT for row in rows)
    for p in problems:
        print(f"VIOLATION {p}", file=sys.stderr)
    print(
        f"checked {len(rows)} values: {not_perfect} not perfect, "
        f"{infeasible} infeasible, {len(problems)} violations",
        file=sys.stderr,
    )
    if problems:
        return EXIT_NOT_PERFECT
    return EXIT_ERROR if infeasible else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="znperfect",
        description="Intersection graph of ideals of Z_n: perfectness, witnesses, invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_n(p):
        p.add_argument("n", type=int, help="positive integer n")

    def add_cap(p):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="vertex-count cap for exact search")

    p = sub.add_parser("factor", help="print the prime factorization of n")
    add_n(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("graph", help="export G(Z_n)")
    add_n(p)
    p.add_argument("--format", choices=graph_mod.EXPORT_FORMATS, default="json")
    p.add_argument("--complement", action="store_true", help="export the complement instead")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("perfect", help="decide perfectness and print a JSON report")
    add_n(p)
    add_cap(p)
    p.add_argument("--all-lengths", action="store_true", help="also search induced cycles of even length")
    p.add_argument(
        "--witness",
        choices=("paper", "search"),
        default="paper",
        help="for n with >= 5 primes, use the explicit 5-cycle construction (paper) or exhaustive search",
    )
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("hole", help="print an odd-hole certificate as JSON")
    add_n(p)
    add_cap(p)
    p.add_argument("--method", choices=("search", "paper"), default="search")
    p.add_argument("--host", choices=("either", "graph", "complement"), default="either")
    p.set_defaults(func=cmd_hole)

    p = sub.add_parser("invariants", help="exact clique and chromatic numbers")
    add_n(p)
    add_cap(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="check the perfectness theorem over a range of n")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--max", type=int, help="check every n in 1..MAX")
    src.add_argument("--n-list", help="file of integers to check ('-' for stdin)")
    p.add_argument("--jobs", type=int, default=1)
    add_cap(p)
    p.add_argument("--witness", choices=("paper", "search"), default="search")
    p.add_argument("--table", action="store_true", help="aligned table instead of CSV")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError, SearchInfeasible, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
