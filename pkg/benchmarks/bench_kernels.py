"""Compare the compiled and pure-Python kernels on the package's workloads.

    python benchmarks/bench_kernels.py [--max-n 2000] [--repeat 3]
"""

import argparse
import random
import time

from znperfect import _backend, _kernels_py
from znperfect.arithmetic import factorize
from znperfect.graph import build_graph, complement
from znperfect.invariants import _relabel, search_order


def ideal_graphs(max_n):
    out = []
    for n in range(2, max_n + 1):
        g = build_graph(factorize(n))
        if g.vertex_count >= 5:
            out.append(g)
    return out


def random_bipartite_rows(v, p, seed):
    """Bipartite, so no odd cycles at all: the odd-hole search must exhaust."""
    rng = random.Random(seed)
    rows = [0] * v
    for i in range(0, v, 2):
        for j in range(1, v, 2):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def workloads(max_n):
    graphs = ideal_graphs(max_n)
    pairs = [(list(g.rows), list(complement(g).rows)) for g in graphs]
    big = [build_graph(factorize(n)) for n in (30030, 8640, 27720 // 11 * 13)]
    big = [g for g in big if g.vertex_count <= 64]
    ordered = [_relabel(g, search_order(g)) for g in graphs + big]
    bipartite = [random_bipartite_rows(64, 0.1, s) for s in range(3)]

    def holes_odd(k):
        for a, b in pairs:
            k.find_hole(a, 5, len(a), True)
            k.find_hole(b, 5, len(b), True)

    def holes_all(k):
        for a, b in pairs:
            k.find_hole(a, 5, len(a), False)
            k.find_hole(b, 5, len(b), False)

    def cliques(k):
        for rows in ordered:
            k.max_clique(rows)

    def colorings(k):
        for rows in ordered:
            omega = len(k.max_clique(rows)[0])
            while k.color(rows, omega)[0] is None:
                omega += 1

    def random_holes(k):
        for rows in bipartite:
            k.find_hole(rows, 5, 63, True)

    return [
        (f"odd-hole search, G and complement, n<={max_n}", holes_odd),
        (f"all-length induced cycles, n<={max_n}", holes_all),
        (f"max clique, n<={max_n} + large graphs", cliques),
        (f"chromatic number, n<={max_n} + large graphs", colorings),
        ("exhaustive odd-hole search, random bipartite, 64 vertices", random_holes),
    ]


def best_of(fn, kernels, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernels)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _backend.compiled is None:
        print("compiled kernels unavailable; only timing the pure-Python backend")
    rows = []
    for label, fn in workloads(args.max_n):
        py = best_of(fn, _kernels_py, args.repeat)
        cy = best_of(fn, _backend.compiled, args.repeat) if _backend.compiled else None
        rows.append((label, py, cy))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'python s':>10}  {'cython s':>10}  {'speedup':>8}")
    for label, py, cy in rows:
        cy_s = f"{cy:10.4f}" if cy is not None else f"{'-':>10}"
        speed = f"{py / cy:7.1f}x" if cy else f"{'-':>8}"
        print(f"{label.ljust(width)}  {py:10.4f}  {cy_s}  {speed}")


if __name__ == "__main__":
    main()
