"""Slow, obviously-correct reference computations used as test oracles.

Nothing here imports the package's search or lattice code; inputs are plain
integers, edge sets and adjacency bit rows.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd


def trial_division(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def divisors_between(n: int) -> list[int]:
    """All d with 1 < d < n and d | n, by scanning every candidate."""
    return [d for d in range(2, n) if n % d == 0]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def ideals_intersect(a: int, b: int, n: int) -> bool:
    """Literal three-clause condition: lcm divides n and 1 < lcm < n."""
    m = lcm(a, b)
    return n % m == 0 and 1 < m < n


def ideal_elements(a: int, n: int) -> frozenset[int]:
    return frozenset(range(0, n, a))


def ideals_intersect_by_sets(a: int, b: int, n: int) -> bool:
    """Intersect the ideals (a) and (b) of Z_n as explicit residue sets."""
    return len(ideal_elements(a, n) & ideal_elements(b, n)) > 1


def integer_edges(n: int) -> set[tuple[int, int]]:
    ds = divisors_between(n)
    return {(a, b) for a, b in combinations(ds, 2) if ideals_intersect(a, b, n)}


def rows_from_edges(v: int, edges) -> list[int]:
    rows = [0] * v
    for i, j in edges:
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return rows


def is_induced_cycle(rows, verts) -> bool:
    """Whether ``verts`` (unordered) induces a single cycle."""
    vs = list(verts)
    if len(vs) < 3:
        return False
    mask = sum(1 << v for v in vs)
    if any((rows[v] & mask).bit_count() != 2 for v in vs):
        return False
    # 2-regular: connected iff a walk from vs[0] visits everything
    seen = {vs[0]}
    frontier = [vs[0]]
    while frontier:
        u = frontier.pop()
        for w in vs:
            if rows[u] >> w & 1 and w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(vs)


def shortest_induced_cycle(rows, min_len: int, max_len: int, odd_only: bool):
    """Length of the shortest induced cycle in range by subset enumeration, or None."""
    v = len(rows)
    for L in range(min_len, min(max_len, v) + 1):
        if odd_only and L % 2 == 0:
            continue
        for sub in combinations(range(v), L):
            if is_induced_cycle(rows, sub):
                return L
    return None


def omega_all_subsets(rows) -> list[int]:
    """Clique number of every induced subgraph, indexed by vertex mask."""
    v = len(rows)
    om = [0] * (1 << v)
    for s in range(1, 1 << v):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        om[s] = max(om[rest], 1 + om[rest & rows[low]])
    return om


def chi_all_subsets(rows) -> list[int]:
    """Chromatic number of every induced subgraph: min cover by independent sets."""
    v = len(rows)
    size = 1 << v
    independent = [True] * size
    for s in range(1, size):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        independent[s] = independent[rest] and not (rows[low] & rest)
    chi = [0] * size
    for s in range(1, size):
        low_bit = s & -s
        rest = s ^ low_bit
        best = v + 1
        # the color class holding the lowest vertex: low_bit plus a submask of rest
        sub = rest
        while True:
            cls = sub | low_bit
            if independent[cls]:
                best = min(best, 1 + chi[s ^ cls])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return chi


def perfect_by_definition(rows) -> bool:
    om, ch = omega_all_subsets(rows), chi_all_subsets(rows)
    return om == ch
