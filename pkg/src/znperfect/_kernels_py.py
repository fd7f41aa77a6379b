"""Pure-Python search kernels on bitset adjacency rows.

Mirrors ``_kernels.pyx`` function for function; used when the compiled
extension is unavailable or the graph is wider than 64 vertices.
Each kernel returns ``(result, nodes)`` where ``nodes`` counts search-tree
nodes expanded.
"""

from __future__ import annotations


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def find_hole(rows, min_len: int, max_len: int, odd_only: bool):
    """Shortest induced cycle with ``min_len <= length <= max_len``.

    Cycles are anchored at their smallest vertex ``s`` and oriented so the
    second vertex is smaller than the last; each cycle is met exactly once.
    Among cycles of the minimum length the first in that canonical order is
    returned. ``odd_only`` restricts accepted lengths to odd ones.
    """
    n = len(rows)
    full = (1 << n) - 1
    best = None
    best_len = max_len + 1
    nodes = 0

    def acceptable(length: int) -> bool:
        return min_len <= length < best_len and (length & 1 or not odd_only)

    def extend(path, blocked, nbr_s, higher):
        # path[0] = s; next vertex must avoid closed nbhds of path[1:-1]
        nonlocal best, best_len, nodes
        nodes += 1
        tail = path[-1]
        cands = rows[tail] & higher & ~blocked
        m = len(path)
        for w in _bits(cands):
            if nbr_s >> w & 1:
                if w > path[1] and acceptable(m + 1):
                    best = path + [w]
                    best_len = m + 1
            elif m + 2 < best_len:
                extend(path + [w], blocked | rows[path[-1]] | 1 << tail, nbr_s, higher)

    for s in range(n):
        if n - s < min_len or best_len <= min_len:
            break
        higher = full & ~((2 << s) - 1)
        nbr_s = rows[s] & higher
        for v in _bits(nbr_s):
            # blocked holds N[p1..p(m-1)]; s is excluded via ``higher``
            extend([s, v], 0, nbr_s, higher)
    return best, nodes


def max_clique(rows):
    """Maximum clique by branch and bound with greedy-coloring bounds.

    Vertices are branched in index order, so callers pre-sort them.
    """
    n = len(rows)
    best: list[int] = []
    nodes = 0

    def color_sort(p: int):
        order, bounds = [], []
        color = 0
        while p:
            color += 1
            q = p
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~rows[v] & ~(1 << v)
                p &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(r, p):
        nonlocal best, nodes
        nodes += 1
        order, bounds = color_sort(p)
        for idx in range(len(order) - 1, -1, -1):
            if len(r) + bounds[idx] <= len(best):
                return
            v = order[idx]
            newp = p & rows[v]
            if newp:
                expand(r + [v], newp)
            elif len(r) + 1 > len(best):
                best = r + [v]
            p &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return sorted(best), nodes


def color(rows, k: int):
    """A proper coloring with at most ``k`` colors, or None if none exists.

    Vertices are colored in index order. Vertex ``i`` may open at most one
    new color beyond those used so far, and every assignment prunes that
    color from later neighbors, failing as soon as one has none left.
    """
    n = len(rows)
    if n == 0:
        return [], 1
    if k <= 0:
        return None, 1
    colors = [-1] * n
    avail = [(1 << k) - 1] * n
    nodes = 0

    def assign(i: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if i == n:
            return True
        allowed = avail[i] & ((1 << min(used + 1, k)) - 1)
        later = rows[i] >> (i + 1) << (i + 1)
        for c in _bits(allowed):
            bit = 1 << c
            touched = []
            dead = False
            for u in _bits(later):
                if avail[u] & bit:
                    avail[u] ^= bit
                    touched.append(u)
                    if not avail[u]:
                        dead = True
                        break
            if not dead:
                colors[i] = c
                if assign(i + 1, max(used, c + 1)):
                    return True
                colors[i] = -1
            for u in touched:
                avail[u] |= bit
        return False

    if assign(0, 0):
        return colors, nodes
    return None, nodes
