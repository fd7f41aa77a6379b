"""The intersection graph of ideals of Z_n and its complement.

Adjacency is stored as one bitset (a Python int) per vertex; bit ``j`` of
``rows[i]`` is set iff vertices ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .arithmetic import Divisor, Factorization, nontrivial_divisors

EXPORT_FORMATS = ("dot", "dimacs", "json")


@dataclass(frozen=True)
class IdealGraph:
    factorization: Factorization
    vertices: tuple[Divisor, ...]
    rows: tuple[int, ...]
    is_complemented: bool = False

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.vertices):
            raise ValueError("one adjacency row per vertex required")
        full = (1 << len(self.vertices)) - 1
        for i, row in enumerate(self.rows):
            if row & ~full or row >> i & 1:
                raise ValueError(f"row {i} has out-of-range bits or a loop")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @property
    def n(self) -> int:
        return self.factorization.n

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def degenerate(self) -> bool:
        """Fewer than two vertices; the paper's graphs require V non-empty."""
        return len(self.vertices) <= 1

    @cached_property
    def values(self) -> tuple[int, ...]:
        return tuple(d.value for d in self.vertices)

    @property
    def adjacency(self) -> list[list[bool]]:
        v = len(self.vertices)
        return [[bool(row >> j & 1) for j in range(v)] for row in self.rows]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [(i, j) for i, row in enumerate(self.rows) for j in _bits(row >> (i + 1) << (i + 1))]

    def index_of(self, value: int) -> int:
        try:
            return self.values.index(value)
        except ValueError:
            raise KeyError(f"{value} is not a vertex of this graph") from None


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def adjacent(a: Divisor, b: Divisor, f: Factorization) -> bool:
    """Whether the ideals ``(a)`` and ``(b)`` of Z_n intersect nontrivially.

    The ideals meet in ``(lcm(a, b))``, which is nonzero iff lcm(a, b) is a
    proper divisor of n with lcm > 1. For nontrivial a, b the lcm always
    divides n and exceeds 1, so only ``lcm != n`` needs checking: some
    coordinate of the componentwise max falls short of the full exponent.
    """
    if a.factorization != f or b.factorization != f:
        raise ValueError("divisors do not belong to this factorization")
    if a.is_trivial or b.is_trivial:
        raise ValueError("adjacency is defined on nontrivial divisors only")
    if a.exponents == b.exponents:
        raise ValueError("adjacency is defined on distinct divisors only")
    return any(max(x, y) < alpha for x, y, alpha in zip(a.exponents, b.exponents, f.exponents))


def build_graph(f: Factorization) -> IdealGraph:
    return graph_on_divisors(f, nontrivial_divisors(f))


def graph_on_divisors(f: Factorization, verts) -> IdealGraph:
    """Subgraph of G(Z_n) induced on the given nontrivial divisors, in the given order."""
    verts = list(verts)
    rows = [0] * len(verts)
    for i, a in enumerate(verts):
        for j in range(i + 1, len(verts)):
            if adjacent(a, verts[j], f):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return IdealGraph(f, tuple(verts), tuple(rows), False)


def complement(g: IdealGraph) -> IdealGraph:
    full = (1 << g.vertex_count) - 1
    rows = tuple(~row & full & ~(1 << i) for i, row in enumerate(g.rows))
    return IdealGraph(g.factorization, g.vertices, rows, not g.is_complemented)


def induced_subgraph(g: IdealGraph, subset) -> IdealGraph:
    """Restrict ``g`` to the vertex indices in ``subset``, keeping their relative order."""
    subset = list(subset)
    if len(set(subset)) != len(subset):
        raise ValueError("duplicate vertex index in subset")
    if any(not 0 <= i < g.vertex_count for i in subset):
        raise IndexError("vertex index out of range")
    keep = sorted(subset)
    rows = []
    for i in keep:
        row = g.rows[i]
        rows.append(sum(1 << new for new, old in enumerate(keep) if row >> old & 1))
    return IdealGraph(g.factorization, tuple(g.vertices[i] for i in keep), tuple(rows), g.is_complemented)


def _graph_name(g: IdealGraph) -> str:
    name = f"G(Z_{g.n})"
    return f"complement of {name}" if g.is_complemented else name


def to_dot(g: IdealGraph) -> str:
    lines = [f'graph "{_graph_name(g)}" {{']
    lines += [f"  {v};" for v in g.values]
    lines += [f"  {g.values[i]} -- {g.values[j]};" for i, j in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dimacs(g: IdealGraph) -> str:
    edges = g.edges()
    lines = [f"c {_graph_name(g)}"]
    lines += [f"c vertex {i} = {v}" for i, v in enumerate(g.values, start=1)]
    lines.append(f"p edge {g.vertex_count} {len(edges)}")
    lines += [f"e {i + 1} {j + 1}" for i, j in edges]
    return "\n".join(lines) + "\n"


def to_json(g: IdealGraph) -> str:
    doc = {
        "n": g.n,
        "factorization": [list(pa) for pa in g.factorization.primes],
        "vertices": list(g.values),
        "edges": [list(e) for e in g.edges()],
        "is_complemented": g.is_complemented,
    }
    return json.dumps(doc) + "\n"


def export(g: IdealGraph, format: str) -> str:
    if format == "dot":
        return to_dot(g)
    if format == "dimacs":
        return to_dimacs(g)
    if format == "json":
        return to_json(g)
    raise ValueError(f"unknown export format {format!r}; expected one of {EXPORT_FORMATS}")


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Read back a DIMACS ``p edge`` file as (vertex count, 0-based edges)."""
    nverts = None
    edges = []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"bad problem line: {line!r}")
            nverts, nedges = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise ValueError(f"unrecognised line: {line!r}")
    if nverts is None:
        raise ValueError("missing 'p edge' line")
    if len(edges) != nedges:
        raise ValueError(f"header declares {nedges} edges, found {len(edges)}")
    return nverts, edges
