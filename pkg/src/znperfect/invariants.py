"""Exact clique number and chromatic number, with re-checked witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ._backend import kernels_for
from .arithmetic import Factorization
from .graph import IdealGraph, build_graph
from .perfectness import DEFAULT_CAP, check_cap


def search_order(g: IdealGraph) -> list[int]:
    """Descending degree, ties broken by ascending divisor value."""
    return sorted(range(g.vertex_count), key=lambda i: (-g.degree(i), g.values[i]))


def _relabel(g: IdealGraph, order: list[int]) -> list[int]:
    pos = {old: new for new, old in enumerate(order)}
    rows = []
    for old in order:
        row = g.rows[old]
        rows.append(sum(1 << pos[j] for j in range(g.vertex_count) if row >> j & 1))
    return rows


def is_clique(g: IdealGraph, vertices) -> bool:
    vs = list(vertices)
    return len(set(vs)) == len(vs) and all(
        g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]
    )


def is_proper_coloring(g: IdealGraph, coloring) -> bool:
    return len(coloring) == g.vertex_count and all(coloring[i] != coloring[j] for i, j in g.edges())


def clique_number(g: IdealGraph, cap: int = DEFAULT_CAP) -> tuple[int, list[int]]:
    """Return ``(omega, witness)`` with the witness as sorted vertex indices."""
    check_cap(g, cap)
    order = search_order(g)
    found, _ = kernels_for(g.vertex_count).max_clique(_relabel(g, order))
    witness = sorted(order[i] for i in found)
    if not is_clique(g, witness):
        raise AssertionError(f"clique witness {witness} is not a clique")
    return len(witness), witness


def chromatic_number(
    g: IdealGraph,
    cap: int = DEFAULT_CAP,
    transcript: list | None = None,
) -> tuple[int, list[int]]:
    """Return ``(chi, coloring)``; ``coloring[i]`` is the color of vertex ``i``.

    Tries k = omega, omega + 1, ... colors until one succeeds. When a list is
    passed as ``transcript``, one ``(k, feasible, nodes)`` entry is appended
    per attempt, so a failed attempt at ``chi - 1`` is on record.
    """
    check_cap(g, cap)
    if g.vertex_count == 0:
        return 0, []
    omega, _ = clique_number(g, cap)
    order = search_order(g)
    rows = _relabel(g, order)
    kern = kernels_for(g.vertex_count)
    k = omega
    while True:
        found, nodes = kern.color(rows, k)
        if transcript is not None:
            transcript.append((k, found is not None, nodes))
        if found is not None:
            break
        k += 1
    coloring = [0] * g.vertex_count
    for new, old in enumerate(order):
        coloring[old] = found[new]
    if not is_proper_coloring(g, coloring) or len(set(coloring)) != k:
        raise AssertionError("coloring witness failed re-validation")
    return k, coloring


@dataclass(frozen=True)
class InvariantReport:
    n: int
    omega: int
    chi: int
    max_clique_witness: tuple[int, ...]
    coloring_witness: dict[int, int]

    @property
    def weakly_perfect(self) -> bool:
        return self.omega == self.chi

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "omega": self.omega,
            "chi": self.chi,
            "weakly_perfect": self.weakly_perfect,
            "max_clique_witness": list(self.max_clique_witness),
            "coloring_witness": {str(v): c for v, c in self.coloring_witness.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def compute_invariants(f: Factorization, cap: int = DEFAULT_CAP) -> InvariantReport:
    g = build_graph(f)
    omega, clique = clique_number(g, cap)
    chi, coloring = chromatic_number(g, cap)
    return InvariantReport(
        f.n,
        omega,
        chi,
        tuple(g.values[i] for i in clique),
        {g.values[i]: c for i, c in enumerate(coloring)},
    )


def check_weakly_perfect(f: Factorization, cap: int = DEFAULT_CAP) -> bool:
    return compute_invariants(f, cap).weakly_perfect
