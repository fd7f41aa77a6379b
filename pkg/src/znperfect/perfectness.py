"""Perfectness of G(Z_n) decided by searching for odd holes and odd antiholes.

A graph is perfect iff neither it nor its complement has an induced odd
cycle of length at least 5 (Strong Perfect Graph Theorem). The search here
is exhaustive, so it is only run on graphs up to a vertex-count cap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import prod

from ._backend import kernels_for
from .arithmetic import Factorization
from .arithmetic import nontrivial_divisors
from .graph import IdealGraph, build_graph, complement, graph_on_divisors

DEFAULT_CAP = 64

PERFECT = "perfect"
NOT_PERFECT = "not_perfect"
DEGENERATE_PERFECT = "degenerate_perfect"

HOSTS = ("graph", "complement")


class SearchInfeasible(RuntimeError):
    """The graph is larger than the exhaustive-search cap."""

    def __init__(self, vertex_count: int, cap: int):
        super().__init__(
            f"search-infeasible: {vertex_count} vertices exceeds the search cap of {cap}"
        )
        self.vertex_count = vertex_count
        self.cap = cap


def check_cap(g: IdealGraph, cap: int) -> None:
    if g.vertex_count > cap:
        raise SearchInfeasible(g.vertex_count, cap)


def largest_odd_at_most(v: int) -> int:
    return v if v % 2 else v - 1


@dataclass(frozen=True)
class HoleCertificate:
    n: int
    host: str
    cycle: tuple[int, ...]
    divisor_values: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "host": self.host,
            "length": self.length,
            "cycle": list(self.divisor_values),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict, g: IdealGraph) -> HoleCertificate:
        """Rebuild a certificate from its JSON form, resolving values against ``g``."""
        values = tuple(doc["cycle"])
        return cls(doc["n"], doc["host"], tuple(g.index_of(v) for v in values), values)

    @classmethod
    def from_values(cls, g: IdealGraph, values, host: str | None = None) -> HoleCertificate:
        if host is None:
            host = "complement" if g.is_complemented else "graph"
        values = tuple(values)
        return cls(g.n, host, tuple(g.index_of(v) for v in values), values)


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _host_graph(g: IdealGraph, host: str) -> IdealGraph:
    want_complement = host == "complement"
    return complement(g) if g.is_complemented != want_complement else g


def validate_certificate(g: IdealGraph, c: HoleCertificate) -> CertificateCheck:
    """Re-check a hole certificate against ``g`` independently of any search.

    ``g`` may be either G(Z_n) or its complement; the certificate's ``host``
    selects which one the cycle lives in. Returns a falsy
    :class:`CertificateCheck` carrying the first failed condition.
    """
    if c.host not in HOSTS:
        return CertificateCheck(False, f"unknown host {c.host!r}")
    if c.n != g.n:
        return CertificateCheck(False, f"certificate is for n={c.n}, graph is for n={g.n}")
    L = len(c.cycle)
    if L < 5:
        return CertificateCheck(False, f"length {L} is below 5")
    if L % 2 == 0:
        return CertificateCheck(False, f"length {L} is even")
    if len(c.divisor_values) != L:
        return CertificateCheck(False, "divisor_values and cycle differ in length")
    if len(set(c.cycle)) != L:
        return CertificateCheck(False, "cycle repeats a vertex")
    if any(not 0 <= i < g.vertex_count for i in c.cycle):
        return CertificateCheck(False, "cycle index out of range")
    for i, v in zip(c.cycle, c.divisor_values):
        if g.values[i] != v:
            return CertificateCheck(False, f"vertex {i} has value {g.values[i]}, not {v}")
    h = _host_graph(g, c.host)
    for pos in range(L):
        a, b = c.cycle[pos], c.cycle[(pos + 1) % L]
        if not h.has_edge(a, b):
            return CertificateCheck(
                False, f"consecutive vertices {h.values[a]} and {h.values[b]} are not adjacent"
            )
    for p in range(L):
        for q in range(p + 2, L):
            if p == 0 and q == L - 1:
                continue
            a, b = c.cycle[p], c.cycle[q]
            if h.has_edge(a, b):
                return CertificateCheck(
                    False, f"chord between {h.values[a]} and {h.values[b]}: cycle is not induced"
                )
    return CertificateCheck(True)


def _emit(g: IdealGraph, cycle) -> HoleCertificate:
    host = "complement" if g.is_complemented else "graph"
    cert = HoleCertificate(g.n, host, tuple(cycle), tuple(g.values[i] for i in cycle))
    check = validate_certificate(g, cert)
    if not check:
        raise AssertionError(f"search produced an invalid certificate: {check.reason}")
    return cert


def find_odd_hole(g: IdealGraph, max_length: int, cap: int = DEFAULT_CAP) -> HoleCertificate | None:
    """Shortest induced odd cycle of length in ``[5, max_length]``, or None.

    Lengths are tried shortest first, so a returned hole is of minimum length.
    None means every odd length up to ``max_length`` was ruled out.
    """
    if max_length < 5 or max_length % 2 == 0:
        raise ValueError(f"max_length must be odd and at least 5, got {max_length}")
    check_cap(g, cap)
    if g.vertex_count < 5:
        return None
    cycle, _ = kernels_for(g.vertex_count).find_hole(g.rows, 5, max_length, True)
    return None if cycle is None else _emit(g, cycle)


def find_long_induced_cycle(g: IdealGraph, max_length: int, cap: int = DEFAULT_CAP):
    """Shortest induced cycle of any parity with length in ``[5, max_length]``.

    Returns vertex indices, or None. Used to test the stronger claim that
    no induced cycle longer than 4 exists when n has at most 4 primes.
    """
    check_cap(g, cap)
    if g.vertex_count < 5 or max_length < 5:
        return None
    cycle, _ = kernels_for(g.vertex_count).find_hole(g.rows, 5, max_length, False)
    return None if cycle is None else tuple(cycle)


def construct_paper_hole(f: Factorization) -> HoleCertificate:
    """The explicit induced 5-cycle of G(Z_n) for n with at least 5 primes.

    With ``q_i = p_i^a_i`` for the five smallest primes and ``s`` the product
    of the remaining prime powers, the cycle is
    (q1 q2 q3 s, q2 q3 q4 s, q3 q4 q5 s, q4 q5 q1 s, q5 q1 q2 s).
    Consecutive members share three of q1..q5, so their lcm misses one; two
    apart they cover all five, so their lcm is n.
    """
    if f.k < 5:
        raise ValueError("construction requires >= 5 distinct primes")
    q = [p**a for p, a in f.primes[:5]]
    s = prod(p**a for p, a in f.primes[5:])
    values = [q[i % 5] * q[(i + 1) % 5] * q[(i + 2) % 5] * s for i in range(5)]
    # checked on the induced 5-vertex subgraph; the full graph may be huge
    local = graph_on_divisors(f, sorted((f.divisor_of(v) for v in values), key=lambda d: d.value))
    check = validate_certificate(local, HoleCertificate.from_values(local, values, "graph"))
    if not check:
        raise AssertionError(f"constructed cycle failed validation: {check.reason}")
    index = {d.value: i for i, d in enumerate(nontrivial_divisors(f))}
    return HoleCertificate(f.n, "graph", tuple(index[v] for v in values), tuple(values))


@dataclass(frozen=True)
class PerfectnessReport:
    n: int
    verdict: str
    certificate: HoleCertificate | None
    search_exhausted: bool
    max_length_searched: int
    vertex_count: int
    witness_method: str = "search"
    # populated only by the all-lengths mode
    long_cycle: tuple[int, ...] | None = None
    long_cycle_host: str | None = None
    all_lengths_checked: bool = False
    extras: dict = field(default_factory=dict, compare=False)

    @property
    def is_perfect(self) -> bool:
        return self.verdict != NOT_PERFECT

    def to_dict(self) -> dict:
        doc = {
            "n": self.n,
            "verdict": self.verdict,
            "vertex_count": self.vertex_count,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "search_exhausted": self.search_exhausted,
            "max_length_searched": self.max_length_searched,
            "witness_method": self.witness_method,
        }
        if self.all_lengths_checked:
            doc["all_lengths"] = {
                "long_cycle_found": self.long_cycle is not None,
                "host": self.long_cycle_host,
                "cycle": list(self.long_cycle) if self.long_cycle else None,
            }
        return doc


def is_perfect(
    f: Factorization,
    cap: int = DEFAULT_CAP,
    all_lengths: bool = False,
    witness: str = "search",
) -> PerfectnessReport:
    """Decide whether G(Z_n) is perfect.

    ``witness="paper"`` uses the explicit 5-cycle construction when n has
    at least five distinct primes instead of searching. ``all_lengths``
    additionally searches both graphs for induced cycles of every length
    from 5 up (even ones included) and records the first one found.
    """
    if witness not in ("search", "paper"):
        raise ValueError(f"unknown witness method {witness!r}")
    g = build_graph(f)
    v = g.vertex_count
    max_len = max(largest_odd_at_most(v), 1)
    if g.degenerate:
        return PerfectnessReport(f.n, DEGENERATE_PERFECT, None, True, max_len, v)
    if witness == "paper" and f.k >= 5:
        cert = construct_paper_hole(f)
        return PerfectnessReport(f.n, NOT_PERFECT, cert, False, 5, v, "paper")
    check_cap(g, cap)

    long_cycle = long_host = None
    if all_lengths:
        for host, h in (("graph", g), ("complement", complement(g))):
            long_cycle = find_long_induced_cycle(h, v, cap)
            if long_cycle is not None:
                long_host = host
                break

    if max_len < 5:
        return PerfectnessReport(
            f.n, PERFECT, None, True, max_len, v, "search", long_cycle, long_host, all_lengths
        )
    for h in (g, complement(g)):
        cert = find_odd_hole(h, max_len, cap)
        if cert is not None:
            return PerfectnessReport(
                f.n, NOT_PERFECT, cert, False, max_len, v, "search", long_cycle, long_host, all_lengths
            )
    return PerfectnessReport(
        f.n, PERFECT, None, True, max_len, v, "search", long_cycle, long_host, all_lengths
    )
