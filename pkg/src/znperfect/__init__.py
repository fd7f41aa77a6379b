"""Intersection graph of ideals of Z_n: construction, perfectness, exact invariants."""

from ._backend import BACKEND
from .arithmetic import Divisor, Factorization, divisor_gcd, divisor_lcm, factorize, nontrivial_divisors
from .graph import IdealGraph, adjacent, build_graph, complement, export, induced_subgraph
from .invariants import InvariantReport, check_weakly_perfect, chromatic_number, clique_number, compute_invariants
from .perfectness import (
    DEGENERATE_PERFECT,
    NOT_PERFECT,
    PERFECT,
    HoleCertificate,
    PerfectnessReport,
    SearchInfeasible,
    construct_paper_hole,
    find_long_induced_cycle,
    find_odd_hole,
    is_perfect,
    validate_certificate,
)

__all__ = [
    "BACKEND",
    "DEGENERATE_PERFECT",
    "Divisor",
    "Factorization",
    "HoleCertificate",
    "IdealGraph",
    "InvariantReport",
    "NOT_PERFECT",
    "PERFECT",
    "PerfectnessReport",
    "SearchInfeasible",
    "adjacent",
    "build_graph",
    "check_weakly_perfect",
    "chromatic_number",
    "clique_number",
    "complement",
    "compute_invariants",
    "construct_paper_hole",
    "divisor_gcd",
    "divisor_lcm",
    "export",
    "factorize",
    "find_long_induced_cycle",
    "find_odd_hole",
    "induced_subgraph",
    "is_perfect",
    "nontrivial_divisors",
    "validate_certificate",
]
