"""Domination polynomials: brute force, digraph recurrence and family formulas."""

from dompoly.engine import graph_poly, recurrence_poly
from dompoly.families import (
    complete_poly,
    cycle_poly,
    gamma_k_cycle,
    gamma_k_path,
    gamma_k_wheel,
    join_poly,
    path_poly,
    union_poly,
    wheel_poly,
)
from dompoly.graph import (
    BipartiteOneWayDigraph,
    DomainError,
    Family,
    SimpleGraph,
    build_family,
    disjoint_union,
    is_dominating,
    join,
    lift,
)
from dompoly.oracle import ResourceError, brute_force_digraph_poly, brute_force_poly
from dompoly.polynomial import DomPolynomial

__all__ = [
    "BipartiteOneWayDigraph", "DomPolynomial", "DomainError", "Family", "ResourceError",
    "SimpleGraph", "brute_force_digraph_poly", "brute_force_poly", "build_family",
    "complete_poly", "cycle_poly", "disjoint_union", "gamma_k_cycle", "gamma_k_path",
    "gamma_k_wheel", "graph_poly", "is_dominating", "join", "join_poly", "lift",
    "path_poly", "recurrence_poly", "union_poly", "wheel_poly",
]
