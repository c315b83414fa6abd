"""Intersection graphs G_n(Z_m) of ideals of Z_m.

Thin Python layer over the C++ core: graph construction, closed-form
invariants, brute-force oracles and the formulas-vs-oracle sweep harness.
"""

from ._core import (  # noqa: F401
    Factorization,
    GraphSizeError,
    IdealGraph,
    InvariantReport,
    ModulePair,
    OracleBudget,
    adjacent,
    build_graph,
    classify,
    d_support,
    divisor_value,
    enumerate_divisors,
    explain,
    factorize,
    lcm_vector,
    make_module_pair,
    n_divides,
    oracle_chromatic_index_class,
    oracle_degrees,
    oracle_domination,
    oracle_eulerian_nonisolated,
    oracle_girth,
    oracle_independence,
    predict_invariants,
    predicted_degree,
    sweep,
    verify_pair,
)

__all__ = [
    "Factorization",
    "GraphSizeError",
    "IdealGraph",
    "InvariantReport",
    "ModulePair",
    "OracleBudget",
    "adjacent",
    "analyze",
    "build_graph",
    "classify",
    "d_support",
    "divisor_value",
    "enumerate_divisors",
    "explain",
    "factorize",
    "lcm_vector",
    "make_module_pair",
    "n_divides",
    "oracle_chromatic_index_class",
    "oracle_degrees",
    "oracle_domination",
    "oracle_eulerian_nonisolated",
    "oracle_girth",
    "oracle_independence",
    "predict_invariants",
    "predicted_degree",
    "sweep",
    "verify_pair",
]


def analyze(m: int, n: int) -> dict:
    """Closed-form invariants of G_n(Z_m) as a plain dict."""
    return predict_invariants(make_module_pair(m, n))
