"""Spectral radii, fan-freeness checks, exhaustive scans and local search
for extremal graphs of given size."""

from ._core import (
    CapacityError,
    ContractError,
    Graph,
    MoveError,
    ParseError,
    __version__,
    are_isomorphic,
    build_extremal,
    build_family,
    closed_form_bound,
    disjoint_union,
    enumerate_graph6,
    extremal_scan,
    find_forbidden,
    is_free,
    is_local_max,
    join,
    kelmans_shift,
    local_search,
    proofcheck,
    spectral_radius,
    subgraph_contains,
)


def rho(g):
    """Spectral radius of g."""
    return spectral_radius(g)["rho"]


__all__ = [
    "CapacityError",
    "ContractError",
    "Graph",
    "MoveError",
    "ParseError",
    "__version__",
    "are_isomorphic",
    "build_extremal",
    "build_family",
    "closed_form_bound",
    "disjoint_union",
    "enumerate_graph6",
    "extremal_scan",
    "find_forbidden",
    "is_free",
    "is_local_max",
    "join",
    "kelmans_shift",
    "local_search",
    "proofcheck",
    "rho",
    "spectral_radius",
    "subgraph_contains",
]
