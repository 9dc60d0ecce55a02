"""Clique graph dynamics of triangulated surfaces."""

from ._core import (
    BudgetExceeded,
    Graph,
    InjectivityError,
    InputError,
    PreconditionError,
    canonical_hash,
    clique_graph,
    complete,
    cover_ball,
    decide,
    delta,
    facets,
    geometric_level_counts,
    hex_patch,
    icosahedron,
    is_isomorphic,
    is_locally_cyclic,
    iterate,
    local_hex_graph,
    max_cliques,
    octahedron,
    parse_json,
    read_graph,
    run_suite,
    suite_names,
    to_dot,
    to_json,
    torus,
    verify_equivalence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
