"""k-geodetic digraph toolkit.

Thin Python surface over the C++ core: digraphs, geodecity checks,
extremal constructions, cycle/path counting, and the exhaustive census
search. Counts come back as exact Python ints; digraphs round-trip
through digraph6 strings for interchange with other graph tooling.
"""

from ._geodex import (
    CensusRecord,
    Digraph,
    LabeledDigraph,
    SearchConstraints,
    SearchOptions,
    __version__,
    are_isomorphic,
    canonical_form,
    count_directed_cycles,
    count_directed_paths,
    cycle_count_upper_bound,
    emit_digraph6,
    exclusion_bound,
    extremal_search,
    family_a,
    family_b,
    family_b_prime,
    family_c,
    family_d,
    g_construction,
    geodetic_girth,
    is_k_geodetic,
    min_out_degree_bound_check,
    moore_bound,
    oriented_bipartite,
    parse_digraph6,
    permutation_digraph,
    triangle_expansion,
    triangle_upper_bound,
    verify_extremal_witness,
)

__all__ = [
    "CensusRecord",
    "Digraph",
    "LabeledDigraph",
    "SearchConstraints",
    "SearchOptions",
    "__version__",
    "are_isomorphic",
    "canonical_form",
    "count_directed_cycles",
    "count_directed_paths",
    "cycle_count_upper_bound",
    "emit_digraph6",
    "exclusion_bound",
    "extremal_search",
    "family_a",
    "family_b",
    "family_b_prime",
    "family_c",
    "family_d",
    "g_construction",
    "geodetic_girth",
    "is_k_geodetic",
    "min_out_degree_bound_check",
    "moore_bound",
    "oriented_bipartite",
    "parse_digraph6",
    "permutation_digraph",
    "triangle_expansion",
    "triangle_upper_bound",
    "verify_extremal_witness",
]
