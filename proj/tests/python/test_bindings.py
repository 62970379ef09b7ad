"""Smoke tests for the geodex Python bindings.

Exercise every exported symbol once with known-good values; deep
correctness is covered by the C++ unit and acceptance suites.
"""

import pytest

import geodex


def build_c3():
    g = geodex.Digraph(3)
    g.add_arc(0, 1)
    g.add_arc(1, 2)
    g.add_arc(2, 0)
    return g


def build_hoof():
    # Two internally disjoint 0->3 paths of length 2: not 2-geodetic.
    g = geodex.Digraph(4)
    for u, v in [(0, 1), (0, 2), (1, 3), (2, 3)]:
        g.add_arc(u, v)
    return g


def test_version_string():
    assert isinstance(geodex.__version__, str)
    assert geodex.__version__.count(".") == 2


def test_digraph_basic_ops():
    g = geodex.Digraph(4)
    assert g.n == 4 and g.m == 0
    g.add_arc(0, 1)
    g.add_arc(1, 2)
    assert g.m == 2
    assert g.has_arc(0, 1) and not g.has_arc(1, 0)
    assert g.out_degree(0) == 1 and g.in_degree(2) == 1
    assert g.out_neighbors(1) == [2] and g.in_neighbors(1) == [0]
    g.remove_arc(0, 1)
    assert g.m == 1 and not g.has_arc(0, 1)
    assert "Digraph(n=4, m=1)" in repr(g)


def test_converse_and_strong_connectivity():
    c3 = build_c3()
    assert c3.is_strongly_connected()
    assert c3.directed_girth() == 3
    back = c3.converse()
    assert back.has_arc(1, 0) and not back.has_arc(0, 1)
    assert back.converse() == c3
    assert build_hoof().sources_and_sinks() == ([0], [3])


def test_digraph6_round_trip():
    c3 = build_c3()
    line = geodex.emit_digraph6(c3)
    assert geodex.parse_digraph6(line) == c3
    assert geodex.emit_digraph6(geodex.parse_digraph6(line)) == line
    with pytest.raises(RuntimeError):
        geodex.parse_digraph6("definitely not digraph6")


def test_geodecity_check_and_witness():
    verdict = geodex.is_k_geodetic(build_c3(), 2)
    assert verdict["is_k_geodetic"] is True
    assert verdict["k"] == 2
    assert verdict["witness"] is None

    verdict = geodex.is_k_geodetic(build_hoof(), 2)
    assert verdict["is_k_geodetic"] is False
    first, second = verdict["witness"]
    assert first != second
    assert first[0] == second[0] and first[-1] == second[-1]


def test_geodetic_girth_values():
    assert geodex.geodetic_girth(build_c3()) == 2
    p22 = geodex.permutation_digraph(2, 2).digraph
    assert geodex.geodetic_girth(p22) == 2
    acyclic = geodex.oriented_bipartite(3, 4, 0).digraph
    assert geodex.geodetic_girth(acyclic) is None


def test_permutation_digraph_invariants():
    built = geodex.permutation_digraph(2, 2)
    g = built.digraph
    assert g.n == 12 and g.m == 24
    assert all(g.out_degree(v) == 2 and g.in_degree(v) == 2 for v in range(g.n))
    assert geodex.is_k_geodetic(g, 2)["is_k_geodetic"]
    assert len(built.labels) == 12
    assert len(set(built.labels)) == 12


def test_counts_are_exact_python_ints():
    p22 = geodex.permutation_digraph(2, 2).digraph
    cyc = geodex.count_directed_cycles(p22, 3)
    assert cyc["count"] == 8 and isinstance(cyc["count"], int)
    assert cyc["per_arc_max"] == 1 and cyc["length"] == 3

    p32 = geodex.permutation_digraph(3, 2).digraph
    assert geodex.count_directed_cycles(p32, 3)["count"] == p32.m // 3 == 20

    paths = geodex.count_directed_paths(p22, 2)
    assert paths["count"] == 48  # every length-2 walk is a path here


def test_counting_bounds():
    assert geodex.triangle_upper_bound(12) == 11
    assert geodex.cycle_count_upper_bound(100, 2) == 672
    assert geodex.moore_bound(2, 62) == 2**63 - 1
    with pytest.raises(OverflowError):
        geodex.moore_bound(2, 64)
    p22 = geodex.permutation_digraph(2, 2).digraph
    assert geodex.min_out_degree_bound_check(p22, 2)


def test_family_constructions():
    r = 5
    members = [
        geodex.family_a(r),
        geodex.family_b(r, 1),
        geodex.family_b_prime(r, 1),
        geodex.family_c(r),
        geodex.family_d(r),
    ]
    for built in members:
        g = built.digraph
        assert g.n == 2 * r + 1
        assert g.m == r * r + 2
        assert geodex.is_k_geodetic(g, 2)["is_k_geodetic"]
        assert g.sources_and_sinks() == ([], [])
    forms = {geodex.canonical_form(b.digraph) for b in members}
    assert len(forms) == len(members)


def test_isomorphism_and_canonical_form():
    b = geodex.family_b(5, 1).digraph
    b_prime = geodex.family_b_prime(5, 1).digraph
    assert not geodex.are_isomorphic(b, b_prime)
    assert geodex.are_isomorphic(b.converse(), b_prime)
    assert geodex.canonical_form(b.converse()) == geodex.canonical_form(b_prime)
    assert isinstance(geodex.canonical_form(b), bytes)


def test_triangle_expansion_and_g_construction():
    te = geodex.triangle_expansion(4).digraph
    assert te.n == 9 and te.m == 18 and te.is_strongly_connected()

    built = geodex.g_construction(12, 3)
    g = built.digraph
    assert g.n == 12 and g.m == 20
    constraints = geodex.SearchConstraints(12, 3, require_strong=True)
    assert geodex.verify_extremal_witness(g, constraints, 20)
    assert not geodex.verify_extremal_witness(g, constraints, 21)

    variant = geodex.g_construction(12, 3, variant_rule3_to_first_column=True)
    assert variant.digraph.m == 20


def test_exclusion_bound():
    assert geodex.exclusion_bound(4, 2, 1) == 6
    assert geodex.exclusion_bound(9, 9, 17) == 17
    with pytest.raises(ValueError):
        geodex.exclusion_bound(3, 4, 1)


def test_extremal_search_small_complete():
    record = geodex.extremal_search(geodex.SearchConstraints(5, 2))
    assert record.complete and record.status == "complete"
    assert record.max_size == 6
    assert record.class_count == len(record.representatives) > 0
    assert record.nodes_explored > 0
    for rep in record.representatives:
        assert rep.m == 6
        assert geodex.is_k_geodetic(rep, 2)["is_k_geodetic"]


def test_extremal_search_empty_census():
    record = geodex.extremal_search(geodex.SearchConstraints(5, 2, min_size=7))
    assert record.complete
    assert record.max_size is None
    assert record.class_count == 0 and record.representatives == []


def test_extremal_search_budget_and_options():
    opts = geodex.SearchOptions()
    opts.max_nodes = 2
    record = geodex.extremal_search(geodex.SearchConstraints(7, 2), opts)
    assert not record.complete
    assert "node budget" in record.status

    opts = geodex.SearchOptions()
    opts.threads = 2
    opts.split_depth = 2
    strong = geodex.SearchConstraints(5, 2, require_strong=True)
    record = geodex.extremal_search(strong, opts)
    assert record.complete and record.max_size == 6
    assert all(rep.is_strongly_connected() for rep in record.representatives)


def test_extremal_search_rejects_bad_arguments():
    with pytest.raises(ValueError):
        geodex.extremal_search(geodex.SearchConstraints(0, 2))
    with pytest.raises(ValueError):
        geodex.extremal_search(geodex.SearchConstraints(5, 1))
    opts = geodex.SearchOptions()
    opts.threads = 0
    with pytest.raises(ValueError):
        geodex.extremal_search(geodex.SearchConstraints(5, 2), opts)
