"""Graph core: construction, generators, components, subdivision, and the
enumeration machinery checked against an independent labeled sweep."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs_st
from domgame.graphs import (
    Graph,
    GraphError,
    canonical_key,
    closed_neighborhood,
    components,
    disjoint_union,
    enumerate_connected_graphs,
    enumerate_graphs,
    enumerate_isolate_free_graphs,
    from_edge_list,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_petersen,
    is_connected,
    relabel,
    subdivide3,
)


def test_from_edge_list_k2():
    g = from_edge_list(2, [(0, 1)])
    assert g.n == 2 and g.edges() == [(0, 1)]


def test_from_edge_list_c4():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4
    assert all(g.degree(v) == 2 for v in range(4))


def test_from_edge_list_rejects_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        from_edge_list(3, [(0, 0)])


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(GraphError, match="out of range"):
        from_edge_list(3, [(0, 3)])


def test_duplicate_edges_collapse():
    g = from_edge_list(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_closed_neighborhood_examples():
    assert closed_neighborhood(gen_cycle(4), 0) == {3, 0, 1}
    assert closed_neighborhood(gen_complete(4), 2) == {0, 1, 2, 3}
    assert closed_neighborhood(gen_path(3), 0) == {0, 1}


def test_closed_neighborhood_range_check():
    with pytest.raises(GraphError):
        closed_neighborhood(gen_path(3), 5)


def test_components_union():
    g = disjoint_union(gen_cycle(4), gen_cycle(8))
    comps = components(g)
    assert sorted(len(c) for c in comps) == [4, 8]
    assert comps[0][0] == 0  # ordered by smallest member


def test_components_connected():
    assert components(gen_complete(5)) == [(0, 1, 2, 3, 4)]
    assert is_connected(gen_complete(5))
    assert not is_connected(disjoint_union(gen_path(2), gen_path(2)))


@given(graphs_st(max_n=9))
def test_adjacency_symmetry_and_closed_membership(g):
    for v in range(g.n):
        for u in range(g.n):
            in_nv = u in closed_neighborhood(g, v)
            in_nu = v in closed_neighborhood(g, u)
            assert in_nv == in_nu


def test_generators():
    c8 = gen_cycle(8)
    assert c8.n == 8 and c8.m == 8 and all(c8.degree(v) == 2 for v in range(8))
    assert gen_path(2) == from_edge_list(2, [(0, 1)])
    k4 = gen_complete(4)
    assert k4.m == 6
    with pytest.raises(GraphError):
        gen_cycle(2)
    with pytest.raises(GraphError):
        gen_path(1)
    with pytest.raises(GraphError):
        gen_complete(1)


def test_disjoint_union_relabels():
    g = disjoint_union(gen_cycle(4), gen_cycle(8))
    assert g.n == 12 and g.m == 12
    assert (4, 5) in g.edges()


def test_petersen_shape():
    g = gen_petersen()
    assert g.n == 10 and g.m == 15 and all(g.degree(v) == 3 for v in range(10))


def test_subdivide_triangle_gives_nine_cycle():
    sub, smap = subdivide3(gen_cycle(3))
    assert sub.n == 9 and sub.m == 9
    assert is_connected(sub) and all(sub.degree(v) == 2 for v in range(9))
    assert len(smap.edge_points) == 3


def test_subdivide_k2_gives_p4():
    sub, _ = subdivide3(gen_path(2))
    assert sub.n == 4 and sub.m == 3
    assert sorted(sub.degree(v) for v in range(4)) == [1, 1, 2, 2]
    assert is_connected(sub)


def test_subdivide_k4_counts():
    sub, smap = subdivide3(gen_complete(4))
    assert sub.n == 4 + 2 * 6 == 16
    assert sub.m == 3 * 6 == 18
    # w-x-y-z really is a path for every base edge
    for (w, z), (x, y) in smap.edge_points.items():
        assert sub.has_edge(w, x) and sub.has_edge(x, y) and sub.has_edge(y, z)
        assert sub.degree(x) == 2 and sub.degree(y) == 2


@pytest.mark.parametrize("k", [3, 4, 5])
def test_subdivided_cycles_are_longer_cycles(k):
    sub, _ = subdivide3(gen_cycle(k))
    assert sub.n == 3 * k and is_connected(sub)
    assert all(sub.degree(v) == 2 for v in range(sub.n))


def test_subdivision_map_queries():
    sub, smap = subdivide3(gen_path(2))
    (x, y) = smap.edge_points[(0, 1)]
    assert smap.inner_partner(x) == y and smap.inner_partner(y) == x
    assert smap.path_of(x) == (0, x, y, 1)
    assert smap.is_sub_vertex(x) and not smap.is_sub_vertex(0)
    assert smap.paths_at(0) == [(x, y, 1)]


# --- enumeration against an independent labeled sweep ------------------------

def _sweep_connected_count(n):
    """Brute force: all 2^C(n,2) labeled graphs, deduplicated by the orbit
    of the adjacency bitstring under all vertex permutations."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    count = 0
    for sub in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if sub >> i & 1]
        g = Graph(n, edges)
        if not is_connected(g):
            continue
        canon = min(
            tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in edges))
            for p in itertools.permutations(range(n))
        )
        if canon not in seen:
            seen.add(canon)
            count += 1
    return count


@pytest.mark.parametrize("n,expected", [(2, 1), (3, 2), (4, 6), (5, 21)])
def test_connected_counts_match_sweep(n, expected):
    assert _sweep_connected_count(n) == expected
    assert len(enumerate_connected_graphs(n)) == expected


def test_connected_count_n6_known_value():
    assert len(enumerate_connected_graphs(6)) == 112


def test_connected_count_n7_known_value():
    assert len(enumerate_connected_graphs(7)) == 853


def test_all_graph_counts_known_values():
    assert [len(enumerate_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_isolate_free_counts():
    # graphs with an isolate on n vertices correspond to all graphs on n-1
    assert len(enumerate_isolate_free_graphs(6)) == 156 - 34


def test_enumeration_range_check():
    with pytest.raises(GraphError):
        enumerate_connected_graphs(9)


def test_enumeration_is_deduplicated():
    keys = [canonical_key(g) for g in enumerate_graphs(5)]
    assert len(keys) == len(set(keys))


@settings(max_examples=60)
@given(graphs_st(max_n=7), st.randoms(use_true_random=False))
def test_canonical_key_is_isomorphism_invariant(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert canonical_key(g) == canonical_key(relabel(g, perm))


def test_canonical_key_separates_non_isomorphic():
    assert canonical_key(gen_path(4)) != canonical_key(from_edge_list(4, [(0, 1), (1, 2), (1, 3)]))
