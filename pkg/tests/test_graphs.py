from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import connected_graphs, graphs
from twcert.graphs import (
    Graph,
    Path,
    attach_free_subpath,
    clique_number,
    full_subdivision,
    independence_number,
    line_graph,
    long_induced_path,
    NoNeighborOnPath,
    PathTooShort,
    subdivide,
)
from twcert.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
    wall,
)


def test_rejects_loops_and_bad_ids():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_parallel_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_neighborhood_radii():
    p5 = path_graph(5)
    assert p5.neighborhood([2], 1) == (1, 2, 3)
    assert p5.neighborhood([2], 0) == (2,)
    assert p5.neighborhood([0], 2) == (0, 1, 2)
    assert p5.neighborhood([0], 10) == tuple(range(5))


def test_neighborhood_on_wall_branch_vertex():
    g = wall(3, 3)
    v = next(u for u in g.vertices if g.degree(u) == 3)
    assert len(g.neighborhood([v], 1)) == 4


def test_neighborhood_monotone_in_radius():
    g = wall(3, 3)
    prev: set = set()
    for d in range(5):
        cur = set(g.neighborhood([0], d))
        assert prev <= cur
        prev = cur


def test_components_examples():
    p5 = path_graph(5)
    assert p5.components((0, 1, 3, 4)) == [(0, 1), (3, 4)]
    assert p5.components() == [tuple(range(5))]
    c4 = cycle_graph(4)
    assert c4.components((0, 3)) == [(0, 3)]
    # opposite pair of the 4-cycle: 0-1-2-3-0, so 0 and 2 are non-adjacent
    assert c4.components((0, 2)) == [(0,), (2,)]


@given(graphs())
@settings(max_examples=60)
def test_components_partition_and_anticomplete(g):
    comps = g.components()
    seen = [v for comp in comps for v in comp]
    assert sorted(seen) == list(range(g.n))
    for comp in comps:
        if len(comp) > 1:
            assert g.is_connected_set(comp)
    for c1, c2 in combinations(comps, 2):
        assert g.is_anticomplete(c1, c2)


def test_line_graph_small_cases():
    assert line_graph(path_graph(3)).edges == ((0, 1),)
    lk13 = line_graph(star_graph(3))
    assert lk13.n == 3 and lk13.m == 3  # triangle
    lc4 = line_graph(cycle_graph(4))
    assert lc4.n == 4 and sorted(lc4.degree(v) for v in lc4.vertices) == [2, 2, 2, 2]
    assert lc4.is_connected()


@given(graphs(max_n=6))
@settings(max_examples=60)
def test_line_graph_degree_formula(g):
    lg = line_graph(g)
    assert lg.n == g.m
    for i, (u, v) in enumerate(g.edges):
        assert lg.degree(i) == g.degree(u) + g.degree(v) - 2


def test_subdivide_identity_and_path():
    p2 = path_graph(2)
    p4 = subdivide(p2, {(0, 1): 3})
    assert p4.n == 4 and p4.m == 3
    g = wall(2, 2)
    assert subdivide(g, {e: 1 for e in g.edges}) == g
    with pytest.raises(ValueError):
        subdivide(g, {g.edges[0]: 0})
    with pytest.raises(ValueError):
        subdivide(g, {(0, 3): 2})  # not an edge


def test_subdivision_preserves_treewidth_small():
    from twcert.separators import exact_treewidth, treewidth_bounds

    for g in [cycle_graph(4), complete_graph(4), complete_bipartite(2, 3), wall(2, 2)]:
        tw = exact_treewidth(g)[0]
        sub = full_subdivision(g, 2)
        if sub.n <= 14:
            assert exact_treewidth(sub)[0] == tw
        else:
            b = treewidth_bounds(sub)
            assert b.exact == tw


def test_clique_and_independence_numbers():
    assert clique_number(complete_graph(4)) == 4
    assert independence_number(complete_graph(4)) == 1
    assert clique_number(cycle_graph(5)) == 2
    assert independence_number(cycle_graph(5)) == 2
    assert clique_number(complete_bipartite(2, 3)) == 2
    assert independence_number(complete_bipartite(2, 3)) == 3


@given(graphs(max_n=7))
@settings(max_examples=40)
def test_clique_number_matches_bruteforce(g):
    best = 1 if g.n else 0
    for r in range(2, g.n + 1):
        for vs in combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
                best = max(best, r)
    assert clique_number(g) == best


def test_clique_cap():
    from twcert.graphs import CapExceeded

    with pytest.raises(CapExceeded):
        clique_number(complete_graph(8), cap=7)


def test_long_induced_path_guaranteed_cases():
    p6 = path_graph(6)
    got = long_induced_path(p6, 6)
    assert got is not None and len(got.vertices) >= 6
    k13 = star_graph(3)
    got = long_induced_path(k13, 3)
    assert got is not None and len(got.vertices) >= 3
    assert got.is_induced_in(k13)


def test_long_induced_path_below_threshold_still_found():
    # the wall misses the ball bound for 4 vertices but contains long paths
    g = wall(3, 3)
    got = long_induced_path(g, 4)
    assert got is not None and len(got.vertices) >= 4
    assert got.is_induced_in(g)


@given(connected_graphs(max_n=7))
@settings(max_examples=40)
def test_long_induced_path_respects_ball_bound(g):
    delta = g.max_degree()
    ell = 3
    threshold = 1 + sum(delta**i for i in range(ell - 1))
    got = long_induced_path(g, ell)
    if g.n >= threshold:
        assert got is not None and len(got.vertices) >= ell
    if got is not None:
        got.validate(g, induced=True)


def test_attach_free_subpath_direct():
    # path 0..5 plus z=6 adjacent to vertex 0 only
    g = Graph(7, [(i, i + 1) for i in range(5)] + [(6, 0)])
    p = Path(tuple(range(6)))
    got = attach_free_subpath(g, p, 6, 2)
    assert got.vertices == (0, 1, 2)


def test_attach_free_subpath_windows_scanned():
    # z adjacent to both ends; a mid-window must be found on either side
    g = Graph(9, [(i, i + 1) for i in range(7)] + [(8, 0), (8, 7)])
    p = Path(tuple(range(8)))
    got = attach_free_subpath(g, p, 8, 2)
    hits = [v for v in got.vertices if g.has_edge(8, v)]
    assert hits == [got.vertices[0]]


def test_attach_free_subpath_errors_distinct():
    g = Graph(7, [(i, i + 1) for i in range(5)])
    p = Path(tuple(range(6)))
    with pytest.raises(NoNeighborOnPath):
        attach_free_subpath(g, p, 6, 2)
    g2 = Graph(4, [(0, 1), (1, 2), (3, 0)])
    with pytest.raises(PathTooShort):
        attach_free_subpath(g2, Path((0, 1, 2)), 3, 2)


def test_lexicographic_component_order():
    g = Graph(6, [(0, 5), (1, 2), (3, 4)])
    assert g.components() == [(0, 5), (1, 2), (3, 4)]
