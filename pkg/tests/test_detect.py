import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from twcert.config import Budget
from twcert.detect import (
    breaks,
    classify_connector,
    find_creature,
    find_induced,
    find_line_of_subdivided_wall,
    find_subdivided_claw,
    find_t_pyramid,
    find_t_theta,
    induced_copies,
    verify_forcer,
)
from twcert.generators import (
    complete_bipartite,
    complete_graph,
    creature,
    cycle_graph,
    path_graph,
    pyramid,
    star_graph,
    subdivided_claw,
    theta,
    wall,
)
from twcert.graphs import BudgetExhausted, Graph, line_graph


def test_find_induced_semantics():
    k13 = star_graph(3)
    hit = find_induced(k13, k13)
    assert hit is not None and hit.image == (0, 1, 2, 3)
    assert find_induced(cycle_graph(4), cycle_graph(3)) is None
    # induced semantics: a chorded 4-cycle is not a hole
    assert find_induced(complete_graph(4), cycle_graph(4)) is None
    assert find_induced(complete_graph(4), path_graph(3)) is None


def test_find_induced_lexicographic_first():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    hit = find_induced(g, path_graph(3))
    assert hit.role("mapping") == (0, 1, 2)


def test_induced_copies_are_sets_in_order():
    g = cycle_graph(5)
    copies = induced_copies(g, path_graph(3))
    assert copies == sorted(copies)
    assert len(copies) == 5


def test_budget_exhaustion_is_distinct():
    g = complete_bipartite(4, 4)
    with pytest.raises(BudgetExhausted):
        find_induced(g, complete_bipartite(3, 3), budget=Budget(10))


def test_theta_detector():
    assert find_t_theta(complete_bipartite(2, 3), 2) is not None
    assert find_t_theta(theta(3, 3, 3).graph, 4) is None
    assert find_t_theta(theta(3, 3, 3).graph, 3) is not None
    assert find_t_theta(complete_graph(5), 2) is None
    m = find_t_theta(complete_bipartite(2, 3), 2)
    a, b = m.role("ends")
    assert not complete_bipartite(2, 3).has_edge(a, b)


def test_pyramid_detector():
    assert find_t_pyramid(complete_graph(4), 2) is None
    g = pyramid(2, 2, 2).graph
    assert find_t_pyramid(g, 2) is not None
    assert find_t_pyramid(g, 3) is None
    assert find_t_pyramid(pyramid(1, 2, 2).graph, 1) is not None


def test_subdivided_claw_detector():
    w33 = wall(3, 3)
    hit = find_subdivided_claw(w33, 1, 1, 1)
    assert hit is not None
    root = hit.role("root")[0]
    assert w33.degree(root) == 3
    assert find_subdivided_claw(cycle_graph(3), 1, 1, 1) is None
    s = subdivided_claw(2, 2, 2)
    hit = find_subdivided_claw(s.graph, 2, 2, 2)
    assert hit.role("root") == (0,)


def test_creature_detector():
    for t in (0, 1, 2):
        sp = subdivided_claw(t + 1, t + 1, t + 1).graph
        got = find_creature(sp, 3, t)
        assert got is not None
        for p in got.paths:
            assert len(p) == t + 1
    assert find_creature(cycle_graph(3), 3, 0) is None
    wit = creature(4, 2, 2)
    assert find_creature(wit.graph, 4, 2) is not None


def test_wall_line_detector():
    lw = line_graph(wall(3, 3))
    assert find_line_of_subdivided_wall(lw, 3) is not None
    assert find_line_of_subdivided_wall(cycle_graph(3), 3) is None
    # walls are triangle-free, so no line graph of a subdivided wall embeds
    assert find_line_of_subdivided_wall(wall(3, 3), 3) is None
    # k = 2: the family is exactly the holes
    assert find_line_of_subdivided_wall(cycle_graph(5), 2) is not None
    assert find_line_of_subdivided_wall(complete_graph(4), 2) is None


def test_breaks_examples():
    k13 = star_graph(3)
    assert breaks(k13, [0], [1, 2, 3])  # vacuous: no components remain
    p5 = path_graph(5)
    assert breaks(p5, [2], [0, 4])
    assert not breaks(p5, [0], [2])
    with pytest.raises(ValueError):
        breaks(p5, [0], [0, 2])


def test_classify_connector_apex():
    out = classify_connector(star_graph(3), 1, 2, 3)
    assert out.variant == "ii"
    assert out.role("apex") == (0,)
    assert set(out.matched) == {"ii"}


def test_classify_connector_triangle():
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    out = classify_connector(g, 3, 4, 5)
    assert out.variant == "iii"
    assert sorted(out.role("triangle")) == [0, 1, 2]


def test_classify_connector_path_case():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)])
    out = classify_connector(g, 0, 3, 4)
    assert out.variant == "i"
    assert out.role("third") == (4,)
    kn = out.role("third_neighbors")
    assert len(kn) == 2 and g.has_edge(*kn)


def test_classify_connector_nonadjacent_case():
    # third vertex with two non-adjacent neighbors on the path
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 1), (5, 3)])
    out = classify_connector(g, 0, 4, 5)
    assert out.variant == "i"


def test_classify_connector_minimality():
    # minimal connector must shrink the full component
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 5)])
    out = classify_connector(g, 0, 3, 6)
    h = set(out.connector)
    for v in h:
        rest = tuple(sorted(h - {v}))
        ok = False
        for comp in g.components(rest) if rest else []:
            if all(
                any(g.has_edge(x, u) for u in comp) for x in (0, 3, 6)
            ):
                ok = True
        assert not ok, f"connector not minimal: {v} removable"


def test_classify_connector_requires_connector():
    with pytest.raises(ValueError):
        classify_connector(path_graph(4), 0, 1, 3)


@given(connected_graphs(min_n=5, max_n=7))
@settings(max_examples=40, deadline=None)
def test_classify_connector_witness_is_sound(g):
    xs = (0, 1, 2)
    x_mask = {0, 1, 2}
    cands = [
        comp
        for comp in g.components(tuple(v for v in g.vertices if v not in x_mask))
        if all(any(g.has_edge(x, u) for u in comp) for x in xs)
    ]
    if not cands:
        return
    out = classify_connector(g, *xs)
    h = set(out.connector)
    assert all(any(g.has_edge(x, u) for u in h) for x in xs)
    assert g.is_connected_set(out.connector)
    if out.variant == "ii":
        apex = out.role("apex")[0]
        paths = [out.role(f"path{i}") for i in (1, 2, 3)]
        assert {p[0] for p in paths} == {apex}
        assert {p[-1] for p in paths} == set(xs)
        for p in paths:
            for a, b in zip(p, p[1:]):
                assert g.has_edge(a, b)


def test_verify_forcer_vacuous_and_real():
    c6 = cycle_graph(6)
    forcer = Graph(5, list(star_graph(3).edges))  # claw plus isolated vertex
    rep = verify_forcer(c6, forcer, path_graph(3))
    assert rep.holds and rep.copies_checked == 0
    host = subdivided_claw(3, 3, 3).graph
    rep = verify_forcer(host, subdivided_claw(2, 2, 2).graph, star_graph(3))
    assert rep.holds and rep.copies_checked >= 1


def test_verify_forcer_counterexample_is_genuine():
    # a 4-cycle: each edge (as pattern) never breaks the opposite edge
    c4 = cycle_graph(4)
    rep = verify_forcer(c4, c4, path_graph(2))
    if not rep.holds:
        y = rep.counterexample
        assert y is not None
        sub, sub_vs = c4.induced_subgraph(y)
        for inner in induced_copies(sub, path_graph(2)):
            xs = tuple(sorted(sub_vs[i] for i in inner))
            rest = tuple(sorted(set(y) - set(xs)))
            assert not breaks(c4, xs, rest)


@given(connected_graphs(max_n=7))
@settings(max_examples=30, deadline=None)
def test_theta_monotone_in_t(g):
    if find_t_theta(g, 3) is not None:
        assert find_t_theta(g, 2) is not None
