from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from twcert.decompose import validate_td
from twcert.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
    wall,
)
from twcert.graphs import CapExceeded, Graph
from twcert.separators import (
    balanced_separator_from_td,
    exact_treewidth,
    harvey_wood_check,
    is_balanced_separator,
    min_balanced_separator,
    separation_number,
    treewidth_bounds,
    treewidth_or_bounds,
)
from twcert.weights import WeightFunction

HALF = Fraction(1, 2)


def test_is_balanced_separator_examples():
    single = Graph(1, [])
    w1 = WeightFunction.uniform(single)
    assert is_balanced_separator(single, w1, HALF, [0])
    # the empty set leaves the whole vertex as a component of weight 1 > c
    assert not is_balanced_separator(single, w1, HALF, [])
    p5 = path_graph(5)
    u = WeightFunction.uniform(p5)
    assert is_balanced_separator(p5, u, HALF, [2])  # both sides weigh 2/5
    assert not is_balanced_separator(p5, u, HALF, [0])  # leftover 4/5
    with pytest.raises(ValueError):
        is_balanced_separator(p5, u, Fraction(1, 3), [2])
    bad = WeightFunction(tuple(range(5)), (Fraction(1),) * 5)
    with pytest.raises(ValueError):
        is_balanced_separator(p5, bad, HALF, [2])


def test_min_balanced_separator_values():
    p5 = path_graph(5)
    cert = min_balanced_separator(p5, WeightFunction.uniform(p5), HALF)
    assert cert.separator == (2,)
    k6 = complete_graph(6)
    cert = min_balanced_separator(k6, WeightFunction.uniform(k6), HALF)
    assert cert.size == 3  # a K3 remainder weighs exactly 1/2
    # the lone component of a single vertex weighs 1 > c, so the vertex
    # itself is the minimum separator
    single = Graph(1, [])
    cert = min_balanced_separator(single, WeightFunction.uniform(single), HALF)
    assert cert.separator == (0,)
    assert all(wt <= HALF for _, wt in cert.component_weights)


def test_min_separator_is_minimum_and_lex_first():
    g = cycle_graph(6)
    u = WeightFunction.uniform(g)
    cert = min_balanced_separator(g, u, HALF)
    assert cert.size == 2
    # no size-1 separator exists; the lexicographically first pair wins
    for v in g.vertices:
        assert not is_balanced_separator(g, u, HALF, [v])
    assert cert.separator == (0, 2)


def test_separation_number_values():
    assert separation_number(path_graph(4), HALF) == 1
    assert separation_number(complete_graph(4), HALF) == 2
    # a lone vertex still needs itself removed for the singleton subset
    assert separation_number(Graph(1, []), HALF) == 1
    assert separation_number(Graph(2, [(0, 1)]), HALF) == 1
    with pytest.raises(CapExceeded):
        separation_number(complete_graph(11), HALF, cap=10)


def _tw_decision_bruteforce(g: Graph, k: int) -> bool:
    """Elimination-order search without memoisation, for cross-checking."""

    def step(adj: dict[int, set[int]]) -> bool:
        if not adj:
            return True
        if all(len(nb) <= k for nb in adj.values()):
            pass
        for v in sorted(adj):
            if len(adj[v]) <= k:
                nb = adj[v]
                new = {
                    u: (s | nb) - {u, v} if u in nb else s - {v}
                    for u, s in adj.items()
                    if u != v
                }
                if step(new):
                    return True
        return False

    if g.n == 0:
        return True
    return step({v: set(g.neighbors(v)) for v in g.vertices})


def test_exact_treewidth_anchors():
    assert exact_treewidth(complete_graph(4))[0] == 3
    assert exact_treewidth(complete_bipartite(3, 3))[0] == 3
    assert exact_treewidth(path_graph(7))[0] == 1
    assert exact_treewidth(cycle_graph(6))[0] == 2
    assert exact_treewidth(star_graph(5))[0] == 1
    assert exact_treewidth(wall(3, 3))[0] == 3
    assert exact_treewidth(Graph(0, []))[0] == -1


def test_exact_treewidth_witness_validates():
    for g in [wall(3, 3), complete_bipartite(3, 4), cycle_graph(7)]:
        tw, td = exact_treewidth(g)
        rep = validate_td(g, td)
        assert rep.ok and rep.width == tw


@given(connected_graphs(max_n=6))
@settings(max_examples=30, deadline=None)
def test_exact_treewidth_matches_elimination_search(g):
    tw, _ = exact_treewidth(g)
    assert _tw_decision_bruteforce(g, tw)
    if tw > 0:
        assert not _tw_decision_bruteforce(g, tw - 1)


def test_treewidth_invariant_under_relabeling():
    g = wall(2, 3)
    perm = list(reversed(range(g.n)))
    relabeled = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert exact_treewidth(g)[0] == exact_treewidth(relabeled)[0]


def test_treewidth_bounds_sandwich():
    b = treewidth_bounds(wall(3, 3))
    assert b.lower <= 3 <= b.upper
    assert validate_td(wall(3, 3), b.td).ok
    big = complete_graph(20)
    out = treewidth_or_bounds(big, cap=14)
    assert out.exact == 19


def test_cap_exceeded_reports():
    with pytest.raises(CapExceeded):
        exact_treewidth(complete_graph(16), cap=14)


def test_harvey_wood_examples():
    rep = harvey_wood_check(path_graph(5), HALF)
    assert rep.tw == 1 and rep.upper_bound_holds
    assert Fraction(rep.tw + 1) <= Fraction(rep.sep) / (1 - HALF)
    rep = harvey_wood_check(complete_graph(4), HALF)
    assert rep.tw == 3 and rep.sep == 2 and rep.upper_bound_holds  # tight: 4 <= 4
    rep = harvey_wood_check(cycle_graph(4), HALF)
    assert rep.upper_bound_holds and rep.small_separator_found_for_all


def test_balanced_separator_from_td():
    g = cycle_graph(8)
    tw, td = exact_treewidth(g)
    w = WeightFunction.uniform(g)
    bag = balanced_separator_from_td(g, w, HALF, td)
    assert bag is not None and len(bag) <= tw + 1
    assert is_balanced_separator(g, w, HALF, bag)
