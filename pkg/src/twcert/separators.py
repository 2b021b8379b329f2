"""Exact weighted balanced separators, separation number, and treewidth.

The treewidth solver is the repo-wide oracle: dynamic programming over
vertex subsets along elimination orders, returning a witness decomposition.
For instances above the cap a certified lower/upper bound pair is produced
instead (contraction degeneracy vs. minimum-fill elimination).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .decompose import TreeDecomposition
from .graphs import CapExceeded, Graph, bits, mask_of
from .weights import WeightFunction, check_balance_parameter


@dataclass(frozen=True)
class SeparatorCertificate:
    """A balanced separator with the component weights it certifies."""

    separator: tuple[int, ...]
    c: Fraction
    component_weights: tuple[tuple[tuple[int, ...], Fraction], ...]

    @property
    def size(self) -> int:
        return len(self.separator)


def _require_normal(w: WeightFunction) -> None:
    if not w.is_normal():
        raise ValueError(f"weight function must be normal, total is {w.total}")


def component_weights(
    g: Graph, w: WeightFunction, x_mask: int
) -> list[tuple[int, Fraction]]:
    allowed = g.full_mask() & ~x_mask
    return [(comp, w.of_mask(comp)) for comp in g.component_masks(allowed)]


def is_balanced_separator(
    g: Graph, w: WeightFunction, c: Fraction, x: Iterable[int]
) -> bool:
    """Exact check: every component of g minus x weighs at most c."""
    _require_normal(w)
    check_balance_parameter(c)
    x_mask = mask_of(g._check_vertices(x))
    return all(wt <= c for _, wt in component_weights(g, w, x_mask))


def min_balanced_separator(
    g: Graph,
    w: WeightFunction,
    c: Fraction,
    max_size: Optional[int] = None,
    cap: int = 16,
) -> Optional[SeparatorCertificate]:
    """Minimum-cardinality balanced separator by increasing-size subset search;
    ties resolve to the lexicographically first subset.  With max_size set,
    returns None when no separator that small exists."""
    _require_normal(w)
    check_balance_parameter(c)
    if g.n > cap:
        raise CapExceeded(f"separator search capped at n={cap}, got {g.n}")
    top = g.n if max_size is None else min(max_size, g.n)
    for k in range(top + 1):
        for xs in combinations(range(g.n), k):
            x_mask = mask_of(xs)
            parts = component_weights(g, w, x_mask)
            if all(wt <= c for _, wt in parts):
                return SeparatorCertificate(
                    separator=xs,
                    c=c,
                    component_weights=tuple(
                        (tuple(bits(cm)), wt) for cm, wt in parts
                    ),
                )
    return None


def has_balanced_separator_of_size(
    g: Graph, w: WeightFunction, c: Fraction, d: int
) -> bool:
    """Exhaustive: does any X with |X| <= d balance every leftover component?"""
    return min_balanced_separator(g, w, c, max_size=d, cap=g.n) is not None


def separation_number(g: Graph, c: Fraction, cap: int = 10) -> int:
    """Smallest k such that every vertex subset S admits an X, |X| <= k,
    leaving every component with at most c|S| vertices of S.

    Full enumeration over all S; complementary subsets are not interchangeable
    (S = V and S = empty already need different k), so nothing is skipped.
    """
    check_balance_parameter(c)
    if g.n > cap:
        raise CapExceeded(f"separation number capped at n={cap}, got {g.n}")
    best = 0
    full = g.full_mask()
    for s_mask in range(full + 1):
        s_size = s_mask.bit_count()
        limit = c * s_size

        def admits(k: int) -> bool:
            for xs in combinations(range(g.n), k):
                x_mask = mask_of(xs)
                if all(
                    (comp & s_mask).bit_count() <= limit
                    for comp in g.component_masks(full & ~x_mask)
                ):
                    return True
            return False

        if admits(best):
            continue
        k = best + 1
        while not admits(k):
            k += 1
        best = k
    return best


# -- exact treewidth -------------------------------------------------------------


def _reach_q(g: Graph, v: int, s_mask: int) -> int:
    """Vertices outside s and v seen from v through s (elimination degree)."""
    comp = g.reach_mask(g.neighbor_mask(v) & s_mask, s_mask)
    out = g.neighbor_mask(v)
    for u in bits(comp):
        out |= g.neighbor_mask(u)
    return out & ~s_mask & ~(1 << v)


def _elimination_td(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Bags from eliminating along `order` in the fill-in graph."""
    masks = list(g._masks)
    pos = {v: i for i, v in enumerate(order)}
    bags: list[tuple[int, ...]] = []
    edges: list[tuple[int, int]] = []
    for i, v in enumerate(order):
        nb = masks[v]
        bag = tuple(sorted([v] + list(bits(nb))))
        bags.append(bag)
        neigh = list(bits(nb))
        for a in neigh:
            masks[a] |= nb & ~(1 << a)
            masks[a] &= ~(1 << v)
        later = [w for w in neigh if pos[w] > i]
        if later:
            edges.append((i, pos[min(later, key=lambda w: pos[w])]))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    return TreeDecomposition(bags=tuple(bags), tree_edges=tuple(sorted(edges)))


def exact_treewidth(g: Graph, cap: int = 14) -> tuple[int, TreeDecomposition]:
    """Exact treewidth with a witness decomposition.

    Subset dynamic programming over elimination prefixes; feasible to about
    n = 14 in reasonable time.  Larger instances raise CapExceeded; use
    treewidth_bounds for those.
    """
    if g.n > cap:
        raise CapExceeded(f"exact treewidth capped at n={cap}, got {g.n}")
    n = g.n
    if n == 0:
        return -1, TreeDecomposition(bags=((),), tree_edges=())
    full = (1 << n) - 1
    size = full + 1
    tw = [0] * size
    choice = [0] * size
    tw[0] = -1
    order_by_popcount = sorted(range(size), key=lambda s: s.bit_count())
    for s_mask in order_by_popcount:
        if s_mask == 0:
            continue
        best = n
        best_v = -1
        rest = s_mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            prev = s_mask ^ low
            q = _reach_q(g, v, prev).bit_count()
            val = tw[prev] if tw[prev] > q else q
            if val < best:
                best = val
                best_v = v
        tw[s_mask] = best
        choice[s_mask] = best_v
    order_rev: list[int] = []
    s_mask = full
    while s_mask:
        v = choice[s_mask]
        order_rev.append(v)
        s_mask ^= 1 << v
    order = list(reversed(order_rev))
    td = _elimination_td(g, order)
    assert td.width == tw[full]
    return tw[full], td


def contraction_degeneracy(g: Graph) -> int:
    """Repeatedly contract a minimum-degree vertex into its least neighbor,
    tracking the largest minimum degree; a treewidth lower bound."""
    adj: dict[int, set[int]] = {v: set(g.neighbors(v)) for v in g.vertices}
    best = 0
    while len(adj) > 1:
        v = min(adj, key=lambda u: (len(adj[u]), u))
        deg = len(adj[v])
        best = max(best, deg)
        if deg == 0:
            del adj[v]
            continue
        u = min(adj[v], key=lambda x: (len(adj[x]), x))
        merged = (adj[v] | adj[u]) - {u, v}
        for x in adj[v]:
            adj[x].discard(v)
        for x in adj[u]:
            adj[x].discard(u)
        del adj[v]
        adj[u] = merged
        for x in merged:
            adj[x].add(u)
    return best


def min_fill_order(g: Graph) -> list[int]:
    adj: list[set[int]] = [set(g.neighbors(v)) for v in g.vertices]
    alive = set(g.vertices)
    order: list[int] = []
    while alive:
        def fill(v: int) -> int:
            nb = [u for u in adj[v] if u in alive]
            return sum(
                1 for a, b in combinations(nb, 2) if b not in adj[a]
            )

        v = min(alive, key=lambda u: (fill(u), len([x for x in adj[u] if x in alive]), u))
        nb = [u for u in adj[v] if u in alive]
        for a, b in combinations(nb, 2):
            adj[a].add(b)
            adj[b].add(a)
        alive.remove(v)
        order.append(v)
    return order


@dataclass(frozen=True)
class TreewidthBounds:
    lower: int
    upper: int
    td: TreeDecomposition

    @property
    def exact(self) -> Optional[int]:
        return self.lower if self.lower == self.upper else None


def treewidth_bounds(g: Graph) -> TreewidthBounds:
    """Certified sandwich: contraction-degeneracy lower bound and a witnessed
    minimum-fill elimination upper bound."""
    if g.n == 0:
        return TreewidthBounds(-1, -1, TreeDecomposition(bags=((),), tree_edges=()))
    td = _elimination_td(g, min_fill_order(g))
    return TreewidthBounds(contraction_degeneracy(g), td.width, td)


def treewidth_or_bounds(g: Graph, cap: int = 14) -> TreewidthBounds:
    if g.n <= cap:
        width, td = exact_treewidth(g, cap=cap)
        return TreewidthBounds(width, width, td)
    return treewidth_bounds(g)


# -- separation-number / treewidth bridge ------------------------------------------


@dataclass(frozen=True)
class HarveyWoodReport:
    tw: int
    sep: int
    c: Fraction
    upper_bound_holds: bool  # tw + 1 <= sep / (1 - c)
    uniform_k: int  # max over uniform weights of the min separator size
    uniform_bound_holds: bool  # tw <= uniform_k / (1 - c)
    small_separator_found_for_all: bool  # every sampled w admits size <= tw+1
    weights_tried: int


def balanced_separator_from_td(
    g: Graph, w: WeightFunction, c: Fraction, td: TreeDecomposition
) -> Optional[tuple[int, ...]]:
    """Some bag of a decomposition is always a balanced separator; scan for it."""
    for bag in td.bags:
        if is_balanced_separator(g, w, c, bag):
            return bag
    return None


def harvey_wood_check(
    g: Graph,
    c: Fraction,
    seed: int = 7,
    n_weights: int = 20,
    cap: int = 8,
) -> HarveyWoodReport:
    """Cross-check the separation-number and balanced-separator bridges.

    Computes tw and the separation number exactly, checks
    tw + 1 <= sep/(1-c), evaluates the uniform-weight route, and verifies
    that seeded normal weight functions all admit a balanced separator of
    size at most tw + 1 (one of the witness bags always works).
    """
    check_balance_parameter(c)
    if g.n > cap:
        raise CapExceeded(f"bridge check capped at n={cap}, got {g.n}")
    tw, td = exact_treewidth(g, cap=cap)
    sep = separation_number(g, c, cap=cap)
    upper = Fraction(tw + 1) <= Fraction(sep) / (1 - c)

    uniform_k = 0
    full = g.full_mask()
    for y_mask in range(1, full + 1):
        w_y = WeightFunction.uniform(g, support=bits(y_mask))
        cert = min_balanced_separator(g, w_y, c, cap=g.n)
        assert cert is not None
        uniform_k = max(uniform_k, cert.size)
    uniform_ok = Fraction(tw) <= Fraction(uniform_k) / (1 - c)

    rng = random.Random(seed)
    all_small = True
    for _ in range(n_weights):
        raw = [Fraction(rng.randint(0, 8)) for _ in g.vertices]
        if sum(raw) == 0:
            raw[0] = Fraction(1)
        total = sum(raw)
        w = WeightFunction(tuple(g.vertices), tuple(x / total for x in raw))
        found = balanced_separator_from_td(g, w, c, td)
        if found is None:
            found_cert = min_balanced_separator(g, w, c, max_size=tw + 1, cap=g.n)
            found = None if found_cert is None else found_cert.separator
        if found is None or len(found) > tw + 1:
            all_small = False
    return HarveyWoodReport(
        tw=tw,
        sep=sep,
        c=c,
        upper_bound_holds=upper,
        uniform_k=uniform_k,
        uniform_bound_holds=uniform_ok,
        small_separator_found_for_all=all_small,
        weights_tried=n_weights,
    )
