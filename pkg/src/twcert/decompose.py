"""Tree decompositions: the validator, chordal clique trees, thickened
circular-interval constructions, and strip-structure assembly."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .generators import LciThickening, StripStructure
from .graphs import Graph, mask_of


@dataclass(frozen=True)
class TreeDecomposition:
    """A tree (nodes 0..k-1) with one bag of graph vertices per node."""

    bags: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        k = len(self.bags)
        for a, b in self.tree_edges:
            if not (0 <= a < k and 0 <= b < k) or a == b:
                raise ValueError("tree edge out of range")
        if k > 0 and len(self.tree_edges) != k - 1:
            raise ValueError("a tree on k nodes has exactly k-1 edges")

    @property
    def n_nodes(self) -> int:
        return len(self.bags)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def tree_is_connected(self) -> bool:
        if self.n_nodes == 0:
            return False
        adj: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for a, b in self.tree_edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_nodes


@dataclass(frozen=True)
class TdReport:
    ok: bool
    width: int
    violations: tuple[str, ...] = ()


def validate_td(g: Graph, td: TreeDecomposition) -> TdReport:
    """Check the three tree-decomposition properties exhaustively."""
    problems: list[str] = []
    if td.n_nodes == 0:
        return TdReport(g.n == 0, -1, ("decomposition has no nodes",) if g.n else ())
    if not td.tree_is_connected():
        problems.append("decomposition tree is not connected")
    covered = set()
    for bag in td.bags:
        for v in bag:
            if not 0 <= v < g.n:
                problems.append(f"bag vertex {v} out of range")
            covered.add(v)
    for v in g.vertices:
        if v not in covered:
            problems.append(f"vertex {v} in no bag")
    bag_masks = [mask_of(b) for b in td.bags]
    for u, v in g.edges:
        need = 1 << u | 1 << v
        if not any(bm & need == need for bm in bag_masks):
            problems.append(f"edge ({u},{v}) inside no bag")
    tadj: list[list[int]] = [[] for _ in range(td.n_nodes)]
    for a, b in td.tree_edges:
        tadj[a].append(b)
        tadj[b].append(a)
    for v in g.vertices:
        nodes = [t for t in range(td.n_nodes) if bag_masks[t] >> v & 1]
        if not nodes:
            continue
        seen = {nodes[0]}
        stack = [nodes[0]]
        node_set = set(nodes)
        while stack:
            for w in tadj[stack.pop()]:
                if w in node_set and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(nodes):
            problems.append(f"bags containing vertex {v} induce a disconnected subtree")
    return TdReport(not problems, td.width, tuple(problems))


def single_bag_td(g: Graph) -> TreeDecomposition:
    return TreeDecomposition(bags=(tuple(range(g.n)),), tree_edges=())


# -- chordal graphs ------------------------------------------------------------


def maximum_cardinality_search(g: Graph) -> list[int]:
    """MCS order (returned in elimination order, i.e. reversed visit order)."""
    weight = [0] * g.n
    visited = [False] * g.n
    order: list[int] = []
    for _ in range(g.n):
        v = max(
            (u for u in g.vertices if not visited[u]),
            key=lambda u: (weight[u], -u),
        )
        visited[v] = True
        order.append(v)
        for w in g.neighbors(v):
            if not visited[w]:
                weight[w] += 1
    order.reverse()
    return order


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        if not later:
            continue
        first = min(later, key=lambda w: pos[w])
        rest = mask_of(w for w in later if w != first)
        if g.neighbor_mask(first) & rest != rest:
            return False
    return True


def find_hole(g: Graph) -> Optional[tuple[int, ...]]:
    """Some chordless cycle of length >= 4, or None if the graph is chordal."""
    for u, v in g.edges:
        for w in g.neighbors(v):
            if w == u or g.has_edge(u, w):
                continue
            allowed = g.full_mask() & ~((g.neighbor_mask(v) | 1 << v) & ~(1 << u) & ~(1 << w))
            dist = g.bfs_distances(w, allowed=allowed)
            if dist[u] < 0:
                continue
            # lexicographically minimal shortest w-u path avoiding N[v]
            path = [u]
            cur = u
            while cur != w:
                cur = min(
                    x
                    for x in g.neighbors(cur)
                    if allowed >> x & 1 and dist[x] == dist[cur] - 1
                )
                path.append(cur)
            cycle = [v] + path  # v-u-...-w-v
            hole = _shrink_to_hole(g, cycle)
            if hole is not None:
                return hole
    return None


def _shrink_to_hole(g: Graph, cycle: list[int]) -> Optional[tuple[int, ...]]:
    """Reduce a cycle with possible chords to a chordless cycle >= 4."""
    while True:
        k = len(cycle)
        if k < 4:
            return None
        chord = None
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                if g.has_edge(cycle[i], cycle[j]):
                    chord = (i, j)
                    break
            if chord:
                break
        if chord is None:
            return tuple(cycle)
        i, j = chord
        half1 = cycle[i : j + 1]
        half2 = cycle[j:] + cycle[: i + 1]
        cycle = half1 if len(half1) >= 4 else half2


class NotChordal(ValueError):
    def __init__(self, hole: tuple[int, ...]):
        super().__init__(f"graph is not chordal; chordless cycle {hole}")
        self.hole = hole


def chordal_td(g: Graph) -> TreeDecomposition:
    """Clique-tree decomposition of a chordal graph: every bag is a clique
    and the width equals the clique number minus one."""
    if g.n == 0:
        return TreeDecomposition(bags=((),), tree_edges=())
    order = maximum_cardinality_search(g)
    if not is_perfect_elimination_ordering(g, order):
        hole = find_hole(g)
        assert hole is not None
        raise NotChordal(hole)
    pos = {v: i for i, v in enumerate(order)}
    bags: list[tuple[int, ...]] = []
    edges: list[tuple[int, int]] = []
    for i, v in enumerate(order):
        later = sorted(w for w in g.neighbors(v) if pos[w] > pos[v])
        bags.append(tuple(sorted([v] + later)))
        if later:
            parent = min(later, key=lambda w: pos[w])
            edges.append((i, pos[parent]))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    return TreeDecomposition(bags=tuple(bags), tree_edges=tuple(sorted(edges)))


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_ordering(g, maximum_cardinality_search(g))


# -- thickened circular-interval decompositions ---------------------------------


class LciConstructionError(RuntimeError):
    """The cut graph failed to be chordal; dumps the instance for diagnosis."""


@dataclass(frozen=True)
class LciTdReport:
    td: TreeDecomposition
    completed_graph: Graph
    cut_clique: tuple[int, ...]
    width_bound: int  # 4*Delta + 3 for the thickened graph


def fuzzy_lci_td(lci: LciThickening) -> LciTdReport:
    """Width <= 4*Delta+3 decomposition of a thickened circular-interval graph.

    Completing the fuzzy blocks gives a circular interval graph; deleting
    every block on the first arc cuts the circle, the remainder is chordal,
    and re-adding the cut clique to every bag decomposes the whole graph.
    """
    g = lci.graph
    spec = lci.spec
    model = lci.model
    # complete the fuzzy blocks
    extra = []
    for u, v in spec.fuzz:
        bu, bv = spec.block(u), spec.block(v)
        extra.extend((a, b) for a in bu for b in bv)
    completed = Graph(g.n, list(g.edges) + extra)
    cut: list[int] = []
    for u in range(spec.base.n):
        if model.contains(0, model.points[u]):
            cut.extend(spec.block(u))
    cut_set = sorted(cut)
    rest = [v for v in range(g.n) if v not in set(cut_set)]
    sub, sub_vs = completed.induced_subgraph(rest)
    if sub.n == 0:
        inner = TreeDecomposition(bags=((),), tree_edges=())
    else:
        try:
            inner = chordal_td(sub)
        except NotChordal as exc:
            raise LciConstructionError(
                f"cut graph not chordal (hole {exc.hole}); model={model}, spec={spec}"
            ) from exc
    bags = tuple(
        tuple(sorted(set(cut_set) | {sub_vs[x] for x in bag})) for bag in inner.bags
    )
    td = TreeDecomposition(bags=bags, tree_edges=inner.tree_edges)
    return LciTdReport(
        td=td,
        completed_graph=completed,
        cut_clique=tuple(cut_set),
        width_bound=4 * g.max_degree() + 3,
    )


# -- strip-structure assembly ----------------------------------------------------


@dataclass(frozen=True)
class StripAssemblyReport:
    td: TreeDecomposition
    hub_nodes: tuple[int, ...]  # nodes carried over from the pattern decomposition
    bound_hub: int  # per-node bound |bag0|*(Delta+1)^2
    bound_strip: int  # per-node bound |bag_e| + |end u| + |end v|
    bounds_hold: bool


def strip_assembly(
    ss: StripStructure,
    td0: TreeDecomposition,
    strip_tds: Mapping[int, TreeDecomposition],
) -> StripAssemblyReport:
    """Glue per-strip decompositions onto a decomposition of the pattern.

    Every strip tree is linked by a fresh edge to a pattern node whose bag
    holds both ends of the strip's pattern edge; hub bags collect the
    end-sets of their pattern vertices, strip bags add both end-sets.
    """
    ss.validate()
    # td0 must decompose the pattern graph (parallel edges collapse)
    simple_pattern = Graph(
        ss.pattern_n, [(a, b) for a, b in ss.pattern_edges if a != b]
    )
    rep = validate_td(simple_pattern, td0)
    if not rep.ok:
        raise ValueError(f"pattern decomposition invalid: {rep.violations}")
    for i in range(len(ss.pattern_edges)):
        if i not in strip_tds:
            raise ValueError(f"missing decomposition for strip {i}")
        sub, sub_vs = ss.strip_graph(i)
        srep = validate_td(sub, strip_tds[i])
        if not srep.ok:
            raise ValueError(f"strip {i} decomposition invalid: {srep.violations}")

    delta = ss.host.max_degree()
    bags: list[tuple[int, ...]] = []
    tree_edges: list[tuple[int, int]] = []
    hub_bag_of: list[set[int]] = [set() for _ in range(td0.n_nodes)]
    for t in range(td0.n_nodes):
        for u in td0.bags[t]:
            for i, slot in ss.incident(u):
                hub_bag_of[t].update(ss.eta_end[i][slot])
    bags.extend(tuple(sorted(b)) for b in hub_bag_of)
    tree_edges.extend(td0.tree_edges)
    hub_nodes = tuple(range(td0.n_nodes))

    bound_strip = 0
    offset = td0.n_nodes
    for i, (a, b) in enumerate(ss.pattern_edges):
        std = strip_tds[i]
        _, sub_vs = ss.strip_graph(i)
        left, right = ss.eta_end[i]
        add = tuple(sorted(set(left) | set(right)))
        # link node: a td0 bag containing both ends of the pattern edge
        candidates = [
            t for t in range(td0.n_nodes) if a in td0.bags[t] and b in td0.bags[t]
        ]
        if not candidates:
            raise ValueError(f"no pattern bag contains both ends of edge {i}")
        s_e = candidates[0]
        t_e = 0  # minimum-id node of the strip tree
        for t in range(std.n_nodes):
            bag = tuple(sorted({sub_vs[x] for x in std.bags[t]} | set(add)))
            bags.append(bag)
            bound_strip = max(
                bound_strip, len(std.bags[t]) + len(left) + len(right)
            )
        tree_edges.extend((offset + x, offset + y) for x, y in std.tree_edges)
        tree_edges.append((s_e, offset + t_e))
        offset += std.n_nodes

    td = TreeDecomposition(bags=tuple(bags), tree_edges=tuple(tree_edges))
    bound_hub = max(
        (len(td0.bags[t]) * (delta + 1) ** 2 for t in hub_nodes), default=0
    )
    holds = all(
        len(bags[t]) <= len(td0.bags[t]) * (delta + 1) ** 2 for t in hub_nodes
    )
    # strip bags respect their additive bound by construction; re-check anyway
    pos = td0.n_nodes
    for i in range(len(ss.pattern_edges)):
        std = strip_tds[i]
        left, right = ss.eta_end[i]
        for t in range(std.n_nodes):
            if len(bags[pos + t]) > len(std.bags[t]) + len(left) + len(right):
                holds = False
        pos += std.n_nodes
    return StripAssemblyReport(
        td=td,
        hub_nodes=hub_nodes,
        bound_hub=bound_hub,
        bound_strip=bound_strip,
        bounds_hold=holds,
    )
