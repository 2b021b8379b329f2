"""Immutable simple undirected graphs with dense integer vertex ids.

Vertices are 0..n-1; every set order and tie-break in the toolkit derives
from ascending id order, so "lexicographically minimum" choices are
deterministic.  Adjacency is kept both as sorted tuples and as integer
bitmasks; the bitmasks drive all the exhaustive searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Optional


class CapExceeded(RuntimeError):
    """An instance is larger than the configured cap for an exact search."""


class BudgetExhausted(RuntimeError):
    """A bounded search ran out of its node budget before finishing."""


def lex_key(vs: Iterable[int]) -> tuple[int, ...]:
    """Sorted-id sequence used for all lexicographic comparisons of vertex sets."""
    return tuple(sorted(vs))


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite simple undirected graph, frozen after construction."""

    __slots__ = ("n", "_edges", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at {u} not allowed in a simple graph")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self._edges = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._masks = tuple(masks)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def _check_vertices(self, vs: Iterable[int]) -> tuple[int, ...]:
        t = lex_key(vs)
        for v in t:
            if not (0 <= v < self.n):
                raise ValueError(f"vertex {v} out of range for n={self.n}")
        if len(set(t)) != len(t):
            raise ValueError("duplicate vertices in set")
        return t

    # -- neighborhoods and connectivity ----------------------------------

    def set_neighbor_mask(self, vs_mask: int) -> int:
        """Open neighborhood N(X) as a mask."""
        m = 0
        for v in bits(vs_mask):
            m |= self._masks[v]
        return m & ~vs_mask

    def neighborhood(self, x: Iterable[int], d: int) -> tuple[int, ...]:
        """All vertices at distance at most d from the set x (d=0 gives x)."""
        xs = self._check_vertices(x)
        if d < 0:
            raise ValueError("radius must be non-negative")
        cur = mask_of(xs)
        for _ in range(d):
            nxt = cur
            for v in bits(cur):
                nxt |= self._masks[v]
            if nxt == cur:
                break
            cur = nxt
        return tuple(bits(cur))

    def reach_mask(self, seed: int, allowed: int) -> int:
        """Vertices of `allowed` reachable from `seed & allowed` inside `allowed`."""
        cur = seed & allowed
        while True:
            nxt = cur
            for v in bits(cur):
                nxt |= self._masks[v] & allowed
            if nxt == cur:
                return cur
            cur = nxt

    def component_masks(self, allowed: int) -> list[int]:
        """Connected components of the induced subgraph on `allowed`, by min id."""
        comps = []
        rest = allowed
        while rest:
            seed = rest & -rest
            comp = self.reach_mask(seed, allowed)
            comps.append(comp)
            rest &= ~comp
        return comps

    def components(self, s: Optional[Iterable[int]] = None) -> list[tuple[int, ...]]:
        """Partition of s (default: all vertices) into connected components.

        Components come back in lexicographic order of their sorted id
        sequences, which coincides with ascending minimum id.
        """
        allowed = self.full_mask() if s is None else mask_of(self._check_vertices(s))
        return [tuple(bits(c)) for c in self.component_masks(allowed)]

    def is_connected_set(self, s: Iterable[int]) -> bool:
        m = mask_of(self._check_vertices(s))
        if m == 0:
            return False
        return self.reach_mask(m & -m, m) == m

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return self.is_connected_set(range(self.n))

    def bfs_distances(self, source: int, allowed: Optional[int] = None) -> list[int]:
        """Distances from source within `allowed` (-1 for unreachable)."""
        if allowed is None:
            allowed = self.full_mask()
        dist = [-1] * self.n
        if not allowed >> source & 1:
            return dist
        dist[source] = 0
        frontier = 1 << source
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= self._masks[v]
            nxt &= allowed & ~seen
            for v in bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        return dist

    def distance(self, u: int, v: int) -> int:
        return self.bfs_distances(u)[v]

    def diameter_of(self, s: Iterable[int]) -> int:
        """Max distance in the whole graph between two vertices of s."""
        vs = self._check_vertices(s)
        best = 0
        for u in vs:
            dist = self.bfs_distances(u)
            for v in vs:
                if dist[v] < 0:
                    raise ValueError("set spans disconnected parts of the graph")
                best = max(best, dist[v])
        return best

    def shortest_path(self, u: int, v: int) -> Optional[tuple[int, ...]]:
        """Lexicographically minimal shortest u-v path; shortest paths are induced."""
        dist = self.bfs_distances(u)
        if dist[v] < 0:
            return None
        path = [v]
        cur = v
        while cur != u:
            cur = min(w for w in self._adj[cur] if dist[w] == dist[cur] - 1)
            path.append(cur)
        return tuple(reversed(path))

    def induced_subgraph(self, s: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph with dense ids plus the sorted original-id map."""
        vs = self._check_vertices(s)
        index = {v: i for i, v in enumerate(vs)}
        sub_edges = [
            (index[u], index[v]) for u, v in self._edges if u in index and v in index
        ]
        return Graph(len(vs), sub_edges), vs

    def complement(self) -> "Graph":
        return Graph(
            self.n,
            [
                (u, v)
                for u, v in combinations(range(self.n), 2)
                if not self.has_edge(u, v)
            ],
        )

    def is_clique(self, s: Iterable[int]) -> bool:
        vs = self._check_vertices(s)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_anticomplete(self, x: Iterable[int], y: Iterable[int]) -> bool:
        my = mask_of(y)
        return all(not self._masks[v] & my for v in x)


@dataclass(frozen=True)
class Path:
    """A path given by its vertex sequence; length counts edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def validate(self, g: Graph, induced: bool = False) -> None:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            raise ValueError("path repeats a vertex")
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"consecutive vertices {a},{b} not adjacent")
        if induced and not self.is_induced_in(g):
            raise ValueError("path has a chord")

    def is_induced_in(self, g: Graph) -> bool:
        vs = self.vertices
        for i, u in enumerate(vs):
            for v in vs[i + 2 :]:
                if g.has_edge(u, v):
                    return False
        return True


# -- derived constructions ------------------------------------------------


def disjoint_union(*parts: Graph) -> Graph:
    """Disjoint union; vertex ids of later parts are shifted up."""
    n = 0
    edges: list[tuple[int, int]] = []
    for g in parts:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of g, ordered by the sorted edge pairs."""
    edges = g.edges
    index = {e: i for i, e in enumerate(edges)}
    out = []
    for (u, v), i in index.items():
        for (x, y), j in index.items():
            if j <= i:
                continue
            if u in (x, y) or v in (x, y):
                out.append((i, j))
    return Graph(len(edges), out)


def subdivide(g: Graph, lengths: Mapping[tuple[int, int], int]) -> Graph:
    """Replace each edge by a path of the given length (missing edges keep 1).

    New vertices are appended after the originals, processing edges in
    sorted order; a graph with all lengths 1 is an identical copy.
    """
    norm: dict[tuple[int, int], int] = {}
    for (u, v), ell in lengths.items():
        e = (u, v) if u < v else (v, u)
        if e not in set(g.edges):
            raise ValueError(f"{e} is not an edge of the graph")
        if ell < 1:
            raise ValueError("subdivision length must be positive")
        norm[e] = ell
    nxt = g.n
    edges: list[tuple[int, int]] = []
    for u, v in g.edges:
        ell = norm.get((u, v), 1)
        chain = [u] + list(range(nxt, nxt + ell - 1)) + [v]
        nxt += ell - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def full_subdivision(g: Graph, ell: int = 2) -> Graph:
    """Subdivide every edge to length ell."""
    return subdivide(g, {e: ell for e in g.edges})


def clique_number(g: Graph, cap: int = 64) -> int:
    """Exact clique number by branch and bound with a greedy colouring bound."""
    if g.n > cap:
        raise CapExceeded(f"clique search capped at n={cap}, got {g.n}")
    best = 0

    def greedy_order(cand: int) -> list[tuple[int, int]]:
        # colour classes give an upper bound on the clique inside cand
        order: list[tuple[int, int]] = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, colour))
                avail &= ~g.neighbor_mask(v) & ~(1 << v)
                rest &= ~(1 << v)
        return order

    def expand(cand: int, size: int) -> None:
        nonlocal best
        order = greedy_order(cand)
        for v, colour in reversed(order):
            if size + colour <= best:
                return
            expand(cand & g.neighbor_mask(v), size + 1)
            if size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(g.full_mask(), 0)
    return best


def independence_number(g: Graph, cap: int = 64) -> int:
    return clique_number(g.complement(), cap=cap)


def geometric_ball_bound(delta: int, radius: int) -> int:
    """1 + delta + ... + delta**radius, the max ball size at a given degree."""
    return sum(delta**i for i in range(radius + 1))


def long_induced_path(
    g: Graph, ell: int, search_budget: int = 2_000_000
) -> Optional[Path]:
    """An induced path on at least ell vertices, if one can be found.

    A shortest path to a BFS-eccentric vertex is chordless, and whenever
    n >= 1 + sum(Delta^i for i <= ell-2) such a vertex at distance ell-1
    exists, so in that regime the result is guaranteed.  Below the
    threshold an exhaustive search is attempted before giving up.
    """
    if ell < 2:
        raise ValueError("need ell >= 2")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    best: Optional[tuple[int, int, int]] = None  # (-dist, src, dst)
    for src in g.vertices:
        dist = g.bfs_distances(src)
        far = max(range(g.n), key=lambda v: (dist[v], -v))
        cand = (-dist[far], src, far)
        if best is None or cand < best:
            best = cand
    _, src, far = best  # type: ignore[misc]
    if -best[0] + 1 >= ell:
        return Path(g.shortest_path(src, far))  # type: ignore[arg-type]

    # exhaustive fallback: depth-first growth of induced paths
    ticks = 0

    def extend(path: list[int], used: int, blocked: int) -> Optional[list[int]]:
        nonlocal ticks
        ticks += 1
        if ticks > search_budget:
            raise BudgetExhausted("induced-path search budget exhausted")
        if len(path) >= ell:
            return path
        tail = path[-1]
        for w in g.neighbors(tail):
            if used >> w & 1 or blocked >> w & 1:
                continue
            # w may touch only the current tail
            if g.neighbor_mask(w) & used & ~(1 << tail):
                continue
            got = extend(path + [w], used | 1 << w, blocked)
            if got is not None:
                return got
        return None

    for start in g.vertices:
        got = extend([start], 1 << start, 0)
        if got is not None:
            return Path(tuple(got))
    return None


class NoNeighborOnPath(ValueError):
    """The attachment vertex has no neighbor on the given path."""


class PathTooShort(ValueError):
    """The given path is shorter than t*(1+Delta)-1."""


def attach_free_subpath(g: Graph, p: Path, z: int, t: int) -> Path:
    """A length-t subpath of p whose only neighbor of z is its first vertex.

    Requires z off the path with at least one and at most Delta neighbors
    on it, and p of length at least t*(1+Delta)-1; a window with the
    single-contact property then always exists.
    """
    if t <= 0:
        raise ValueError("need t > 0")
    p.validate(g, induced=True)
    if z in p.vertices:
        raise ValueError("attachment vertex lies on the path")
    on_path = [v for v in p.vertices if g.has_edge(z, v)]
    if not on_path:
        raise NoNeighborOnPath(f"vertex {z} has no neighbor on the path")
    delta = g.max_degree()
    if len(on_path) > delta:
        raise ValueError("more than Delta neighbors on the path")
    if p.length < t * (1 + delta) - 1:
        raise PathTooShort(
            f"path length {p.length} below t*(1+Delta)-1 = {t * (1 + delta) - 1}"
        )
    for seq in (p.vertices, tuple(reversed(p.vertices))):
        for i in range(len(seq) - t):
            window = seq[i : i + t + 1]
            hits = [v for v in window if g.has_edge(z, v)]
            if hits == [window[0]]:
                return Path(window)
    raise AssertionError("guaranteed subpath not found; preconditions violated?")
