"""Exact induced-subgraph detection and the break/forcer predicates.

Everything here uses induced semantics: a copy of a pattern must preserve
non-adjacency as well as adjacency.  Exhaustive searches respect a
deterministic node budget and report exhaustion distinctly from absence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .config import Budget
from .generators import pyramid, subdivided_claw, theta, wall
from .graphs import CapExceeded, Graph, bits, line_graph, mask_of, subdivide


@dataclass(frozen=True)
class PatternMatch:
    pattern: str
    params: tuple[tuple[str, int], ...]
    image: tuple[int, ...]
    roles: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def role(self, name: str) -> tuple[int, ...]:
        for key, value in self.roles:
            if key == name:
                return value
        raise KeyError(name)


def _default_budget(budget: Optional[Budget]) -> Budget:
    return budget if budget is not None else Budget(5_000_000)


# -- generic engine ---------------------------------------------------------


def iter_induced_maps(
    g: Graph, pattern: Graph, budget: Optional[Budget] = None
) -> Iterator[tuple[int, ...]]:
    """All injective maps pattern -> g preserving adjacency and non-adjacency,
    in lexicographic order of the mapping tuple."""
    bud = _default_budget(budget)
    k = pattern.n
    if k > g.n:
        return
    assigned: list[int] = []
    used = 0

    def place(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if i == k:
            yield tuple(assigned)
            return
        pdeg = pattern.degree(i)
        pmask = pattern.neighbor_mask(i)
        for cand in g.vertices:
            bud.tick()
            if used >> cand & 1 or g.degree(cand) < pdeg:
                continue
            ok = True
            for j in range(i):
                if bool(pmask >> j & 1) != g.has_edge(assigned[j], cand):
                    ok = False
                    break
            if not ok:
                continue
            assigned.append(cand)
            used |= 1 << cand
            yield from place(i + 1)
            assigned.pop()
            used &= ~(1 << cand)

    yield from place(0)


def find_induced(
    g: Graph,
    pattern: Graph,
    budget: Optional[Budget] = None,
    max_pattern: int = 24,
) -> Optional[PatternMatch]:
    """Lexicographically first induced copy of an explicit pattern graph."""
    if pattern.n > max_pattern:
        raise CapExceeded(f"pattern has {pattern.n} vertices, cap {max_pattern}")
    for mapping in iter_induced_maps(g, pattern, budget):
        return PatternMatch(
            pattern="induced",
            params=(("n", pattern.n),),
            image=tuple(sorted(mapping)),
            roles=(("mapping", mapping),),
        )
    return None


def induced_copies(
    g: Graph, pattern: Graph, budget: Optional[Budget] = None
) -> list[tuple[int, ...]]:
    """All distinct vertex sets carrying an induced copy, in lexicographic order."""
    seen: set[tuple[int, ...]] = set()
    for mapping in iter_induced_maps(g, pattern, budget):
        seen.add(tuple(sorted(mapping)))
    return sorted(seen)


def contains_induced(g: Graph, pattern: Graph, budget: Optional[Budget] = None) -> bool:
    return find_induced(g, pattern, budget) is not None


# -- specialised detectors ----------------------------------------------------


def _length_triples(t: int, max_total: int, floor2: bool) -> Iterator[tuple[int, int, int]]:
    """Non-decreasing length triples with bounded total interior size."""
    lo = max(t, 2) if floor2 else max(t, 1)
    for total in range(3 * lo, 3 * max_total + 1):
        for l1 in range(lo, total + 1):
            for l2 in range(l1, total + 1):
                l3 = total - l1 - l2
                if l3 < l2:
                    break
                if l3 > max_total:
                    continue
                yield l1, l2, l3


def find_t_theta(
    g: Graph, t: int, budget: Optional[Budget] = None
) -> Optional[PatternMatch]:
    """Two non-adjacent vertices joined by three internally disjoint induced
    paths of length >= t with no other edges between the paths."""
    if t < 2:
        raise ValueError("thetas need t >= 2")
    bud = _default_budget(budget)
    for l1, l2, l3 in _length_triples(t, g.n, floor2=True):
        if 2 + (l1 - 1) + (l2 - 1) + (l3 - 1) > g.n:
            continue
        wit = theta(l1, l2, l3)
        for mapping in iter_induced_maps(g, wit.graph, bud):
            return PatternMatch(
                pattern="theta",
                params=(("l1", l1), ("l2", l2), ("l3", l3)),
                image=tuple(sorted(mapping)),
                roles=(
                    ("ends", (mapping[0], mapping[1])),
                    *(
                        (f"path{i+1}", tuple(mapping[v] for v in p))
                        for i, p in enumerate(wit.paths)
                    ),
                ),
            )
    return None


def find_t_pyramid(
    g: Graph, t: int, budget: Optional[Budget] = None
) -> Optional[PatternMatch]:
    """Apex joined to a triangle by three near-disjoint induced paths of
    length >= t, at most one of them a single edge."""
    if t < 1:
        raise ValueError("pyramids need t >= 1")
    bud = _default_budget(budget)
    for l1, l2, l3 in _length_triples(t, g.n, floor2=False):
        if sorted((l1, l2, l3))[1] < 2:
            continue
        if 4 + (l1 - 1) + (l2 - 1) + (l3 - 1) > g.n:
            continue
        wit = pyramid(l1, l2, l3)
        for mapping in iter_induced_maps(g, wit.graph, bud):
            return PatternMatch(
                pattern="pyramid",
                params=(("l1", l1), ("l2", l2), ("l3", l3)),
                image=tuple(sorted(mapping)),
                roles=(
                    ("apex", (mapping[0],)),
                    ("triangle", tuple(mapping[v] for v in wit.triangle)),
                    *(
                        (f"path{i+1}", tuple(mapping[v] for v in p))
                        for i, p in enumerate(wit.paths)
                    ),
                ),
            )
    return None


def find_subdivided_claw(
    g: Graph, t1: int, t2: int, t3: int, budget: Optional[Budget] = None
) -> Optional[PatternMatch]:
    """Induced copy of the three-legged spider with the given leg lengths;
    the root is matched first."""
    wit = subdivided_claw(t1, t2, t3)
    for mapping in iter_induced_maps(g, wit.graph, budget):
        return PatternMatch(
            pattern="subdivided_claw",
            params=(("t1", t1), ("t2", t2), ("t3", t3)),
            image=tuple(sorted(mapping)),
            roles=(
                ("root", (mapping[0],)),
                *(
                    (f"leg{i+1}", tuple(mapping[v] for v in leg))
                    for i, leg in enumerate(wit.legs)
                ),
            ),
        )
    return None


# -- creatures -----------------------------------------------------------------


def _directed_induced_paths(g: Graph, t: int) -> list[tuple[int, ...]]:
    """All induced paths on t+1 vertices as tuples (joint end first)."""
    if t == 0:
        return [(v,) for v in g.vertices]
    out: list[tuple[int, ...]] = []

    def grow(path: list[int], used: int) -> None:
        if len(path) == t + 1:
            out.append(tuple(path))
            return
        tail = path[-1]
        for w in g.neighbors(tail):
            if used >> w & 1:
                continue
            if g.neighbor_mask(w) & used & ~(1 << tail):
                continue
            path.append(w)
            grow(path, used | 1 << w)
            path.pop()

    for v in g.vertices:
        grow([v], 1 << v)
    return sorted(out)


@dataclass(frozen=True)
class CreatureMatch:
    body: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]  # joint first
    joints: tuple[int, ...]

    @property
    def image(self) -> tuple[int, ...]:
        vs = set(self.body)
        for p in self.paths:
            vs.update(p)
        return tuple(sorted(vs))


def find_creature(
    g: Graph, k: int, t: int, budget: Optional[Budget] = None
) -> Optional[CreatureMatch]:
    """A connected body plus k pairwise anticomplete induced length-t paths,
    each touching the body only through its joint end.

    Exhaustive over joint-oriented path tuples in lexicographic order; for a
    fixed choice of paths, a valid body exists iff some component of the
    admissible region neighbors every joint.
    """
    if k < 1 or t < 0:
        raise ValueError("need k >= 1 and t >= 0")
    bud = _default_budget(budget)
    paths = _directed_induced_paths(g, t)
    full = g.full_mask()

    def body_for(chosen: list[tuple[int, ...]]) -> Optional[tuple[int, ...]]:
        blocked = 0
        joints = []
        for p in chosen:
            blocked |= mask_of(p)
            joints.append(p[0])
            for v in p[1:]:
                blocked |= g.neighbor_mask(v)
        allowed = full & ~blocked
        if not allowed:
            return None
        for comp in g.component_masks(allowed):
            if all(g.neighbor_mask(j) & comp for j in joints):
                return tuple(bits(comp))
        return None

    def choose(start: int, chosen: list[tuple[int, ...]], used: int) -> Optional[CreatureMatch]:
        bud.tick()
        if len(chosen) == k:
            body = body_for(chosen)
            if body is not None:
                return CreatureMatch(
                    body=body,
                    paths=tuple(chosen),
                    joints=tuple(p[0] for p in chosen),
                )
            return None
        for idx in range(start, len(paths)):
            p = paths[idx]
            pm = mask_of(p)
            if pm & used:
                continue
            # pairwise anticomplete to the already chosen paths
            if any(g.neighbor_mask(v) & used for v in p):
                continue
            got = choose(idx + 1, chosen + [p], used | pm)
            if got is not None:
                return got
        return None

    return choose(0, [], 0)


# -- line graphs of subdivided walls ---------------------------------------------


def find_line_of_subdivided_wall(
    g: Graph, k: int, budget: Optional[Budget] = None
) -> Optional[PatternMatch]:
    """Induced copy of the line graph of some subdivision of the k x k wall.

    Only subdivisions with at most |V(g)| edges can embed, so enumerating
    edge-length vectors in graded lexicographic order up to that budget is
    exhaustive; absence means no member of the family embeds.
    """
    if k < 2 or k > 3:
        raise CapExceeded("wall-line detection supports k in {2, 3}")
    bud = _default_budget(budget)
    base = wall(k, k)
    m0 = base.m
    if m0 > g.n:
        return None
    for total in range(m0, g.n + 1):
        for lengths in _compositions(total - m0, m0):
            bud.tick()
            sub = subdivide(
                base, {e: lengths[i] + 1 for i, e in enumerate(base.edges)}
            )
            pattern = line_graph(sub)
            if pattern.n > g.n:
                continue
            for mapping in iter_induced_maps(g, pattern, bud):
                return PatternMatch(
                    pattern="line_of_subdivided_wall",
                    params=(("k", k), ("edges", pattern.n)),
                    image=tuple(sorted(mapping)),
                    roles=(("mapping", mapping),),
                )
    return None


def _compositions(extra: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to spread `extra` across `parts` slots, graded lexicographic."""
    if parts == 0:
        if extra == 0:
            yield ()
        return
    if parts == 1:
        yield (extra,)
        return
    for first in range(extra + 1):
        for rest in _compositions(extra - first, parts - 1):
            yield (first,) + rest


# -- three-leaves connectors ------------------------------------------------------


@dataclass(frozen=True)
class ConnectorOutcome:
    """Classification of a minimal connected subgraph attaching to three
    vertices: a path/hole seen twice plus a third attachment (i), a spider
    with an apex (ii), or a triangle with three paths (iii)."""

    variant: str  # "i", "ii", "iii"
    connector: tuple[int, ...]
    matched: tuple[str, ...]  # every variant whose conditions held
    roles: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def role(self, name: str) -> tuple[int, ...]:
        for key, value in self.roles:
            if key == name:
                return value
        raise KeyError(name)


def _minimal_connector(g: Graph, xs: tuple[int, int, int]) -> tuple[int, ...]:
    x_mask = mask_of(xs)
    allowed = g.full_mask() & ~x_mask

    def sees_all(comp: int) -> bool:
        return all(g.neighbor_mask(x) & comp for x in xs)

    current = None
    for comp in g.component_masks(allowed):
        if sees_all(comp):
            current = comp
            break
    if current is None:
        raise ValueError("no component attaches to all three vertices")
    while True:
        shrunk = False
        for v in bits(current):
            rest = current & ~(1 << v)
            for comp in g.component_masks(rest):
                if sees_all(comp):
                    current = comp
                    shrunk = True
                    break
            if shrunk:
                break
        if not shrunk:
            return tuple(bits(current))


def _induces_path(g: Graph, vs: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Order vs as an induced path of g, or None."""
    if len(vs) == 1:
        return (vs[0],)
    sub_deg = {
        v: sum(1 for u in vs if u != v and g.has_edge(u, v)) for v in vs
    }
    ends = sorted(v for v in vs if sub_deg[v] == 1)
    if len(ends) != 2 or any(sub_deg[v] != 2 for v in vs if v not in ends):
        return None
    order = [ends[0]]
    seen = {ends[0]}
    while len(order) < len(vs):
        nxt = [u for u in vs if u not in seen and g.has_edge(order[-1], u)]
        if len(nxt) != 1:
            return None
        order.append(nxt[0])
        seen.add(nxt[0])
    return tuple(order) if order[-1] == ends[1] else None


def classify_connector(
    g: Graph, x1: int, x2: int, x3: int
) -> ConnectorOutcome:
    """Compute an inclusion-minimal connected attachment to three vertices and
    classify its shape; the first matching variant in order i, ii, iii wins
    and all matches are recorded."""
    xs = (x1, x2, x3)
    if len(set(xs)) != 3:
        raise ValueError("need three distinct vertices")
    h = _minimal_connector(g, xs)
    h_set = set(h)
    nbrs = {x: tuple(v for v in h if g.has_edge(x, v)) for x in xs}
    matched: list[tuple[str, tuple[tuple[str, tuple[int, ...]], ...]]] = []

    # variant (i): h is a path hit at opposite ends by two of the vertices
    ordered = _induces_path(g, h)
    if ordered is not None:
        for i, j in ((0, 1), (0, 2), (1, 2)):
            kdx = 3 - i - j
            xi, xj, xk = xs[i], xs[j], xs[kdx]
            if (
                nbrs[xi] == (ordered[0],)
                and nbrs[xj] == (ordered[-1],)
                or nbrs[xi] == (ordered[-1],)
                and nbrs[xj] == (ordered[0],)
                or (len(h) == 1 and nbrs[xi] == nbrs[xj] == (ordered[0],))
            ):
                kn = nbrs[xk]
                two_nonadj = any(
                    not g.has_edge(a, b) for a, b in combinations(kn, 2)
                )
                two_adj = len(kn) == 2 and g.has_edge(kn[0], kn[1])
                if two_nonadj or two_adj:
                    seq = ordered if nbrs[xi] == (ordered[0],) else tuple(reversed(ordered))
                    roles = (
                        ("path", (xi,) + seq + (xj,)),
                        ("third", (xk,)),
                        ("third_neighbors", kn),
                        ("hole", (int(g.has_edge(xi, xj)),)),
                    )
                    matched.append(("i", roles))
                    break

    # variant (ii): spider with apex a, legs ending at each vertex's neighbor
    if all(len(nbrs[x]) == 1 for x in xs):
        got = _spider_roles(g, h, xs, nbrs)
        if got is not None:
            matched.append(("ii", got))

    # variant (iii): triangle with three disjoint attachment paths
    if all(len(nbrs[x]) == 1 for x in xs):
        got = _triangle_roles(g, h, xs, nbrs)
        if got is not None:
            matched.append(("iii", got))

    if not matched:
        raise AssertionError(
            f"minimal connector {h} escaped the trichotomy for {xs}"
        )
    order = {"i": 0, "ii": 1, "iii": 2}
    matched.sort(key=lambda item: order[item[0]])
    variant, roles = matched[0]
    return ConnectorOutcome(
        variant=variant,
        connector=h,
        matched=tuple(v for v, _ in matched),
        roles=roles,
    )


def _spider_roles(g, h, xs, nbrs):
    h_set = set(h)
    for a in h:
        legs = g.components(tuple(v for v in h if v != a)) if len(h) > 1 else []
        if len(legs) > 3:
            continue
        taken = [False] * len(legs)
        paths = []
        ok = True
        for x in xs:
            nb = nbrs[x][0]
            if nb == a:
                paths.append((a, x))
                continue
            pick = None
            for li, leg in enumerate(legs):
                if nb in leg and not taken[li]:
                    pick = li
                    break
            if pick is None:
                ok = False
                break
            leg = legs[pick]
            seq = _induces_path(g, leg)
            if seq is None:
                ok = False
                break
            # orient from the a-side; a must see exactly the first vertex
            if g.has_edge(a, seq[-1]) and not g.has_edge(a, seq[0]):
                seq = tuple(reversed(seq))
            if not g.has_edge(a, seq[0]) or any(
                g.has_edge(a, v) for v in seq[1:]
            ):
                ok = False
                break
            if seq[-1] != nb:
                ok = False
                break
            taken[pick] = True
            paths.append((a,) + seq + (x,))
        if not ok or not all(taken):
            continue
        # no edges between distinct legs except possibly between the x's
        if _legs_anticomplete(g, paths):
            return (
                ("apex", (a,)),
                ("path1", paths[0]),
                ("path2", paths[1]),
                ("path3", paths[2]),
            )
    return None


def _triangle_roles(g, h, xs, nbrs):
    h_set = set(h)
    for tri in combinations(sorted(h), 3):
        a1, a2, a3 = tri
        if not (g.has_edge(a1, a2) and g.has_edge(a1, a3) and g.has_edge(a2, a3)):
            continue
        rest = [v for v in h if v not in tri]
        legs = g.components(tuple(rest)) if rest else []
        if len(legs) > 3:
            continue
        for perm in _permutations3(tri):
            taken = [False] * len(legs)
            paths = []
            ok = True
            for x, corner in zip(xs, perm):
                nb = nbrs[x][0]
                if nb == corner:
                    paths.append((corner, x))
                    continue
                pick = None
                for li, leg in enumerate(legs):
                    if nb in leg and not taken[li]:
                        pick = li
                        break
                if pick is None:
                    ok = False
                    break
                seq = _induces_path(g, legs[pick])
                if seq is None:
                    ok = False
                    break
                if g.has_edge(corner, seq[-1]) and not g.has_edge(corner, seq[0]):
                    seq = tuple(reversed(seq))
                if (
                    not g.has_edge(corner, seq[0])
                    or any(g.has_edge(corner, v) for v in seq[1:])
                    or seq[-1] != nb
                ):
                    ok = False
                    break
                # the leg may touch only its own corner
                others = [c for c in tri if c != corner]
                if any(g.has_edge(c, v) for c in others for v in seq):
                    ok = False
                    break
                taken[pick] = True
                paths.append((corner,) + seq + (x,))
            if ok and all(taken):
                if _legs_anticomplete(g, paths, shared_apex=False):
                    return (
                        ("triangle", perm),
                        ("path1", paths[0]),
                        ("path2", paths[1]),
                        ("path3", paths[2]),
                    )
    return None


def _permutations3(tri):
    a, b, c = tri
    return [
        (a, b, c),
        (a, c, b),
        (b, a, c),
        (b, c, a),
        (c, a, b),
        (c, b, a),
    ]


def _legs_anticomplete(g, paths, shared_apex: bool = True) -> bool:
    """No edges between distinct attachment paths beyond the allowed ones:
    the pair of attached vertices always, and the corner pair when the paths
    start at triangle corners rather than a shared apex."""
    for pi, pj in combinations(paths, 2):
        side_i = pi[1:] if shared_apex else pi
        side_j = pj[1:] if shared_apex else pj
        for u in side_i:
            for v in side_j:
                if u == v:
                    continue
                if {u, v} == {pi[-1], pj[-1]}:
                    continue
                if not shared_apex and {u, v} == {pi[0], pj[0]}:
                    continue
                if g.has_edge(u, v):
                    return False
    return True


# -- breaks and forcers -------------------------------------------------------------


def breaks(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    """True when no component of g minus N[x] holds all of y in its closed
    neighborhood."""
    xs = tuple(sorted(set(x)))
    ys = tuple(sorted(set(y)))
    if set(xs) & set(ys):
        raise ValueError("the two sets must be disjoint")
    closed = mask_of(g.neighborhood(xs, 1))
    y_mask = mask_of(ys)
    for comp in g.component_masks(g.full_mask() & ~closed):
        around = comp
        for v in bits(comp):
            around |= g.neighbor_mask(v)
        if y_mask & around == y_mask:
            return False
    return True


@dataclass(frozen=True)
class ForcerReport:
    holds: bool
    copies_checked: int
    counterexample: Optional[tuple[int, ...]] = None


def verify_forcer(
    g: Graph,
    forcer_pattern: Graph,
    x_pattern: Graph,
    budget: Optional[Budget] = None,
) -> ForcerReport:
    """Check that every induced copy Y of the forcer contains an induced copy
    X' of the inner pattern with X' breaking Y minus X'.  The first violating
    copy is returned as a counterexample."""
    bud = _default_budget(budget)
    count = 0
    for y in induced_copies(g, forcer_pattern, bud):
        count += 1
        y_set = set(y)
        sub, sub_vs = g.induced_subgraph(y)
        found = False
        for inner in induced_copies(sub, x_pattern, bud):
            x_prime = tuple(sorted(sub_vs[i] for i in inner))
            rest = tuple(sorted(y_set - set(x_prime)))
            if not rest:
                continue  # X' must be a proper subset
            if breaks(g, x_prime, rest):
                found = True
                break
        if not found:
            return ForcerReport(holds=False, copies_checked=count, counterexample=y)
    return ForcerReport(holds=True, copies_checked=count)
