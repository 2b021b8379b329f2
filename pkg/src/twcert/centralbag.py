"""Canonical separations, covering sequences, laminarity taxonomy, and the
weighted central-bag engine with its audit log.

The engine never assumes the no-balanced-separator hypotheses; it runs on
any input and measures which conclusions hold, so that certificates can
distinguish a failed hypothesis from a failed conclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .config import Budget
from .detect import induced_copies, verify_forcer, find_induced
from .graphs import CapExceeded, Graph, bits, geometric_ball_bound, lex_key, mask_of
from .weights import WeightFunction, check_balance_parameter


# -- separations ----------------------------------------------------------------


@dataclass(frozen=True)
class Separation:
    """An ordered triple (A, C, B): disjoint, covering, A anticomplete to B.

    Canonical separations carry their center (the generating set) and an
    anchor vertex inside the center that will collect the A-side weight.
    """

    a: tuple[int, ...]
    c: tuple[int, ...]
    b: tuple[int, ...]
    center: Optional[tuple[int, ...]] = None
    anchor: Optional[int] = None

    def validate(self, g: Graph) -> None:
        parts = (set(self.a), set(self.c), set(self.b))
        if parts[0] | parts[1] | parts[2] != set(range(g.n)):
            raise ValueError("separation does not cover the vertex set")
        if len(self.a) + len(self.c) + len(self.b) != g.n:
            raise ValueError("separation parts overlap")
        if not g.is_anticomplete(self.a, self.b):
            raise ValueError("A side has an edge to B side")
        if self.anchor is not None and self.anchor not in self.c:
            raise ValueError("anchor must lie in the cut")
        if self.center is not None and not set(self.center) <= set(self.c):
            raise ValueError("center must lie in the cut")

    @property
    def a_mask(self) -> int:
        return mask_of(self.a)

    @property
    def bc_union(self) -> tuple[int, ...]:
        return tuple(sorted(self.b + self.c))

    def skew(self, w: WeightFunction) -> tuple[Fraction, Fraction]:
        return w.of(self.a), w.of(self.b)

    def restricted(self, domain: set[int]) -> "Separation":
        return Separation(
            a=tuple(v for v in self.a if v in domain),
            c=tuple(v for v in self.c if v in domain),
            b=tuple(v for v in self.b if v in domain),
            center=self.center,
            anchor=self.anchor,
        )


class DegenerateSeparation(ValueError):
    """N[X] swallowed the whole graph, leaving no component to act as B."""


def canonical_separation(g: Graph, w: WeightFunction, x: Iterable[int]) -> Separation:
    """B is the lexicographically minimum largest-weight component of
    g minus N[X]; the cut is X together with the neighborhood boundary of B;
    the anchor is the least vertex of X."""
    xs = lex_key(x)
    if not g.is_connected_set(xs):
        raise ValueError("center must be connected")
    closed = mask_of(g.neighborhood(xs, 1))
    outside = g.full_mask() & ~closed
    if outside == 0:
        raise DegenerateSeparation(f"N[{xs}] covers every vertex")
    comps = g.component_masks(outside)
    best_weight = max(w.of_mask(cm) for cm in comps)
    b_mask = next(cm for cm in comps if w.of_mask(cm) == best_weight)
    nb = 0
    for v in bits(b_mask):
        nb |= g.neighbor_mask(v)
    c_mask = mask_of(xs) | (closed & nb & ~b_mask)
    a_mask = g.full_mask() & ~b_mask & ~c_mask
    return Separation(
        a=tuple(bits(a_mask)),
        c=tuple(bits(c_mask)),
        b=tuple(bits(b_mask)),
        center=xs,
        anchor=xs[0],
    )


def clique_separation(g: Graph, w: WeightFunction, k: Iterable[int]) -> Separation:
    """Separation at a clique cutset: the cut is the clique itself and B the
    lexicographically minimum heaviest component of g minus the clique."""
    ks = lex_key(k)
    if not g.is_clique(ks):
        raise ValueError("cut must be a clique")
    outside = g.full_mask() & ~mask_of(ks)
    comps = g.component_masks(outside)
    if len(comps) < 2:
        raise ValueError("clique is not a cutset")
    best_weight = max(w.of_mask(cm) for cm in comps)
    b_mask = next(cm for cm in comps if w.of_mask(cm) == best_weight)
    a_mask = outside & ~b_mask
    return Separation(
        a=tuple(bits(a_mask)),
        c=ks,
        b=tuple(bits(b_mask)),
        center=ks,
        anchor=ks[0],
    )


# -- pairwise relations -----------------------------------------------------------


@dataclass(frozen=True)
class RelationFlags:
    non_crossing: bool
    loosely_non_crossing: bool
    a_non_crossing: bool
    a_loosely_non_crossing: bool

    @property
    def crossing(self) -> bool:
        return not self.loosely_non_crossing


def relation(s1: Separation, s2: Separation) -> RelationFlags:
    """Evaluate every emptiness pattern between two separations.

    The symmetric variants may exchange the roles of A and B on either side;
    the A-variants keep the stored skew convention fixed.
    """
    a1, c1, b1 = mask_of(s1.a), mask_of(s1.c), mask_of(s1.b)
    a2, c2, b2 = mask_of(s2.a), mask_of(s2.c), mask_of(s2.b)
    a_loose = not (a1 & c2) and not (a2 & c1)
    a_non = a_loose and not (a1 & a2)
    loose = False
    non = False
    for x1 in (a1, b1):
        for x2 in (a2, b2):
            if not (x1 & c2) and not (x2 & c1):
                loose = True
                if not (x1 & x2):
                    non = True
    return RelationFlags(
        non_crossing=non,
        loosely_non_crossing=loose,
        a_non_crossing=a_non,
        a_loosely_non_crossing=a_loose,
    )


def is_shield(s1: Separation, s2: Separation) -> bool:
    """s1 shields s2 when B(s1) together with C(s1) fits inside B(s2) + C(s2);
    a shielded separation contributes nothing to the central bag."""
    return set(s1.bc_union) <= set(s2.bc_union)


# -- sequences ----------------------------------------------------------------------


@dataclass(frozen=True)
class SkipRecord:
    copy: tuple[int, ...]
    reason: str


@dataclass(frozen=True)
class SeparationSequence:
    """An ordered sequence of separations; the order matters for weights."""

    separations: tuple[Separation, ...]
    skipped: tuple[SkipRecord, ...] = ()

    def __len__(self) -> int:
        return len(self.separations)

    def __getitem__(self, i: int) -> Separation:
        return self.separations[i]

    def goodness(self, g: Graph) -> tuple[int, int]:
        """Measured (a, t): max separations anchored at one vertex and max
        cut diameter."""
        counts: dict[int, int] = {}
        t = 0
        for s in self.separations:
            if s.anchor is None:
                raise ValueError("sequence member lacks an anchor")
            counts[s.anchor] = counts.get(s.anchor, 0) + 1
            t = max(t, g.diameter_of(s.c))
        return (max(counts.values(), default=0), t)

    def is_strongly_laminar(self) -> bool:
        return all(
            not (set(s1.c) & set(s2.c))
            for s1, s2 in combinations(self.separations, 2)
        )

    def is_laminar(self) -> bool:
        return all(
            relation(s1, s2).non_crossing
            for s1, s2 in combinations(self.separations, 2)
        )

    def is_a_laminar(self) -> bool:
        return all(
            relation(s1, s2).a_non_crossing
            for s1, s2 in combinations(self.separations, 2)
        )

    def is_a_loosely_laminar(self) -> bool:
        return all(
            relation(s1, s2).a_loosely_non_crossing
            for s1, s2 in combinations(self.separations, 2)
        )


def make_primordial(
    seq: SeparationSequence,
) -> tuple[SeparationSequence, list[tuple[int, int]]]:
    """Keep the earliest separation for each inclusion-minimal B+C value.

    Returns the reduced sequence plus (dropped index, shielding kept index)
    pairs justifying every drop.
    """
    members = seq.separations
    bc = [set(s.bc_union) for s in members]
    minimal: list[int] = []
    for i in range(len(members)):
        if any(bc[j] < bc[i] for j in range(len(members))):
            continue
        if any(bc[j] == bc[i] for j in minimal):
            continue
        minimal.append(i)
    kept = sorted(minimal)
    drops: list[tuple[int, int]] = []
    kept_set = set(kept)
    for i in range(len(members)):
        if i in kept_set:
            continue
        shield = next(j for j in kept if bc[j] <= bc[i])
        drops.append((i, shield))
    return (
        SeparationSequence(
            separations=tuple(members[i] for i in kept), skipped=seq.skipped
        ),
        drops,
    )


def covering_sequence(
    g: Graph,
    w: WeightFunction,
    pattern: Graph,
    budget: Optional[Budget] = None,
) -> SeparationSequence:
    """Canonical separations at every induced copy of the pattern, in
    lexicographic order of the copies; degenerate copies (whose closed
    neighborhood is everything) are skipped with an audit note."""
    if not pattern.is_connected():
        raise ValueError("pattern must be connected")
    seps: list[Separation] = []
    skips: list[SkipRecord] = []
    for copy in induced_copies(g, pattern, budget):
        try:
            seps.append(canonical_separation(g, w, copy))
        except DegenerateSeparation:
            skips.append(SkipRecord(copy=copy, reason="degenerate"))
    return SeparationSequence(separations=tuple(seps), skipped=tuple(skips))


# -- dimension partitioning -----------------------------------------------------------


@dataclass(frozen=True)
class DimensionPartition:
    classes: tuple[tuple[int, ...], ...]  # indices into the sequence
    measured_a: int
    measured_t: int
    class_bound: int  # a * gamma(2t) + 1

    @property
    def dimension_upper(self) -> int:
        return len(self.classes)


def dimension_partition(g: Graph, seq: SeparationSequence) -> DimensionPartition:
    """Greedy colouring of the cut-intersection graph, in sequence order.

    Cuts in one colour class are pairwise disjoint, so each class is
    strongly laminar; the class count is at most a * gamma(2t) + 1 where
    gamma counts a degree-Delta ball.
    """
    members = seq.separations
    a, t = seq.goodness(g) if members else (0, 0)
    masks = [mask_of(s.c) for s in members]
    colour: list[int] = []
    for i in range(len(members)):
        used = {colour[j] for j in range(i) if masks[j] & masks[i]}
        c = 0
        while c in used:
            c += 1
        colour.append(c)
    n_classes = max(colour) + 1 if colour else 0
    classes = tuple(
        tuple(i for i in range(len(members)) if colour[i] == c)
        for c in range(n_classes)
    )
    bound = a * geometric_ball_bound(g.max_degree(), 2 * t) + 1
    return DimensionPartition(
        classes=classes, measured_a=a, measured_t=t, class_bound=bound
    )


# -- the central bag engine ------------------------------------------------------------


@dataclass(frozen=True)
class DropRecord:
    index: int  # position in the input sequence
    reason: str  # "shield" or "center_hit"
    witness: int  # index of the justifying kept separation


@dataclass(frozen=True)
class LevelRecord:
    """One class applied to the current bag: what was kept, what was dropped,
    and the measured conclusions of the one-level bag algebra."""

    kept: tuple[int, ...]
    drops: tuple[DropRecord, ...]
    bag_after: tuple[int, ...]
    weight_after: tuple[tuple[int, str], ...]  # (vertex, exact weight)
    restricted_a_loosely_laminar: bool
    cut_in_bag: bool  # C(S) cap previous bag lands inside the new bag
    bag_connected: bool
    weight_total_one: bool


@dataclass(frozen=True)
class CentralBagResult:
    bag: tuple[int, ...]
    weights: dict[int, Fraction]
    generator: tuple[tuple[int, ...], ...]  # kept indices per class
    levels: tuple[LevelRecord, ...]
    drops: tuple[DropRecord, ...]
    escaped_weight: Fraction

    @property
    def algebra_holds(self) -> bool:
        return all(
            lvl.cut_in_bag and lvl.bag_connected and lvl.weight_total_one
            for lvl in self.levels
        )

    def recompute_bag(self, g: Graph, seq: SeparationSequence) -> tuple[int, ...]:
        cur = set(range(g.n))
        for cls in self.generator:
            for i in cls:
                cur &= set(seq[i].bc_union)
        return tuple(sorted(cur))


def central_bag(
    g: Graph,
    w: WeightFunction,
    seq: SeparationSequence,
    partition: DimensionPartition,
) -> CentralBagResult:
    """Intersect the kept separations class by class, propagating weights
    through the anchors.

    Per class: members whose center left the current bag are dropped with a
    center-hit witness, the rest reduce to earliest inclusion-minimal B+C
    representatives, and the level weight rule charges each anchor with the
    fresh part of its A side.  An empty sequence leaves the whole graph.
    """
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if not w.is_normal():
        raise ValueError("weight function must be normal")
    members = seq.separations
    bag = set(range(g.n))
    weights: dict[int, Fraction] = w.as_dict()
    escaped = Fraction(0)
    levels: list[LevelRecord] = []
    all_drops: list[DropRecord] = []
    generator: list[tuple[int, ...]] = []
    kept_so_far: list[int] = []

    for cls in partition.classes:
        admitted: list[int] = []
        drops: list[DropRecord] = []
        for i in cls:
            center = members[i].center
            if center is None:
                raise ValueError("covering-sequence members must carry centers")
            if set(center) <= bag:
                admitted.append(i)
            else:
                witness = next(
                    j for j in kept_so_far if set(center) & set(members[j].a)
                )
                drops.append(DropRecord(index=i, reason="center_hit", witness=witness))
        bc = {i: set(members[i].bc_union) for i in admitted}
        kept: list[int] = []
        for i in admitted:
            if any(bc[j] < bc[i] for j in admitted):
                continue
            if any(bc[j] == bc[i] for j in kept):
                continue
            kept.append(i)
        kept.sort()
        kept_set = set(kept)
        for i in admitted:
            if i in kept_set:
                continue
            shield = next(j for j in kept if bc[j] <= bc[i])
            drops.append(DropRecord(index=i, reason="shield", witness=shield))
        drops.sort(key=lambda d: d.index)

        prev_bag = set(bag)
        for i in kept:
            bag &= set(members[i].bc_union)
        # order-dependent weight rule on the previous bag
        new_weights = {v: weights[v] for v in bag}
        seen_a: set[int] = set()
        for i in kept:
            a_here = (set(members[i].a) & prev_bag) - seen_a
            seen_a |= set(members[i].a) & prev_bag
            fresh = sum((weights[v] for v in a_here), Fraction(0))
            anchor = members[i].anchor
            assert anchor is not None
            if anchor in bag:
                new_weights[anchor] = new_weights[anchor] + fresh
            else:
                escaped += fresh
        # weight lost to cut vertices that fell out of the bag
        for v in prev_bag - bag:
            if v not in seen_a:
                escaped += weights[v]
        weights = new_weights

        restricted = SeparationSequence(
            separations=tuple(members[i].restricted(prev_bag) for i in kept)
        )
        cut_ok = all(set(members[i].c) & prev_bag <= bag for i in kept)
        connected = g.is_connected_set(tuple(sorted(bag))) if bag else False
        total = sum(weights.values(), Fraction(0))
        levels.append(
            LevelRecord(
                kept=tuple(kept),
                drops=tuple(drops),
                bag_after=tuple(sorted(bag)),
                weight_after=tuple(
                    (v, str(weights[v])) for v in sorted(weights)
                ),
                restricted_a_loosely_laminar=restricted.is_a_loosely_laminar(),
                cut_in_bag=cut_ok,
                bag_connected=connected,
                weight_total_one=(total == 1),
            )
        )
        generator.append(tuple(kept))
        kept_so_far.extend(kept)
        all_drops.extend(drops)

    return CentralBagResult(
        bag=tuple(sorted(bag)),
        weights=weights,
        generator=tuple(generator),
        levels=tuple(levels),
        drops=tuple(all_drops),
        escaped_weight=escaped,
    )


def audit_is_complete(
    g: Graph, seq: SeparationSequence, result: CentralBagResult
) -> bool:
    """Re-validate every drop: a shield witness must actually shield, and a
    center-hit witness's A side must actually meet the dropped center."""
    members = seq.separations
    kept = {i for cls in result.generator for i in cls}
    indexed = {d.index for d in result.drops}
    if kept | indexed != set(range(len(members))) or kept & indexed:
        return False
    for d in result.drops:
        if d.witness not in kept:
            return False
        if d.reason == "shield":
            if not is_shield(members[d.witness], members[d.index]):
                return False
        elif d.reason == "center_hit":
            center = members[d.index].center or ()
            if not set(center) & set(members[d.witness].a):
                return False
        else:
            return False
    return True


# -- conditional claim checks -------------------------------------------------------


@dataclass(frozen=True)
class ConditionalCheck:
    claim: str
    hypothesis_met: bool
    hypothesis_notes: tuple[str, ...]
    conclusion_holds: Optional[bool]
    status: str  # "pass" | "fail" | "hypothesis-unmet"


def _status(hyp: bool, concl: Optional[bool]) -> str:
    if not hyp:
        return "hypothesis-unmet"
    return "pass" if concl else "fail"


def check_bag_separator_transfer(
    g: Graph,
    w: WeightFunction,
    c: Fraction,
    d: int,
    seq: SeparationSequence,
    partition: DimensionPartition,
    result: CentralBagResult,
) -> list[ConditionalCheck]:
    """Measure the conditional conclusions on a small instance.

    The shared hypothesis (no balanced separator of size at most d) is
    checked exhaustively; each conclusion additionally needs its own
    arithmetic side conditions, recorded in the hypothesis notes.  Unmet
    hypotheses are reported as such, never as pass or fail.
    """
    from .separators import has_balanced_separator_of_size, min_balanced_separator

    check_balance_parameter(c)
    if g.n > 12:
        raise CapExceeded("transfer checks are exhaustive; capped at n=12")
    delta = g.max_degree()
    no_sep = not has_balanced_separator_of_size(g, w, c, d)
    base_notes = [f"no balanced separator of size <= {d}: {no_sep}"]
    members = seq.separations
    a_meas, t_meas = seq.goodness(g) if members else (0, 0)
    gamma_t1 = geometric_ball_bound(delta, t_meas + 1)
    gamma_t = geometric_ball_bound(delta, t_meas)
    checks: list[ConditionalCheck] = []

    # heavy-side conclusion: every canonical separation has w(B) > c
    hyp = no_sep and d >= gamma_t1 and all(s.center is not None for s in members)
    concl = all(w.of(s.b) > c for s in members) if members else True
    checks.append(
        ConditionalCheck(
            claim="canonical separations have heavy B side",
            hypothesis_met=hyp,
            hypothesis_notes=tuple(
                base_notes + [f"d >= gamma(t+1) = {gamma_t1}: {d >= gamma_t1}"]
            ),
            conclusion_holds=concl,
            status=_status(hyp, concl),
        )
    )

    # strongly laminar classes are laminar
    cls_seqs = [
        SeparationSequence(separations=tuple(members[i] for i in cls))
        for cls in partition.classes
    ]
    hyp = (
        no_sep
        and d >= gamma_t1
        and all(
            g.is_connected_set(s.c) and len(s.c) <= d for s in members
        )
    )
    concl = all(cs.is_laminar() for cs in cls_seqs)
    checks.append(
        ConditionalCheck(
            claim="strongly laminar classes are laminar",
            hypothesis_met=hyp,
            hypothesis_notes=tuple(
                base_notes
                + [
                    f"d >= gamma(t+1) = {gamma_t1}: {d >= gamma_t1}",
                    f"all cuts connected with size <= d",
                ]
            ),
            conclusion_holds=concl,
            status=_status(hyp, concl),
        )
    )

    # primordial laminar classes are A-laminar (checked on the kept members)
    kept_seqs = [
        SeparationSequence(separations=tuple(members[i] for i in cls))
        for cls in result.generator
    ]
    hyp = no_sep and d >= gamma_t1 and all(cs.is_laminar() for cs in kept_seqs)
    concl = all(cs.is_a_laminar() for cs in kept_seqs)
    checks.append(
        ConditionalCheck(
            claim="primordial laminar classes are A-laminar",
            hypothesis_met=hyp,
            hypothesis_notes=tuple(
                base_notes
                + [
                    f"d >= gamma(t+1) = {gamma_t1}: {d >= gamma_t1}",
                    f"kept classes laminar: {all(cs.is_laminar() for cs in kept_seqs)}",
                ]
            ),
            conclusion_holds=concl,
            status=_status(hyp, concl),
        )
    )

    # the bag admits no small balanced separator for the propagated weights
    k = len(partition.classes)
    needed_d = gamma_t1 * gamma_t**k
    hyp = (
        no_sep
        and d >= needed_d
        and result.algebra_holds
        and all(lvl.restricted_a_loosely_laminar for lvl in result.levels)
    )
    concl: Optional[bool] = None
    if result.bag and sum(result.weights.values(), Fraction(0)) == 1:
        sub, sub_vs = g.induced_subgraph(result.bag)
        w_bag = WeightFunction(
            tuple(range(sub.n)),
            tuple(result.weights[v] for v in sub_vs),
        )
        bound = Fraction(d, gamma_t**k) if k else Fraction(d)
        limit = int(bound)
        concl = (
            min_balanced_separator(sub, w_bag, c, max_size=limit, cap=sub.n) is None
        )
    checks.append(
        ConditionalCheck(
            claim="no small balanced separator survives in the bag",
            hypothesis_met=hyp,
            hypothesis_notes=tuple(
                base_notes
                + [f"d >= gamma(t+1)*gamma(t)^k = {needed_d}: {d >= needed_d}"]
            ),
            conclusion_holds=concl,
            status=_status(hyp, concl),
        )
    )
    return checks


@dataclass(frozen=True)
class ForcerEliminationReport:
    premise_holds: bool
    bag_clean: Optional[bool]
    offending_copy: Optional[tuple[int, ...]]


def forcer_elimination_check(
    g: Graph,
    w: WeightFunction,
    pattern: Graph,
    forcer: Graph,
    result: CentralBagResult,
    budget: Optional[Budget] = None,
) -> ForcerEliminationReport:
    """After bag construction at a pattern's covering sequence, the bag should
    carry no copy of any verified forcer for that pattern."""
    premise = verify_forcer(g, forcer, pattern, budget).holds
    if not premise:
        return ForcerEliminationReport(
            premise_holds=False, bag_clean=None, offending_copy=None
        )
    if not result.bag:
        return ForcerEliminationReport(True, True, None)
    sub, sub_vs = g.induced_subgraph(result.bag)
    hit = find_induced(sub, forcer, budget)
    if hit is None:
        return ForcerEliminationReport(True, True, None)
    return ForcerEliminationReport(
        premise_holds=True,
        bag_clean=False,
        offending_copy=tuple(sorted(sub_vs[i] for i in hit.image)),
    )


# -- clique coverings ------------------------------------------------------------------


def clique_cutsets(g: Graph) -> list[tuple[int, ...]]:
    """All clique cutsets, in lexicographic order of their sorted tuples."""
    out: list[tuple[int, ...]] = []

    def extend(clique: list[int], cand: int) -> None:
        if clique:
            ks = tuple(clique)
            outside = g.full_mask() & ~mask_of(ks)
            if len(g.component_masks(outside)) >= 2:
                out.append(ks)
        for v in bits(cand):
            extend(clique + [v], cand & g.neighbor_mask(v) & ~((1 << (v + 1)) - 1))

    extend([], g.full_mask())
    return out


def clique_covering(
    g: Graph, w: WeightFunction
) -> tuple[SeparationSequence, list[tuple[int, int]]]:
    """Primordial sequence of clique separations shielding every clique
    separation of the graph."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    seps = tuple(clique_separation(g, w, k) for k in clique_cutsets(g))
    return make_primordial(SeparationSequence(separations=seps))


@dataclass(frozen=True)
class CliqueBagReport:
    covering_size: int
    result: CentralBagResult
    no_clique_cutset: bool
    outside_neighborhoods_are_cliques: bool
    checks: tuple[ConditionalCheck, ...]


def clique_central_bag(
    g: Graph, w: WeightFunction, c: Fraction = Fraction(1, 2), d: int = 1
) -> CliqueBagReport:
    """Single-level central bag over the clique covering, with the measured
    clique-cutset-freeness of the bag and the conditional separator bound."""
    from .separators import has_balanced_separator_of_size, min_balanced_separator

    covering, _ = clique_covering(g, w)
    partition = DimensionPartition(
        classes=(tuple(range(len(covering))),) if len(covering) else (),
        measured_a=max(
            [sum(1 for s in covering.separations if s.anchor == v) for v in g.vertices]
            or [0]
        ),
        measured_t=max([g.diameter_of(s.c) for s in covering.separations] or [0]),
        class_bound=0,
    )
    result = central_bag(g, w, covering, partition)
    bag = result.bag
    sub, sub_vs = g.induced_subgraph(bag)
    no_cutset = len(clique_cutsets(sub)) == 0
    # neighborhoods of the outside components must be cliques of the graph
    outside = set(range(g.n)) - set(bag)
    n_ok = True
    for comp in g.components(tuple(sorted(outside))) if outside else []:
        boundary = set(g.neighborhood(comp, 1)) - set(comp)
        if not g.is_clique(tuple(sorted(boundary))):
            n_ok = False

    delta = g.max_degree()
    no_sep = not has_balanced_separator_of_size(g, w, c, d)
    hyp = no_sep and d > delta
    concl: Optional[bool] = None
    if bag and sum(result.weights.values(), Fraction(0)) == 1:
        w_bag = WeightFunction(
            tuple(range(sub.n)), tuple(result.weights[v] for v in sub_vs)
        )
        limit = int(Fraction(d, 1 + delta))
        concl = min_balanced_separator(sub, w_bag, c, max_size=limit, cap=sub.n) is None
    checks = (
        ConditionalCheck(
            claim="clique bag keeps no small balanced separator",
            hypothesis_met=hyp,
            hypothesis_notes=(
                f"no balanced separator of size <= {d}: {no_sep}",
                f"d > Delta = {delta}: {d > delta}",
            ),
            conclusion_holds=concl,
            status=_status(hyp, concl),
        ),
        ConditionalCheck(
            claim="clique bag has no clique cutset",
            hypothesis_met=hyp,
            hypothesis_notes=(
                f"no balanced separator of size <= {d}: {no_sep}",
                f"d > Delta = {delta}: {d > delta}",
            ),
            conclusion_holds=no_cutset,
            status=_status(hyp, no_cutset),
        ),
    )
    return CliqueBagReport(
        covering_size=len(covering),
        result=result,
        no_clique_cutset=no_cutset,
        outside_neighborhoods_are_cliques=n_ok,
        checks=checks,
    )


# -- the master pipeline ----------------------------------------------------------------


def leq_power_bound(value: int, coeff: int, base: int, exponent: int) -> bool:
    """Decide value <= coeff * base**exponent without building huge powers."""
    if value <= coeff:
        return True
    if base <= 1 or exponent <= 0:
        return value <= coeff
    acc = 1
    for _ in range(exponent):
        acc *= base
        if coeff * acc >= value:
            return True
    return False


@dataclass(frozen=True)
class PipelineReport:
    pattern_copies: int
    goodness: tuple[int, int]
    dimension_classes: int
    dimension_bound_holds: bool
    anchor_bound_holds: bool
    bag: tuple[int, ...]
    algebra_holds: bool
    audit_complete: bool
    forcer_premises: tuple[bool, ...]
    bag_forcer_free: tuple[Optional[bool], ...]
    bag_treewidth: Optional[int]
    symbolic_bound: str  # "2*N*gamma(t+1)^e" with the instantiated numbers
    treewidth_within_symbolic_bound: Optional[bool]
    transfer_checks: tuple[ConditionalCheck, ...]
    sequence: "SeparationSequence" = SeparationSequence(separations=())
    partition: Optional[DimensionPartition] = None
    result: Optional[CentralBagResult] = None


def run_master_pipeline(
    g: Graph,
    pattern: Graph,
    forcers: Sequence[Graph],
    c: Fraction,
    d: int,
    w: Optional[WeightFunction] = None,
    budget: Optional[Budget] = None,
    tw_cap: int = 14,
) -> PipelineReport:
    """Covering sequence, goodness, partition, central bag, forcer freeness,
    and the symbolic width bound, chained into one machine-checkable record.

    The symbolic bound instantiates 2*N*gamma(t+1)**(Delta**(t*t)*gamma(2t)+1)
    with N one more than the bag's measured treewidth and t one more than the
    pattern size, which keeps the pattern smaller than t.
    """
    from .separators import treewidth_or_bounds

    if w is None:
        w = WeightFunction.uniform(g)
    seq = covering_sequence(g, w, pattern, budget)
    partition = dimension_partition(g, seq)
    result = central_bag(g, w, seq, partition)
    delta = g.max_degree()
    t_param = pattern.n + 1
    a_bound = delta ** (t_param * t_param)
    dim_bound = a_bound * geometric_ball_bound(delta, 2 * t_param) + 1
    premises = []
    clean = []
    for f in forcers:
        rep = forcer_elimination_check(g, w, pattern, f, result, budget)
        premises.append(rep.premise_holds)
        clean.append(rep.bag_clean)
    bag_tw: Optional[int] = None
    within: Optional[bool] = None
    symbolic = ""
    if result.bag:
        sub, _ = g.induced_subgraph(result.bag)
        bounds = treewidth_or_bounds(sub, cap=tw_cap)
        bag_tw = bounds.exact
        if bag_tw is not None:
            n_big = bag_tw + 1
            gamma_t1 = geometric_ball_bound(delta, t_param + 1)
            symbolic = f"2*{n_big}*{gamma_t1}^{dim_bound}"
            host = treewidth_or_bounds(g, cap=tw_cap)
            if host.exact is not None:
                within = leq_power_bound(host.exact, 2 * n_big, gamma_t1, dim_bound)
    checks = check_bag_separator_transfer(g, w, c, d, seq, partition, result)
    return PipelineReport(
        pattern_copies=len(seq),
        goodness=seq.goodness(g) if len(seq) else (0, 0),
        dimension_classes=len(partition.classes),
        dimension_bound_holds=len(partition.classes) <= dim_bound,
        anchor_bound_holds=(seq.goodness(g)[0] if len(seq) else 0) <= a_bound,
        bag=result.bag,
        algebra_holds=result.algebra_holds,
        audit_complete=audit_is_complete(g, seq, result),
        forcer_premises=tuple(premises),
        bag_forcer_free=tuple(clean),
        bag_treewidth=bag_tw,
        symbolic_bound=symbolic,
        treewidth_within_symbolic_bound=within,
        transfer_checks=tuple(checks),
        sequence=seq,
        partition=partition,
        result=result,
    )
