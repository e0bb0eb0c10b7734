"""Bag marking over treewidth modulators, clusters, and protrusion decompositions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .graphs import Graph
from .treewidth import (EXACT_CAP, TreeDecomposition,
                        decomposition_within_width, exact_treewidth,
                        heuristic_decomposition, make_nice)

LCA = "LCA"
LARGE_SUBGRAPH = "LargeSubgraph"


@dataclass(frozen=True)
class MarkRecord:
    component: int
    bag: int
    reason: str


@dataclass(frozen=True)
class MarkingTrace:
    """Everything a marking run decided, enough to replay and audit it.

    components lists every component of g-x in processing order;
    decompositions maps the processed (large X-neighborhood) components to
    their rooted decompositions.  removed_vertices and witnesses align with
    marked_bags; a witness is the component of G_B that triggered a
    large-subgraph mark, with its X-neighborhood capped at r.
    """

    marked_bags: tuple[MarkRecord, ...]
    removed_vertices: tuple[frozenset[int], ...]
    components: tuple[frozenset[int], ...]
    processed_components: tuple[int, ...]
    decompositions: tuple[TreeDecomposition, ...]
    witnesses: tuple[tuple[frozenset[int], frozenset[int]] | None, ...]
    bag_visits: int
    params: tuple[int, int]  # (r, t)

    def to_json(self) -> list[dict]:
        return [{"component": m.component, "bag": m.bag, "reason": m.reason}
                for m in self.marked_bags]


@dataclass(frozen=True)
class ProtrusionDecomposition:
    y0: frozenset[int]
    clusters: tuple[frozenset[int], ...]
    beta: int
    r: int
    t: int
    trace: MarkingTrace | None = None

    @property
    def alpha(self) -> int:
        return max(len(self.clusters), len(self.y0))

    def to_json(self) -> dict:
        return {"y0": sorted(self.y0),
                "clusters": [sorted(c) for c in self.clusters],
                "beta": self.beta,
                "r": self.r,
                "t": self.t,
                "trace": self.trace.to_json() if self.trace else []}


def _capped_x_neighborhood(g: Graph, comp: Iterable[int], x: frozenset[int], r: int) -> frozenset[int]:
    """X-neighbors of a component, tracking at most r distinct vertices."""
    out: set[int] = set()
    for v in comp:
        for u in g.neighbors(v):
            if u in x:
                out.add(u)
                if len(out) >= r:
                    return frozenset(out)
    return frozenset(out)


def mark_bags(g: Graph, x: Iterable[int], r: int, t: int,
              verify_modulator: bool = True) -> tuple[frozenset[int], MarkingTrace]:
    """Bag marking over rooted decompositions of the components of g-x.

    Components with fewer than r neighbors in X are never decomposed.  Bags
    are processed farthest-from-root first (ties by bag index); a bag is
    marked when it is the LCA of two marked bags, or else when the subgraph
    below it contains a connected component with at least r X-neighbors.
    Marked vertices are only flagged, never rewritten out of the bags.
    """
    x = frozenset(x)
    if r <= 0:
        raise ValueError("r must be positive")
    for v in x:
        if not g.has_vertex(v):
            raise ValueError(f"modulator vertex {v} not in graph")
    rest = g.without(x)
    components = rest.components()
    processed: list[int] = []
    tds: list[TreeDecomposition] = []
    for ci, comp in enumerate(components):
        needs_decomposition = len(_capped_x_neighborhood(g, comp, x, r)) >= r
        if not needs_decomposition and not verify_modulator:
            continue
        td = decomposition_within_width(rest.induced(comp), t - 1)
        if td is None:
            raise ValueError("tw(G-X) exceeds t-1")
        if needs_decomposition:
            processed.append(ci)
            tds.append(td.rerooted(0))

    removed: set[int] = set()
    marks: list[MarkRecord] = []
    removed_per_mark: list[frozenset[int]] = []
    witnesses: list[tuple[frozenset[int], frozenset[int]] | None] = []
    bag_visits = 0

    for ci, td in zip(processed, tds):
        depths = td.depths()
        children = td.children()
        order = sorted(range(len(td.bags)), key=lambda i: (-depths[i], i))
        # state per bag: components of G_B (minus flagged vertices) that
        # intersect the bag, each as (vertex set, capped X-neighborhood)
        state: list[list[tuple[frozenset[int], frozenset[int]]]] = [[] for _ in td.bags]
        marked_in_subtree = [0] * len(td.bags)

        for b in order:
            bag_visits += 1
            eff = td.bags[b] - removed
            kids = children[b]
            kids_with_marks = sum(1 for c in kids if marked_in_subtree[c] > 0)
            mark_reason = None
            witness = None

            if kids_with_marks >= 2:
                mark_reason = LCA
            else:
                # merge child states; late marks elsewhere may have split a
                # stored component, so connectivity is recomputed from the
                # stored vertex sets rather than trusted
                universe: set[int] = set(eff)
                for c in kids:
                    for vs, _nx in state[c]:
                        universe |= vs
                universe -= removed
                comps_here = _components_within(g, universe)
                new_state = []
                for comp in comps_here:
                    nx = _capped_x_neighborhood(g, comp, x, r)
                    if len(nx) >= r and mark_reason is None:
                        mark_reason = LARGE_SUBGRAPH
                        witness = (comp, nx)
                    if comp & eff:
                        new_state.append((comp, nx))
                if mark_reason is None:
                    state[b] = new_state

            if mark_reason is not None:
                newly_removed = frozenset(eff)
                removed |= newly_removed
                marks.append(MarkRecord(ci, b, mark_reason))
                removed_per_mark.append(newly_removed)
                witnesses.append(witness)
                state[b] = []
                marked_in_subtree[b] = 1
            marked_in_subtree[b] += sum(marked_in_subtree[c] for c in kids)

    trace = MarkingTrace(tuple(marks), tuple(removed_per_mark), components,
                         tuple(processed), tuple(tds), tuple(witnesses),
                         bag_visits, (r, t))
    return frozenset(x | removed), trace


def _components_within(g: Graph, universe: set[int]) -> list[frozenset[int]]:
    seen: set[int] = set()
    out = []
    for v in sorted(universe):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in universe and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def clusters(g: Graph, s: Iterable[int]) -> list[frozenset[int]]:
    """Components of g-s grouped by their exact neighborhood in s."""
    ss = frozenset(s)
    groups: dict[frozenset[int], set[int]] = {}
    for comp in g.without(ss).components():
        nbhd = frozenset(g.neighborhood(comp) & ss)
        groups.setdefault(nbhd, set()).update(comp)
    return [frozenset(vs) for vs in sorted(groups.values(), key=min)]


def build_protrusion_decomposition(g: Graph, x: Iterable[int], r: int, t: int,
                                   verify_modulator: bool = True) -> ProtrusionDecomposition:
    """Marking output Y0 plus clusters of g-Y0 as a (max(l,|Y0|), 2t+r) decomposition."""
    y0, trace = mark_bags(g, x, r, t, verify_modulator=verify_modulator)
    cl = clusters(g, y0)
    return ProtrusionDecomposition(y0, tuple(cl), 2 * t + r, r, t, trace)


@dataclass
class PdValidationReport:
    violations: list[str] = field(default_factory=list)
    treewidth_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_protrusion_decomposition(g: Graph, pd: ProtrusionDecomposition,
                                      tw_cap: int = EXACT_CAP) -> PdValidationReport:
    """Check partition, neighborhood containment, boundary size, and (for
    small clusters) the treewidth side of the beta-protrusion condition."""
    rep = PdValidationReport()
    parts = [pd.y0, *pd.clusters]
    total = 0
    seen: set[int] = set()
    for p in parts:
        total += len(p)
        seen |= p
    if total != g.n or seen != set(g.vertices):
        rep.violations.append("parts do not partition V(G)")
    for i, cl in enumerate(pd.clusters, start=1):
        nbhd = g.neighborhood(cl)
        if not nbhd <= pd.y0:
            rep.violations.append(f"N(Y_{i}) not within Y0")
            continue
        if len(nbhd) > pd.beta:
            rep.violations.append(f"boundary of Y_{i} exceeds beta")
        plus = cl | nbhd
        if len(plus) <= tw_cap:
            w, _td = exact_treewidth(g.induced(plus))
            rep.treewidth_checked += 1
            if w > pd.beta - 1:
                rep.violations.append(f"tw of Y_{i} plus boundary exceeds beta-1")
    return rep


def find_max_protrusion(g: Graph, t: int, max_component_subsets: int = 15) -> frozenset[int]:
    """Largest t-protrusion, by enumerating all boundary sets of size <= t.

    For each candidate boundary B the components of g-B that keep
    G[C union B] within width t-1 qualify; the best union of qualifying
    components (the union itself must stay within width t-1) wins.  Ties go
    to the lexicographically smallest vertex set.
    """
    if t > 4:
        raise ValueError("t too large for enumeration")
    best: tuple[int, tuple[int, ...]] | None = None
    vs = sorted(g.vertices)

    def consider(w: frozenset[int]):
        nonlocal best
        key = (-len(w), tuple(sorted(w)))
        if best is None or key < best:
            best = key

    consider(frozenset())
    for size in range(0, t + 1):
        for b in itertools.combinations(vs, size):
            bs = frozenset(b)
            comps = [c for c in g.without(bs).components()
                     if exact_treewidth(g.induced(c | bs))[0] <= t - 1]
            if not comps:
                if exact_treewidth(g.induced(bs))[0] <= t - 1:
                    consider(bs)
                continue
            union = bs | frozenset().union(*comps)
            if exact_treewidth(g.induced(union))[0] <= t - 1:
                consider(union)
                continue
            if len(comps) > max_component_subsets:
                # keep dropping the smallest component until the union fits
                ordered = sorted(comps, key=len)
                while ordered:
                    ordered.pop(0)
                    cand = bs | frozenset().union(*ordered) if ordered else bs
                    if exact_treewidth(g.induced(cand))[0] <= t - 1:
                        consider(cand)
                        break
                continue
            for k in range(len(comps), -1, -1):
                for pick in itertools.combinations(comps, k):
                    cand = bs | frozenset().union(*pick) if pick else bs
                    if best is not None and len(cand) < -best[0]:
                        continue
                    if exact_treewidth(g.induced(cand))[0] <= t - 1:
                        consider(cand)
    assert best is not None
    return frozenset(best[1])


def shrink_protrusion(g: Graph, w: Iterable[int], limit: int) -> frozenset[int]:
    """Cut a large t-protrusion down to a 2t-protrusion of bounded size.

    Descends a nice decomposition of g[w] to the lowest node whose subtree
    covers more than `limit` vertices; that subtree's vertices form the
    result, bounded by its bag plus the original boundary.
    """
    ws = frozenset(w)
    if len(ws) <= limit:
        raise ValueError("nothing to shrink")
    gw = g.induced(ws)
    nice = make_nice(heuristic_decomposition(gw))
    cover = nice.subtree_vertices()
    depths = nice.depths()
    candidates = [i for i in range(len(nice.bags)) if len(cover[i]) > limit]
    lowest = max(candidates, key=lambda i: (depths[i], -i))
    return frozenset(cover[lowest])
