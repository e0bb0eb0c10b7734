"""Shared test utilities: canonical small-graph enumeration and oracles."""

from __future__ import annotations

import itertools
from functools import lru_cache

from protrusionkit.graphs import Graph
from protrusionkit.treewidth import width_of_order


@lru_cache(maxsize=None)
def canonical_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    pairs = list(itertools.combinations(range(n), 2))
    pidx = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        tables.append(tuple(pidx[tuple(sorted((perm[a], perm[b])))] for a, b in pairs))
    out = []
    for mask in range(1 << len(pairs)):
        minimal = True
        for tab in tables[1:]:
            pm = 0
            mm = mask
            smaller = False
            while mm:
                low = mm & -mm
                mm ^= low
                pm |= 1 << tab[low.bit_length() - 1]
            if pm < mask:
                minimal = False
                break
        if minimal:
            out.append(Graph(range(n), [pairs[i] for i in range(len(pairs))
                                        if mask >> i & 1]))
    return tuple(out)


def brute_force_treewidth(g: Graph) -> int:
    """Minimum elimination width over every vertex order (n <= 8)."""
    assert g.n <= 8
    best = g.n
    for order in itertools.permutations(g.vertices):
        best = min(best, width_of_order(g, order))
        if best <= 0:
            break
    return best if g.n else -1


def brute_force_max_protrusion(g: Graph, t: int) -> frozenset[int]:
    """Definition-level oracle: scan every vertex subset."""
    from protrusionkit.treewidth import exact_treewidth

    best: tuple[int, tuple[int, ...]] = (0, ())
    vs = sorted(g.vertices)
    for size in range(0, g.n + 1):
        for w in itertools.combinations(vs, size):
            ws = frozenset(w)
            if len(g.boundary(ws)) > t:
                continue
            if exact_treewidth(g.induced(ws))[0] > t - 1:
                continue
            key = (-len(ws), tuple(sorted(ws)))
            if best == (0, ()) or key < (-best[0], best[1]):
                best = (len(ws), tuple(sorted(ws)))
    return frozenset(best[1])


def trace_lca_violations(trace) -> list[str]:
    """Audit a marking trace: marked bags closed under LCA, every maximal
    unmarked subtree adjacent to at most two marked bags, and every
    large-subgraph mark carrying a witness with a full X-neighborhood."""
    out = []
    r, _t = trace.params
    by_component: dict[int, set[int]] = {}
    for m in trace.marked_bags:
        by_component.setdefault(m.component, set()).add(m.bag)
    for mark, witness in zip(trace.marked_bags, trace.witnesses):
        if mark.reason == "LargeSubgraph":
            if witness is None or len(witness[1]) < r:
                out.append(f"mark {mark} lacks a large-neighborhood witness")
    comp_pos = {ci: i for i, ci in enumerate(trace.processed_components)}
    for ci, marked in by_component.items():
        td = trace.decompositions[comp_pos[ci]]
        parent = td.parent
        depths = td.depths()

        def lca(a: int, b: int) -> int:
            while depths[a] > depths[b]:
                a = parent[a]
            while depths[b] > depths[a]:
                b = parent[b]
            while a != b:
                a, b = parent[a], parent[b]
            return a

        ms = sorted(marked)
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                if lca(ms[i], ms[j]) not in marked:
                    out.append(f"component {ci}: LCA of {ms[i]},{ms[j]} unmarked")
        # maximal unmarked subtrees see at most two marked bags
        adj: dict[int, set[int]] = {i: set() for i in range(len(td.bags))}
        for i, p in enumerate(parent):
            if p >= 0:
                adj[i].add(p)
                adj[p].add(i)
        seen: set[int] = set()
        for start in range(len(td.bags)):
            if start in marked or start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in marked and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            border = {w for u in comp for w in adj[u] if w in marked}
            if len(border) > 2:
                out.append(f"component {ci}: unmarked subtree sees {len(border)} marks")
    return out


def minor_oracle(h: Graph, g: Graph) -> bool:
    """Independent brute-force minor check: enumerate assignments of host
    vertices to pattern vertices (or none), then verify branch sets."""
    p = h.n
    gv = list(g.vertices)
    if p == 0:
        return True

    def connected(vs: frozenset[int]) -> bool:
        vs = set(vs)
        if not vs:
            return False
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in vs and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == vs

    hv = list(h.vertices)
    for assignment in itertools.product(range(p + 1), repeat=len(gv)):
        sets = [frozenset(gv[i] for i, a in enumerate(assignment) if a == j + 1)
                for j in range(p)]
        if any(not s for s in sets):
            continue
        if any(not connected(s) for s in sets):
            continue
        ok = True
        for a, b in h.edges():
            need = h.multiplicity(a, b)
            sa, sb = sets[hv.index(a)], sets[hv.index(b)]
            count = sum(1 for u in sa for v in sb if g.has_edge(u, v))
            if count < need:
                ok = False
                break
        if ok:
            return True
    return False
