"""Brute-force minor and topological-minor containment over small patterns."""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import Graph

DEFAULT_PATTERN_CAP = 8


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _adj_masks(g: Graph) -> list[int]:
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * g.n
    for u, v in g.edges():
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    return adj


def _mask_neighborhood(adj: list[int], mask: int) -> int:
    out = 0
    for i in _bit_indices(mask):
        out |= adj[i]
    return out & ~mask


def _edges_between(adj: list[int], a: int, b: int) -> int:
    return sum((adj[i] & b).bit_count() for i in _bit_indices(a))


def _connected_subsets(adj: list[int], seed: int, allowed: int, max_size: int) -> list[int]:
    """All connected subsets of `allowed` that contain bit `seed` (classic one-pass enum)."""
    out: list[int] = []
    seed_i = seed.bit_length() - 1

    def rec(s: int, ext: int, seen: int, size: int):
        out.append(s)
        if size == max_size:
            return
        e = ext
        while e:
            v = e & -e
            e ^= v
            vi = v.bit_length() - 1
            fresh = adj[vi] & allowed & ~seen & ~s
            rec(s | v, e | fresh, seen | fresh | v, size + 1)

    first = adj[seed_i] & allowed & ~seed
    rec(seed, first, seed | first, 1)
    return out


def _pattern_plan(h: Graph):
    """Placement order for pattern vertices plus anchor and symmetry data.

    Returns (order, anchors, twin_prev, comp_ranges, comp_iso_prev) where
    anchors[i] lists (earlier position, required multiplicity), twin_prev[i]
    is an earlier interchangeable position whose branch set must get the
    smaller minimum vertex, and comp_iso_prev marks isomorphic components.
    """
    from .graphs import is_isomorphic

    comps = list(h.components())
    comps.sort(key=lambda c: (-len(c), min(c)))
    order: list[int] = []
    comp_ranges: list[tuple[int, int]] = []
    for comp in comps:
        start = len(order)
        rest = set(comp)
        first = max(rest, key=lambda v: (h.degree(v), -v))
        order.append(first)
        rest.remove(first)
        while rest:
            placed = set(order[start:])
            nxt = max(rest, key=lambda v: (sum(1 for u in h.neighbors(v) if u in placed),
                                           h.degree(v), -v))
            order.append(nxt)
            rest.remove(nxt)
        comp_ranges.append((start, len(order)))

    pos = {v: i for i, v in enumerate(order)}
    anchors: list[list[tuple[int, int]]] = []
    for i, v in enumerate(order):
        a = [(pos[u], h.multiplicity(u, v)) for u in h.neighbors(v) if pos[u] < i]
        a.sort()
        anchors.append(a)

    def twins(u: int, v: int) -> bool:
        if h.multiplicity(u, v) != 0 and h.multiplicity(u, v) != h.multiplicity(v, u):
            return False
        nu = {w: h.multiplicity(u, w) for w in h.neighbors(u) if w != v}
        nv = {w: h.multiplicity(v, w) for w in h.neighbors(v) if w != u}
        return nu == nv

    twin_prev = [-1] * len(order)
    for i in range(len(order)):
        for j in range(i - 1, -1, -1):
            if twins(order[j], order[i]):
                twin_prev[i] = j
                break

    comp_iso_prev = [-1] * len(comps)
    for a in range(len(comps)):
        ga = h.induced(comps[a])
        for b in range(a - 1, -1, -1):
            if len(comps[b]) == len(comps[a]) and is_isomorphic(h.induced(comps[b]), ga):
                comp_iso_prev[a] = b
                break

    return order, anchors, twin_prev, comp_ranges, comp_iso_prev


def _reduced_host(h: Graph, g: Graph) -> Graph:
    """Shrink the host without changing containment of the simple pattern h.

    With min pattern degree >= 2, host vertices of degree <= 1 cannot take
    part in any model and go; with min degree >= 3, degree-2 host vertices
    are suppressed (their two neighbors joined, parallels merged).
    """
    if h.n == 0 or any(m > 1 for m in (h.multiplicity(u, v) for u, v in h.edges())):
        return g
    mind = min(h.degree(v) for v in h.vertices)
    if mind < 2:
        return g
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            d = len(adj[v])
            if d <= 1:
                for u in adj[v]:
                    adj[u].discard(v)
                del adj[v]
                changed = True
            elif d == 2 and mind >= 3:
                a, b = adj[v]
                adj[a].discard(v)
                adj[b].discard(v)
                del adj[v]
                adj[a].add(b)
                adj[b].add(a)
                changed = True
    if len(adj) == g.n:
        return g
    keep = set(adj)
    edges = {(u, v) if u < v else (v, u) for u in adj for v in adj[u]}
    return Graph(sorted(keep), sorted(edges))


def is_minor(h: Graph, g: Graph, cap: int = DEFAULT_PATTERN_CAP) -> bool:
    """Decide whether h (possibly a multigraph pattern) is a minor of host g.

    Exhaustive search for disjoint connected branch sets, one per pattern
    vertex, with at least mult(uv) distinct host edges between the sets of
    every pattern edge uv.  Pruned by anchor adjacency, twin symmetry, and
    component symmetry.
    """
    if h.n > cap:
        raise ValueError("pattern too large for exact minor test")
    if h.n == 0:
        return True
    g = _reduced_host(h, g)
    if h.n > g.n or h.total_multiplicity() > g.m:
        return False

    adj = _adj_masks(g)
    n = g.n
    full = (1 << n) - 1
    order, anchors, twin_prev, comp_ranges, comp_iso_prev = _pattern_plan(h)
    p = len(order)
    comp_start = {}
    comp_end = {}
    for ci, (s, e) in enumerate(comp_ranges):
        comp_start[s] = ci
        comp_end[e - 1] = ci
    comp_mins = [0] * len(comp_ranges)

    branch: list[int] = [0] * p

    def candidates(i: int, used: int) -> list[int]:
        free = full & ~used
        remaining_after = p - i - 1
        max_size = free.bit_count() - remaining_after
        if max_size <= 0:
            return []
        anc = anchors[i]
        if anc:
            zone = _mask_neighborhood(adj, branch[anc[0][0]]) & free
        else:
            zone = free
        out: list[int] = []
        seen_seeds = 0
        for si in _bit_indices(zone):
            seed = 1 << si
            for s in _connected_subsets(adj, seed, free & ~seen_seeds, max_size):
                ok = True
                for j, need in anc:
                    if _edges_between(adj, s, branch[j]) < need:
                        ok = False
                        break
                if ok:
                    out.append(s)
            seen_seeds |= seed
        out.sort(key=lambda s: (s.bit_count(), s))
        return out

    def place(i: int, used: int) -> bool:
        if i == p:
            return True
        tp = twin_prev[i]
        floor = (branch[tp] & -branch[tp]) if tp >= 0 else 0
        for s in candidates(i, used):
            if floor and (s & -s) <= floor:
                continue
            branch[i] = s
            ci = comp_end.get(i)
            if ci is not None:
                lo = min((branch[j] & -branch[j]) for j in range(*comp_ranges[ci]))
                comp_mins[ci] = lo
                prev = comp_iso_prev[ci]
                if prev >= 0 and lo <= comp_mins[prev]:
                    continue
            if place(i + 1, used | s):
                return True
        branch[i] = 0
        return False

    return place(0, 0)


def is_topological_minor(h: Graph, g: Graph, cap: int = DEFAULT_PATTERN_CAP) -> bool:
    """Decide whether simple h is a topological minor of host g.

    Searches for an injective placement of branch vertices and internally
    vertex-disjoint host paths realizing each pattern edge; branch vertices
    never lie inside another edge's path.
    """
    if h.n > cap:
        raise ValueError("pattern too large for exact minor test")
    if any(h.multiplicity(u, v) > 1 for u, v in h.edges()):
        raise ValueError("topological minor test requires a simple pattern")
    if h.n == 0:
        return True
    g = _reduced_host(h, g)
    if h.n > g.n or h.m > g.m:
        return False
    hdeg = sorted((h.degree(v) for v in h.vertices), reverse=True)
    gdeg = sorted((g.degree(v) for v in g.vertices), reverse=True)
    if any(a > b for a, b in zip(hdeg, gdeg)):
        return False

    adj = _adj_masks(g)
    idx = {v: i for i, v in enumerate(g.vertices)}
    full = (1 << g.n) - 1
    hvs = sorted(h.vertices, key=lambda v: -h.degree(v))
    cands = {v: [idx[w] for w in g.vertices if g.degree(w) >= h.degree(v)] for v in hvs}

    def paths_between(a: int, b: int, free: int):
        """Yield internal-vertex masks of simple a-b paths with internals in free."""
        if adj[a] & (1 << b):
            yield 0

        def rec(cur: int, inner: int):
            for w in _bit_indices(adj[cur] & free & ~inner):
                ninner = inner | (1 << w)
                if adj[w] & (1 << b):
                    yield ninner
                yield from rec(w, ninner)

        yield from rec(a, 0)

    def route(edges: list[tuple[int, int]], free: int) -> bool:
        if not edges:
            return True
        a, b = edges[0]
        for inner in paths_between(a, b, free):
            if route(edges[1:], free & ~inner):
                return True
        return False

    assign: dict[int, int] = {}

    def place(i: int) -> bool:
        if i == len(hvs):
            branch_mask = 0
            for w in assign.values():
                branch_mask |= 1 << w
            edges = [(assign[u], assign[v]) for u, v in h.edges()]
            edges.sort(key=lambda e: (adj[e[0]] & (1 << e[1])) == 0)
            return route(edges, full & ~branch_mask)
        v = hvs[i]
        for w in cands[v]:
            if w in assign.values():
                continue
            assign[v] = w
            if place(i + 1):
                return True
            del assign[v]
        return False

    return place(0)


def is_family_minor_free(g: Graph, family: Sequence[Graph] | Iterable[Graph],
                         cap: int = DEFAULT_PATTERN_CAP) -> bool:
    """True iff no member of the family is a minor of g."""
    members = list(family)
    if not members:
        raise ValueError("family must be non-empty")
    return not any(is_minor(h, g, cap=cap) for h in members)
