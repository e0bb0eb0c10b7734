"""Planar-F-Deletion: iterative compression, branching over marked vertices,
and per-cluster representative tables, with brute-force oracles."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, MutableMapping

from .boundaried import BoundariedGraph, glue
from .graphs import Graph, complete_graph, disjoint_union, is_isomorphic, theta_graph
from .minors import DEFAULT_PATTERN_CAP, is_family_minor_free, is_minor
from .protrusion import ProtrusionDecomposition, clusters, mark_bags

BRUTE_FORCE_VERTEX_CAP = 12
CLUSTER_SUBSET_CAP = 25
TEST_ENUM_COST_LIMIT = 1_500_000

_K5 = complete_graph(5, pattern=True)
_K33 = Graph(range(6), [(i, j) for i in range(3) for j in range(3, 6)], pattern=True)


@dataclass(frozen=True)
class Family:
    """Patterns to exclude as minors; at least one member must be planar."""

    patterns: tuple[Graph, ...]
    planar_witness: int
    r: int
    tf: int | None = None

    @staticmethod
    def from_patterns(patterns: Iterable[Graph], tf: int | None = None,
                      cap: int = DEFAULT_PATTERN_CAP) -> "Family":
        pats = tuple(patterns)
        if not pats:
            raise ValueError("family must be non-empty")
        witness = None
        for i, p in enumerate(pats):
            if p.n > cap:
                raise ValueError("pattern too large for exact minor test")
            simple = p.underlying_simple()
            if not is_minor(_K5, simple) and not is_minor(_K33, simple):
                if witness is None:
                    witness = i
        if witness is None:
            raise ValueError("family must contain a planar graph")
        return Family(pats, witness, pats[witness].n, tf)


def _known_width_bounds() -> list[tuple[Graph, int]]:
    # Excluding the witness as a minor forces the listed treewidth bound:
    # K2-free graphs are edgeless, K3-free are forests, K4-free are
    # series-parallel, theta_3-free blocks are edges or cycles, and graphs
    # without two disjoint cycles (2K3-free) have treewidth at most 4.
    return [
        (complete_graph(2, pattern=True), 1),
        (complete_graph(3, pattern=True), 2),
        (complete_graph(4, pattern=True), 3),
        (theta_graph(2), 2),
        (theta_graph(3), 3),
        (disjoint_union(complete_graph(3), complete_graph(3), pattern=True), 5),
    ]


def treewidth_bound_for_family(f: Family, override: int | None = None) -> int:
    """t_F such that excluding the planar witness bounds treewidth by t_F - 1."""
    if override is not None:
        return override
    if f.tf is not None:
        return f.tf
    witness = f.patterns[f.planar_witness]
    for known, tf in _known_width_bounds():
        if is_isomorphic(witness, known):
            return tf
    raise ValueError("supply t_F")


class DisjointInstance:
    """A graph with an initial solution x; seeks a smaller disjoint one."""

    __slots__ = ("graph", "x", "k")

    def __init__(self, graph: Graph, x: Iterable[int]):
        self.graph = graph
        self.x = frozenset(x)
        self.k = len(self.x)
        for v in self.x:
            if not graph.has_vertex(v):
                raise ValueError("initial solution leaves the graph")


class _Freeness:
    """Memoized family-minor-freeness over induced subgraphs of one host."""

    __slots__ = ("host", "family", "memo")

    def __init__(self, host: Graph, family: Family):
        self.host = host
        self.family = family
        self.memo: dict[frozenset[int], bool] = {}

    def free(self, kept: Iterable[int]) -> bool:
        key = frozenset(kept)
        hit = self.memo.get(key)
        if hit is None:
            hit = is_family_minor_free(self.host.induced(key), self.family.patterns)
            self.memo[key] = hit
        return hit


def f_deletion_brute_force(g: Graph, f: Family, k: int,
                           forbidden: Iterable[int] = ()) -> frozenset[int] | None:
    """Minimum deletion set of size <= k avoiding `forbidden`, by enumeration."""
    if g.n > BRUTE_FORCE_VERTEX_CAP:
        raise ValueError("graph too large for exhaustive deletion search")
    fb = frozenset(forbidden)
    cand = sorted(set(g.vertices) - fb)
    all_v = frozenset(g.vertices)
    for size in range(0, min(max(k, 0), len(cand)) + 1):
        for pick in itertools.combinations(cand, size):
            if is_family_minor_free(g.induced(all_v - frozenset(pick)), f.patterns):
                return frozenset(pick)
    return None


def _search_outside(g: Graph, f: Family, k: int, forbidden: frozenset[int],
                    cache: _Freeness, stats: MutableMapping | None = None
                    ) -> frozenset[int] | None:
    """Smallest deletion set within V(g) minus forbidden, budget k, memoized."""
    if k < 0:
        return None
    cand = sorted(set(g.vertices) - forbidden)
    all_v = frozenset(g.vertices)
    for size in range(0, min(k, len(cand)) + 1):
        for pick in itertools.combinations(cand, size):
            if stats is not None:
                stats["candidates_checked"] = stats.get("candidates_checked", 0) + 1
            if cache.free(all_v - frozenset(pick)):
                return frozenset(pick)
    return None


# -- boundaried test graphs and representatives ------------------------------

_raw_tests_cache: dict[tuple[int, int], tuple[BoundariedGraph, ...]] = {}
_filtered_tests_cache: dict[tuple, tuple[BoundariedGraph, ...]] = {}


def boundaried_test_graphs(b: int, max_vertices: int,
                           family: Family | None = None) -> tuple[BoundariedGraph, ...]:
    """All b-boundaried graphs with at most max_vertices vertices, up to
    isomorphism fixing the boundary labels.

    With a family given, members that are themselves not family-minor-free
    are dropped: such a test graph is a subgraph of every gluing, so its
    signature column is constantly false and distinguishes nothing.
    """
    key = (b, max_vertices)
    raw = _raw_tests_cache.get(key)
    if raw is None:
        cost = 0
        for n in range(b, max_vertices + 1):
            cost += (1 << math.comb(n, 2)) * max(1, math.factorial(n - b))
            if cost > TEST_ENUM_COST_LIMIT:
                raise ValueError("cluster too large; use fallback")
        out: list[BoundariedGraph] = []
        for n in range(b, max_vertices + 1):
            pairs = list(itertools.combinations(range(n), 2))
            pidx = {p: i for i, p in enumerate(pairs)}
            tables = []
            for perm in itertools.permutations(range(b, n)):
                m = {i: i for i in range(b)}
                m.update(zip(range(b, n), perm))
                tables.append(tuple(pidx[tuple(sorted((m[p], m[q])))] for p, q in pairs))
            for mask in range(1 << len(pairs)):
                minimal = True
                for tab in tables[1:]:
                    pm = 0
                    mm = mask
                    while mm:
                        low = mm & -mm
                        mm ^= low
                        pm |= 1 << tab[low.bit_length() - 1]
                    if pm < mask:
                        minimal = False
                        break
                if not minimal:
                    continue
                edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
                out.append(BoundariedGraph(Graph(range(n), edges), tuple(range(b))))
        raw = tuple(out)
        _raw_tests_cache[key] = raw
    if family is None:
        return raw
    fkey = (b, max_vertices, family.patterns)
    filt = _filtered_tests_cache.get(fkey)
    if filt is None:
        filt = tuple(h for h in raw if is_family_minor_free(h.graph, family.patterns))
        _filtered_tests_cache[fkey] = filt
    return filt


@dataclass(frozen=True)
class ClusterRepresentatives:
    """One minimum-size subset per signature class of a restricted protrusion."""

    boundary: tuple[int, ...]
    representatives: tuple[frozenset[int], ...]
    signatures: tuple[tuple[bool, ...], ...]
    class_sizes: tuple[int, ...]
    test_graph_count: int


def compute_representatives(g: Graph, cluster_plus: Iterable[int],
                            boundary: Iterable[int], f: Family, t: int,
                            test_cap: int) -> ClusterRepresentatives:
    """Classify the subsets of a restricted protrusion by gluing behavior.

    Every Q inside the cluster is scored against every canonical boundaried
    test graph within test_cap vertices; equal score vectors are equivalent
    and the smallest Q of each class is kept.  A remainder that is not
    family-minor-free stays so under any gluing, which shortcuts its row.
    """
    plus = frozenset(cluster_plus)
    bnd = tuple(sorted(frozenset(boundary), key=g.rank))
    yi = sorted(plus - set(bnd))
    if len(yi) > CLUSTER_SUBSET_CAP:
        raise ValueError("cluster too large; use fallback")
    if len(bnd) > t:
        raise ValueError("boundary larger than t")
    tests = boundaried_test_graphs(len(bnd), test_cap, family=f)
    all_false = tuple(False for _ in tests)

    groups: dict[tuple[bool, ...], frozenset[int]] = {}
    sizes: dict[tuple[bool, ...], int] = {}
    for qsize in range(0, len(yi) + 1):
        for q in itertools.combinations(yi, qsize):
            qs = frozenset(q)
            part_vs = plus - qs
            part = g.induced(part_vs)
            if not is_family_minor_free(part, f.patterns):
                sig = all_false
            else:
                bpart = BoundariedGraph(part, bnd)
                sig = tuple(is_family_minor_free(glue(bpart, h), f.patterns)
                            for h in tests)
            if sig not in groups:
                groups[sig] = qs
            sizes[sig] = sizes.get(sig, 0) + 1

    items = sorted(groups.items(), key=lambda kv: (len(kv[1]), tuple(sorted(kv[1]))))
    return ClusterRepresentatives(
        bnd,
        tuple(q for _sig, q in items),
        tuple(sig for sig, _q in items),
        tuple(sizes[sig] for sig, _q in items),
        len(tests),
    )


# -- solving with a decomposition -------------------------------------------

def solve_with_decomposition(g: Graph, y0: Iterable[int], k: int,
                             pd: ProtrusionDecomposition, f: Family, *,
                             test_cap: int | None = None,
                             cache: _Freeness | None = None,
                             stats: MutableMapping | None = None
                             ) -> frozenset[int] | None:
    """Deletion set within V(g) minus Y0 of size <= k, or None.

    With a test_cap the search runs over decomposable sets, one representative
    per cluster, ordered by total size; every candidate is verified against
    the real minor tests before being returned, and any cluster exceeding the
    representative caps drops the whole search to the exact restricted
    brute force.  Without a test_cap the exact route is used directly.
    """
    y0s = frozenset(y0)
    cache = cache or _Freeness(g, f)
    if k < 0:
        return None
    if test_cap is not None:
        tables = []
        try:
            for cl in pd.clusters:
                bnd = g.neighborhood(cl)
                tables.append((cl, compute_representatives(
                    g, cl | bnd, bnd, f, pd.beta, test_cap)))
        except ValueError:
            tables = None
        if tables is not None:
            if stats is not None:
                stats["representative_mode"] = "heuristic"
                stats["representative_classes"] = [len(t.representatives)
                                                   for _cl, t in tables]
            reps = [sorted(t.representatives, key=lambda q: (len(q), tuple(sorted(q))))
                    for _cl, t in tables]
            min_sizes = [min((len(q) for q in rs), default=0) for rs in reps]
            suffix_min = [0] * (len(reps) + 1)
            for i in range(len(reps) - 1, -1, -1):
                suffix_min[i] = suffix_min[i + 1] + min_sizes[i]

            def dfs(i: int, target: int, acc: frozenset[int]) -> frozenset[int] | None:
                if i == len(reps):
                    if target != 0:
                        return None
                    if stats is not None:
                        stats["candidates_checked"] = stats.get("candidates_checked", 0) + 1
                    if cache.free(frozenset(g.vertices) - acc):
                        return acc
                    return None
                for q in reps[i]:
                    rest = target - len(q)
                    if rest < 0 or rest < suffix_min[i + 1]:
                        continue
                    got = dfs(i + 1, rest, acc | q)
                    if got is not None:
                        return got
                return None

            for total in range(suffix_min[0], k + 1):
                got = dfs(0, total, frozenset())
                if got is not None:
                    return got
            return None
        if stats is not None:
            stats["representative_mode"] = "fallback"
    return _search_outside(g, f, k, y0s, cache, stats)


def disjoint_solver(inst: DisjointInstance, f: Family, *,
                    test_cap: int | None = None,
                    cache: _Freeness | None = None,
                    stats: MutableMapping | None = None) -> frozenset[int] | None:
    """Alternative solution disjoint from inst.x and strictly smaller, or None.

    Marks bags over the initial solution, branches over every subset I of the
    marked vertices (smallest first), and solves the remainder outside the
    separating part with budget k - |I| - 1.
    """
    g, x, k = inst.graph, inst.x, inst.k
    cache = cache or _Freeness(g, f)
    if not cache.free(frozenset(g.vertices) - x):
        raise ValueError("X is not a solution")
    if k == 0:
        return None
    tf = treewidth_bound_for_family(f)
    y0, trace = mark_bags(g, x, f.r, tf)
    if stats is not None:
        stats["marked_bags"] = len(trace.marked_bags)
    vm = sorted(y0 - x)
    for isize in range(0, min(len(vm), k - 1) + 1):
        for i_pick in itertools.combinations(vm, isize):
            if stats is not None:
                stats["branches_explored"] = stats.get("branches_explored", 0) + 1
            i_set = frozenset(i_pick)
            gi = g.without(i_set)
            y0i = y0 - i_set
            cls = clusters(gi, y0i)
            pd = ProtrusionDecomposition(frozenset(y0i), tuple(cls),
                                         2 * tf + f.r, f.r, tf, trace)
            xp = solve_with_decomposition(gi, y0i, k - isize - 1, pd, f,
                                          test_cap=test_cap, cache=cache, stats=stats)
            if xp is not None:
                sol = frozenset(i_set | xp)
                if stats is not None:
                    stats["clusters"] = len(cls)
                _check_solution(sol, len(sol) < k and not (sol & x)
                                and cache.free(frozenset(g.vertices) - sol))
                return sol
    return None


def _check_solution(sol: frozenset[int], ok: bool) -> None:
    if not ok:
        raise RuntimeError(f"solver produced an invalid solution {sorted(sol)}")


def planar_f_deletion(g: Graph, f: Family, k: int, *,
                      test_cap: int | None = None,
                      stats: MutableMapping | None = None) -> frozenset[int] | None:
    """Deletion set of size <= k leaving g free of every family minor, or None.

    Iterative compression over the vertex order: the running solution grows
    by each new vertex when needed, and a size-(k+1) solution is repaired by
    splitting it into a discarded part (joins the new solution) and a kept
    part handed to the disjoint solver.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    cache = _Freeness(g, f)
    sol: frozenset[int] = frozenset()
    prefix: list[int] = []
    for v in g.vertices:
        prefix.append(v)
        kept = frozenset(prefix)
        if cache.free(kept - sol):
            continue
        sol = sol | {v}
        if len(sol) <= k:
            continue
        gp = g.induced(kept)
        svs = sorted(sol)
        found = None
        for dsize in range(0, len(svs)):
            for d in itertools.combinations(svs, dsize):
                if stats is not None:
                    stats["compression_splits"] = stats.get("compression_splits", 0) + 1
                d_set = frozenset(d)
                inst = DisjointInstance(gp.without(d_set), sol - d_set)
                xt = disjoint_solver(inst, f, test_cap=test_cap, cache=cache,
                                     stats=stats)
                if xt is not None:
                    found = d_set | xt
                    break
            if found is not None:
                break
        if found is None:
            return None
        sol = found
    _check_solution(sol, len(sol) <= k
                    and cache.free(frozenset(g.vertices) - sol))
    return sol
