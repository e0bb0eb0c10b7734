"""Core graph type: ordered vertices, optional pattern multiplicities, editing ops."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping


class Graph:
    """Immutable simple graph over integer vertex ids with a total order.

    The vertex order is the position in the ``vertices`` tuple; induced
    subgraphs inherit it.  Pattern graphs (``pattern=True``) may carry edge
    multiplicities greater than one; host graphs must not.
    """

    __slots__ = ("_vertices", "_rank", "_adj", "_mult", "_m", "pattern")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = (),
                 multiplicity: Mapping[tuple[int, int], int] | None = None,
                 pattern: bool = False):
        vs = tuple(int(v) for v in vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate vertex ids")
        rank = {v: i for i, v in enumerate(vs)}
        adj: dict[int, set[int]] = {v: set() for v in vs}
        mult: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if u == v:
                raise ValueError("no self-loops")
            if u not in rank or v not in rank:
                raise ValueError(f"edge endpoint {u if u not in rank else v} is not a vertex")
            key = (u, v) if rank[u] < rank[v] else (v, u)
            if key in mult:
                raise ValueError(f"duplicate edge {key}")
            mult[key] = 1
            adj[u].add(v)
            adj[v].add(u)
        if multiplicity:
            for (u, v), m in multiplicity.items():
                key = (u, v) if rank[u] < rank[v] else (v, u)
                if key not in mult:
                    raise ValueError(f"multiplicity given for missing edge {key}")
                if m < 1:
                    raise ValueError("multiplicity must be positive")
                mult[key] = int(m)
        if not pattern and any(m > 1 for m in mult.values()):
            raise ValueError("host graphs must have all multiplicities 1")
        self._vertices = vs
        self._rank = rank
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._mult = mult
        self._m = len(mult)
        self.pattern = pattern

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    def rank(self, v: int) -> int:
        return self._rank[v]

    def has_vertex(self, v: int) -> bool:
        return v in self._rank

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, frozenset())

    def multiplicity(self, u: int, v: int) -> int:
        key = (u, v) if self._rank[u] < self._rank[v] else (v, u)
        return self._mult.get(key, 0)

    def total_multiplicity(self) -> int:
        return sum(self._mult.values())

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as rank-ordered pairs, sorted by rank lexicographically."""
        return tuple(sorted(self._mult, key=lambda e: (self._rank[e[0]], self._rank[e[1]])))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(ns) for ns in self._adj.values()), reverse=True))

    # -- derived graphs --------------------------------------------------

    def induced(self, keep: Iterable[int]) -> "Graph":
        ks = set(keep)
        vs = [v for v in self._vertices if v in ks]
        edges = []
        mult = {}
        for (u, v), m in self._mult.items():
            if u in ks and v in ks:
                edges.append((u, v))
                if m > 1:
                    mult[(u, v)] = m
        return Graph(vs, edges, mult or None, pattern=self.pattern)

    def without(self, remove: Iterable[int]) -> "Graph":
        rs = set(remove)
        return self.induced(v for v in self._vertices if v not in rs)

    def underlying_simple(self) -> "Graph":
        """Same vertices and edges, all multiplicities 1, host-flagged."""
        return Graph(self._vertices, self._mult.keys())

    def relabeled(self, mapping: Mapping[int, int]) -> "Graph":
        vs = [mapping[v] for v in self._vertices]
        edges = [(mapping[u], mapping[v]) for (u, v) in self._mult]
        mult = {(mapping[u], mapping[v]): m for (u, v), m in self._mult.items() if m > 1}
        return Graph(vs, edges, mult or None, pattern=self.pattern)

    # -- set queries -----------------------------------------------------

    def neighborhood(self, s: Iterable[int]) -> frozenset[int]:
        """N(S): vertices outside S with a neighbor in S."""
        ss = set(s)
        out: set[int] = set()
        for v in ss:
            out.update(self._adj[v])
        return frozenset(out - ss)

    def boundary(self, w: Iterable[int]) -> frozenset[int]:
        """Vertices of W with a neighbor outside W."""
        ws = set(w)
        return frozenset(v for v in ws if any(u not in ws for u in self._adj[v]))

    def components(self) -> tuple[frozenset[int], ...]:
        """Connected components, ordered by smallest member rank."""
        seen: set[int] = set()
        out = []
        for v in self._vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(frozenset(comp))
        return tuple(out)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._vertices == other._vertices and self._mult == other._mult
                and self.pattern == other.pattern)

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(sorted(self._mult.items())), self.pattern))

    def __repr__(self) -> str:
        kind = "pattern" if self.pattern else "graph"
        return f"<{kind} n={self.n} m={self.m}>"


# -- constructors ---------------------------------------------------------

def complete_graph(n: int, pattern: bool = False) -> Graph:
    return Graph(range(n), itertools.combinations(range(n), 2), pattern=pattern)

def path_graph(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])

def star_graph(leaves: int) -> Graph:
    return Graph(range(leaves + 1), ((0, i) for i in range(1, leaves + 1)))

def theta_graph(c: int) -> Graph:
    """Two vertices joined by c parallel edges (a pattern)."""
    if c < 1:
        raise ValueError("theta needs at least one edge")
    return Graph([0, 1], [(0, 1)], {(0, 1): c} if c > 1 else None, pattern=True)

def disjoint_union(*graphs: Graph, pattern: bool = False) -> Graph:
    vs: list[int] = []
    edges: list[tuple[int, int]] = []
    mult: dict[tuple[int, int], int] = {}
    offset = 0
    for g in graphs:
        remap = {v: offset + i for i, v in enumerate(g.vertices)}
        vs.extend(remap[v] for v in g.vertices)
        for (u, v) in g.edges():
            edges.append((remap[u], remap[v]))
            m = g.multiplicity(u, v)
            if m > 1:
                mult[(remap[u], remap[v])] = m
        offset += g.n
    return Graph(vs, edges, mult or None, pattern=pattern or bool(mult))


# -- editing operations ----------------------------------------------------

def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Contract edge e of a host graph; the merged vertex gets a fresh id, last in order."""
    u, v = e
    if not (g.has_vertex(u) and g.has_vertex(v) and g.has_edge(u, v)):
        raise ValueError("edge not found")
    if g.pattern:
        raise ValueError("contraction is defined on host graphs")
    new = max(g.vertices) + 1
    merged = (g.neighbors(u) | g.neighbors(v)) - {u, v}
    vs = [w for w in g.vertices if w not in (u, v)] + [new]
    edges = [(a, b) for (a, b) in g.edges() if u not in (a, b) and v not in (a, b)]
    edges += [(w, new) for w in sorted(merged)]
    return Graph(vs, edges)


@dataclass(frozen=True)
class PathFamily:
    """Paths usable for constriction: endpoints non-adjacent, near-disjoint."""

    paths: tuple[tuple[int, ...], ...]

    def __init__(self, paths: Iterable[Iterable[int]]):
        object.__setattr__(self, "paths", tuple(tuple(p) for p in paths))

    def validate(self, g: Graph) -> list[str]:
        errs = []
        for i, p in enumerate(self.paths):
            if len(p) != len(set(p)):
                errs.append(f"path {i} repeats a vertex")
                continue
            if any(not g.has_vertex(v) for v in p):
                errs.append(f"path {i} leaves the graph")
                continue
            if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
                errs.append(f"path {i} is not a path in the graph")
                continue
            if len(p) < 2 or g.has_edge(p[0], p[-1]):
                errs.append(f"path {i} endpoints are adjacent")
        for i, p in enumerate(self.paths):
            for j in range(i + 1, len(self.paths)):
                q = self.paths[j]
                shared = set(p) & set(q)
                if len(shared) > 1:
                    errs.append(f"paths {i} and {j} share more than one vertex")
                elif shared:
                    v = next(iter(shared))
                    if v not in (p[0], p[-1]) or v not in (q[0], q[-1]):
                        errs.append(f"paths {i} and {j} share a non-endpoint vertex")
        return errs


def constrict(g: Graph, p: PathFamily) -> Graph:
    """Join each path's endpoints by an edge and delete all its inner vertices."""
    errs = p.validate(g)
    if errs:
        raise ValueError("invalid path family: " + "; ".join(errs))
    inner: set[int] = set()
    new_edges = []
    for path in p.paths:
        inner.update(path[1:-1])
        new_edges.append((path[0], path[-1]))
    keep = [v for v in g.vertices if v not in inner]
    edges = [(u, v) for (u, v) in g.edges() if u not in inner and v not in inner]
    edges.extend(new_edges)
    return Graph(keep, edges)


def count_cliques(g: Graph, cap: int = 40) -> int:
    """Number of cliques of g, counting the empty set and singletons."""
    if g.n > cap:
        raise ValueError("graph too large for clique census")
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * g.n
    for u, v in g.edges():
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]

    def rec(candidates: int) -> int:
        total = 1
        c = candidates
        while c:
            low = c & -c
            c ^= low
            i = low.bit_length() - 1
            total += rec(c & adj[i])
        return total

    return rec((1 << g.n) - 1)


# -- isomorphism (desk scale) ----------------------------------------------

def _refine_signature(g: Graph) -> dict[int, tuple]:
    sig = {v: (g.degree(v),) for v in g.vertices}
    for _ in range(2):
        sig = {v: (sig[v], tuple(sorted(sig[u] for u in g.neighbors(v)))) for v in g.vertices}
    return sig


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Brute-force isomorphism with degree-signature pruning; respects multiplicities."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    if sorted(g1._mult.values()) != sorted(g2._mult.values()):
        return False
    s1, s2 = _refine_signature(g1), _refine_signature(g2)
    if sorted(s1.values()) != sorted(s2.values()):
        return False
    by_sig: dict[tuple, list[int]] = {}
    for v, s in s2.items():
        by_sig.setdefault(s, []).append(v)
    order = sorted(g1.vertices, key=lambda v: len(by_sig.get(s1[v], [])))

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in by_sig.get(s1[v], []):
            if w in used:
                continue
            ok = True
            for u, mu in mapping.items():
                if g1.has_edge(v, u) != g2.has_edge(w, mu):
                    ok = False
                    break
                if g1.has_edge(v, u) and g1.multiplicity(v, u) != g2.multiplicity(w, mu):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend(0)
