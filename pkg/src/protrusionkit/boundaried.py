"""Boundaried graphs and the glue/unglue algebra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph


@dataclass(frozen=True)
class BoundariedGraph:
    """A graph with an ordered boundary; position i carries label i+1."""

    graph: Graph
    boundary: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.boundary)) != len(self.boundary):
            raise ValueError("boundary vertices must be distinct")
        for v in self.boundary:
            if not self.graph.has_vertex(v):
                raise ValueError("boundary vertex not in graph")

    @property
    def t(self) -> int:
        return len(self.boundary)


def unglue(g: Graph, w: Iterable[int], boundary: Iterable[int]) -> BoundariedGraph:
    """Extract g[w] with boundary labeled 1..t by the vertices' order in g.

    The boundary must cover every w-vertex with outside neighbors; it may
    carry extra w-vertices, which lets both sides of an arbitrary split use
    the same terminal set and reglue to the original graph.
    """
    ws = frozenset(w)
    bs = frozenset(boundary)
    if not (g.boundary(ws) <= bs <= ws):
        raise ValueError("inconsistent boundary")
    ordered = tuple(sorted(bs, key=g.rank))
    return BoundariedGraph(g.induced(ws), ordered)


def glue(g1: BoundariedGraph, g2: BoundariedGraph) -> Graph:
    """Disjoint union with like-labeled boundary vertices identified.

    g1 keeps its vertex ids; g2's interior gets fresh ids appended after
    g1's order.  Parallel edges arising at the seam are merged.
    """
    if g1.t != g2.t:
        raise ValueError("boundary size mismatch")
    if g1.graph.pattern or g2.graph.pattern:
        raise ValueError("gluing is defined on host graphs")
    base = max(g1.graph.vertices, default=-1) + 1
    mapping: dict[int, int] = {}
    for i, v in enumerate(g2.boundary):
        mapping[v] = g1.boundary[i]
    fresh = base
    for v in g2.graph.vertices:
        if v not in mapping:
            mapping[v] = fresh
            fresh += 1
    vertices = list(g1.graph.vertices) + [mapping[v] for v in g2.graph.vertices
                                          if mapping[v] >= base]
    edge_set = set(g1.graph.edges())
    for u, v in g2.graph.edges():
        a, b = mapping[u], mapping[v]
        if (a, b) not in edge_set and (b, a) not in edge_set:
            edge_set.add((a, b))
    return Graph(vertices, edge_set)
