"""Explicit linear kernel for Edge Dominating Set: matching modulator,
bag marking with t=1, and the twin elimination rule."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph
from .protrusion import ProtrusionDecomposition, build_protrusion_decomposition

EDS_BRUTE_EDGE_CAP = 20


@dataclass(frozen=True)
class EdsInstance:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")


def eds_2approx(g: Graph) -> frozenset[tuple[int, int]]:
    """Greedy maximal matching over the canonical edge order.

    A maximal matching is an edge dominating set of size at most twice the
    optimum.
    """
    matched: set[int] = set()
    out = []
    for u, v in g.edges():
        if u not in matched and v not in matched:
            out.append((u, v))
            matched.add(u)
            matched.add(v)
    return frozenset(out)


def eds_modulator(g: Graph, k: int) -> frozenset[int] | None:
    """Endpoint set of the 2-approximation, or None for a safe no-instance.

    The endpoints cover every edge, so g minus the modulator is edgeless.
    """
    d = eds_2approx(g)
    if len(d) > 2 * k:
        return None
    return frozenset(v for e in d for v in e)


def twin_eliminate(g: Graph, pd: ProtrusionDecomposition, k: int) -> tuple[Graph, int]:
    """Trim every cluster larger than its neighborhood down to that size.

    Which vertices survive is immaterial for safety; the lowest ids are kept
    for reproducibility.  k is unchanged.
    """
    if pd.t != 1:
        raise ValueError("decomposition invalid")
    parts = set(pd.y0)
    for cl in pd.clusters:
        if parts & cl:
            raise ValueError("decomposition invalid")
        parts |= cl
    if parts != set(g.vertices):
        raise ValueError("decomposition invalid")
    drop: set[int] = set()
    for cl in pd.clusters:
        nbhd = g.neighborhood(cl)
        if not nbhd <= pd.y0:
            raise ValueError("decomposition invalid")
        if len(cl) > len(nbhd):
            keep = sorted(cl)[: len(nbhd)]
            drop |= cl - set(keep)
    return g.without(drop), k


def eds_kernelize(g: Graph, k: int, r: int) -> tuple[Graph, int] | None:
    """Modulator, bag marking at t=1, clusters, twin elimination.

    Returns the reduced instance or None when the approximation already
    certifies a no-instance.  The size guarantee is conditional on the host
    being K_r-topological-minor-free; the reduction itself is always safe.
    """
    x = eds_modulator(g, k)
    if x is None:
        return None
    pd = build_protrusion_decomposition(g, x, r, 1)
    return twin_eliminate(g, pd, k)


def eds_brute_force(g: Graph, k: int) -> bool:
    """Exhaustive decision: is there an edge dominating set of size <= k."""
    edges = g.edges()
    if len(edges) > EDS_BRUTE_EDGE_CAP:
        raise ValueError("graph too large for brute-force edge domination")
    if not edges:
        return True
    for size in range(0, min(k, len(edges)) + 1):
        for pick in itertools.combinations(edges, size):
            covered = {v for e in pick for v in e}
            if all(u in covered or v in covered for u, v in edges):
                return True
    return False
