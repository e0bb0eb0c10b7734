"""Seed-driven instance generators for tests and the benchmark harness."""

from __future__ import annotations

import itertools
import random

from .graphs import Graph


def tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph(range(n), edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform m-edge graph on n vertices (m capped at the maximum)."""
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    return Graph(range(n), pairs[: min(m, len(pairs))])


def bounded_degree(n: int, seed: int, max_degree: int = 3) -> Graph:
    rng = random.Random(seed)
    deg = {v: 0 for v in range(n)}
    edges = []
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if deg[u] < max_degree and deg[v] < max_degree and rng.random() < 0.5:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(range(n), edges)


def planar_triangulation_sample(n: int, seed: int) -> Graph:
    """Stacked triangulation: repeatedly split a random face with a new vertex."""
    if n < 3:
        raise ValueError("triangulation needs at least 3 vertices")
    rng = random.Random(seed)
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges |= {(a, v), (b, v), (c, v)}
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    return Graph(range(n), sorted(edges))


def planted_fvs(n: int, k: int, seed: int) -> tuple[Graph, frozenset[int]]:
    """Graph whose last k vertices form a planted feedback vertex set."""
    rng = random.Random(seed)
    base = n - k
    if base < 1:
        raise ValueError("need at least one non-planted vertex")
    g = tree(base, seed)
    edges = list(g.edges())
    for i in range(base, n):
        targets = rng.sample(range(base), k=min(base, rng.randint(1, 3)))
        edges.extend((t, i) for t in targets)
        for j in range(base, i):
            if rng.random() < 0.3:
                edges.append((j, i))
    return Graph(range(n), edges), frozenset(range(base, n))


def series_parallel(n: int, seed: int, drop: float = 0.25) -> Graph:
    """Random 2-tree with a fraction of edges dropped; K4-minor-free."""
    if n < 2:
        return Graph(range(n))
    rng = random.Random(seed)
    edges = [(0, 1)]
    for v in range(2, n):
        u, w = edges[rng.randrange(len(edges))]
        edges.append((u, v))
        edges.append((w, v))
    kept = [e for e in edges if rng.random() >= drop]
    return Graph(range(n), set(kept))


def modulator_instance(n_rest: int, x_size: int, t: int, seed: int
                       ) -> tuple[Graph, frozenset[int]]:
    """Random instance with a planted t-treewidth-modulator.

    The remainder is edgeless (t=1), a forest (t=2) or a 2-tree (t>=3), all
    chordal so the min-fill certificate stays tight; the modulator vertices
    get random edges everywhere.
    """
    rng = random.Random(seed)
    if t == 1:
        rest_edges: list[tuple[int, int]] = []
    elif t == 2:
        rest_edges = [] if n_rest < 2 else [(rng.randrange(i), i) for i in range(1, n_rest)
                                            if rng.random() < 0.85]
    else:
        rest_edges = [] if n_rest < 2 else [(0, 1)]
        for v in range(2, n_rest):
            if rest_edges:
                u, w = rest_edges[rng.randrange(len(rest_edges))]
                rest_edges.append((u, v))
                rest_edges.append((w, v))
            else:
                rest_edges.append((0, v))
    x = list(range(n_rest, n_rest + x_size))
    edges = set(rest_edges)
    for xv in x:
        for u in range(n_rest):
            if rng.random() < min(0.6, 4.0 / max(1, n_rest)):
                edges.add((u, xv))
        for xu in x:
            if xu < xv and rng.random() < 0.3:
                edges.add((xu, xv))
    return Graph(range(n_rest + x_size), sorted(edges)), frozenset(x)


def planted_disjoint_fvs(n_rest: int, k: int, seed: int
                         ) -> tuple[Graph, frozenset[int], frozenset[int]]:
    """Yes-instance of the disjoint feedback vertex set problem.

    Returns (g, x, planted_alternative): g - x is a forest, and deleting the
    planted alternative (disjoint from x, smaller than x) also leaves a
    forest.  Every x-vertex has exactly two forest neighbors, one of them an
    anchor; all cycles through x pass through an anchor.
    """
    rng = random.Random(seed)
    if k < 2 or n_rest < k + 2:
        raise ValueError("instance too small to plant")
    forest = tree(n_rest, seed)
    edges = list(forest.edges())
    anchors = rng.sample(range(n_rest), k - 1)
    x = list(range(n_rest, n_rest + k))
    for i, xv in enumerate(x):
        anchor = anchors[i % len(anchors)]
        other = rng.randrange(n_rest)
        while other == anchor:
            other = rng.randrange(n_rest)
        edges.append((anchor, xv))
        edges.append((other, xv))
    return Graph(range(n_rest + k), edges), frozenset(x), frozenset(anchors)
