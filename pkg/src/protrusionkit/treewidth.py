"""Tree decompositions: validation, desk-scale exact width, min-fill heuristic."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graphs import Graph

EXACT_CAP = 20


@dataclass(frozen=True)
class TreeDecomposition:
    """Rooted forest of bags; parent[i] == -1 marks a root."""

    bags: tuple[frozenset[int], ...]
    parent: tuple[int, ...]

    def __post_init__(self):
        if len(self.bags) != len(self.parent):
            raise ValueError("bags and parent must align")
        n = len(self.parent)
        for i, p in enumerate(self.parent):
            if p == i or not -1 <= p < n:
                raise ValueError(f"bad parent pointer {p} at bag {i}")
        seen = [0] * n  # 0 unvisited, 1 on path, 2 done
        for i in range(n):
            path = []
            j = i
            while j >= 0 and seen[j] == 0:
                seen[j] = 1
                path.append(j)
                j = self.parent[j]
            if j >= 0 and seen[j] == 1:
                raise ValueError("parent pointers contain a cycle")
            for j in path:
                seen[j] = 2

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def children(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.bags]
        for i, p in enumerate(self.parent):
            if p >= 0:
                out[p].append(i)
        return out

    def roots(self) -> list[int]:
        return [i for i, p in enumerate(self.parent) if p < 0]

    def depths(self) -> list[int]:
        d = [-1] * len(self.bags)
        ch = self.children()
        for r in self.roots():
            stack = [(r, 0)]
            while stack:
                i, di = stack.pop()
                d[i] = di
                stack.extend((c, di + 1) for c in ch[i])
        return d

    def rerooted(self, root: int) -> "TreeDecomposition":
        """Same bags, parent pointers flipped so `root` heads its tree."""
        adj: list[set[int]] = [set() for _ in self.bags]
        for i, p in enumerate(self.parent):
            if p >= 0:
                adj[i].add(p)
                adj[p].add(i)
        parent = list(self.parent)
        seen = {root}
        parent[root] = -1
        stack = [root]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    parent[j] = i
                    stack.append(j)
        return TreeDecomposition(self.bags, tuple(parent))

    def subtree_vertices(self) -> list[frozenset[int]]:
        """Union of bags over each node's subtree."""
        ch = self.children()
        depths = self.depths()
        out: list[frozenset[int]] = [frozenset()] * len(self.bags)
        for i in sorted(range(len(self.bags)), key=lambda i: -depths[i]):
            acc = set(self.bags[i])
            for c in ch[i]:
                acc |= out[c]
            out[i] = frozenset(acc)
        return out

    def to_json(self) -> dict:
        return {"bags": [sorted(b) for b in self.bags],
                "parent": list(self.parent),
                "width": self.width}

    @staticmethod
    def from_json(data: dict) -> "TreeDecomposition":
        return TreeDecomposition(tuple(frozenset(b) for b in data["bags"]),
                                 tuple(data["parent"]))


@dataclass(frozen=True)
class NiceTreeDecomposition(TreeDecomposition):
    """Tree decomposition whose nodes are leaf/introduce/forget/join."""

    kinds: tuple[str, ...] = ()


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    width: int = -1

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_decomposition(g: Graph, td: TreeDecomposition) -> ValidationReport:
    """Check the three decomposition axioms; report every violation found."""
    rep = ValidationReport(width=td.width)
    covered = set()
    for b in td.bags:
        covered |= b
        for v in b:
            if not g.has_vertex(v):
                rep.violations.append(f"bag vertex {v} not in graph")
    for v in g.vertices:
        if v not in covered:
            rep.violations.append(f"vertex {v} uncovered")
    for u, v in g.edges():
        if not any(u in b and v in b for b in td.bags):
            rep.violations.append(f"edge {u}-{v} uncovered")
    adj: list[set[int]] = [set() for _ in td.bags]
    for i, p in enumerate(td.parent):
        if p >= 0:
            adj[i].add(p)
            adj[p].add(i)
    for v in g.vertices:
        nodes = [i for i, b in enumerate(td.bags) if v in b]
        if not nodes:
            continue
        seen = {nodes[0]}
        stack = [nodes[0]]
        node_set = set(nodes)
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j in node_set and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != len(nodes):
            rep.violations.append(f"bags of vertex {v} are not connected")
    return rep


# -- elimination-order machinery --------------------------------------------

def _adj_sets(g: Graph) -> dict[int, set[int]]:
    return {v: set(g.neighbors(v)) for v in g.vertices}


def _eliminate(adj: dict[int, set[int]], v: int) -> None:
    ns = adj.pop(v)
    for a in ns:
        adj[a].discard(v)
    for a, b in itertools.combinations(ns, 2):
        adj[a].add(b)
        adj[b].add(a)


def width_of_order(g: Graph, order: Sequence[int]) -> int:
    adj = _adj_sets(g)
    width = -1
    for v in order:
        width = max(width, len(adj[v]))
        _eliminate(adj, v)
    return width


def min_fill_order(g: Graph) -> list[int]:
    """Min-fill elimination order, ties broken by lowest vertex id."""
    adj = _adj_sets(g)
    order = []
    while adj:
        best = None
        best_fill = None
        for v in sorted(adj):
            ns = adj[v]
            fill = sum(1 for a, b in itertools.combinations(ns, 2) if b not in adj[a])
            if best_fill is None or fill < best_fill:
                best, best_fill = v, fill
                if fill == 0:
                    break
        order.append(best)
        _eliminate(adj, best)
    return order


def decomposition_from_order(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Standard bag-per-vertex construction along an elimination order."""
    if g.n == 0:
        return TreeDecomposition((), ())
    adj = _adj_sets(g)
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    bag_neighbors = []
    for v in order:
        ns = set(adj[v])
        bags.append(frozenset(ns | {v}))
        bag_neighbors.append(ns)
        _eliminate(adj, v)
    parent = []
    for ns in bag_neighbors:
        if ns:
            parent.append(pos[min(ns, key=lambda u: pos[u])])
        else:
            parent.append(-1)
    return TreeDecomposition(tuple(bags), tuple(parent))


def _minor_min_width(g: Graph) -> int:
    """Lower bound: contract a minimum-degree vertex into its least-connected
    neighbor, tracking the largest minimum degree seen."""
    adj = _adj_sets(g)
    lb = 0
    while len(adj) > 1:
        v = min(adj, key=lambda u: (len(adj[u]), u))
        d = len(adj[v])
        lb = max(lb, d)
        if d == 0:
            del adj[v]
            continue
        w = min(adj[v], key=lambda u: (len(adj[u] & adj[v]), u))
        ns = adj.pop(v)
        for a in ns:
            adj[a].discard(v)
        for a in ns:
            if a != w:
                adj[a].add(w)
                adj[w].add(a)
    return lb


def _exact_order(g: Graph, lb: int, ub_order: list[int], ub: int) -> tuple[int, list[int]]:
    """Decide width <= target for growing targets, branching over eliminations.

    The graph left after eliminating a set does not depend on the order
    within the set, so failed states are memoized by the remaining vertices.
    """
    best_order = list(ub_order)

    for target in range(lb, ub):
        failed: set[frozenset[int]] = set()
        found: list[int] | None = None

        def decide(adj: dict[int, set[int]], order: list[int]) -> bool:
            nonlocal found
            if len(adj) <= target + 1:
                found = order + sorted(adj)
                return True
            key = frozenset(adj)
            if key in failed:
                return False
            for v in sorted(adj, key=lambda v: (len(adj[v]), v)):
                ns = adj[v]
                if len(ns) > target:
                    continue
                simplicial = all(b in adj[a] for a, b in itertools.combinations(ns, 2))
                sub = {u: set(s) for u, s in adj.items()}
                _eliminate(sub, v)
                if decide(sub, order + [v]):
                    return True
                if simplicial:
                    break  # eliminating a low-degree simplicial vertex is always safe
            failed.add(key)
            return False

        if decide(_adj_sets(g), []) and found is not None:
            return target, found
    return ub, best_order


def exact_treewidth(g: Graph, cap: int = EXACT_CAP) -> tuple[int, TreeDecomposition]:
    """Minimum width and a witness decomposition, for graphs up to the cap."""
    if g.n > cap:
        raise ValueError("use heuristic_decomposition")
    if g.n == 0:
        return -1, TreeDecomposition((), ())
    order = min_fill_order(g)
    ub = width_of_order(g, order)
    lb = _minor_min_width(g)
    if lb < ub:
        ub, order = _exact_order(g, lb, order, ub)
    td = decomposition_from_order(g, order)
    return ub, td


def heuristic_decomposition(g: Graph) -> TreeDecomposition:
    """Valid decomposition from a min-fill elimination ordering."""
    return decomposition_from_order(g, min_fill_order(g))


def decomposition_within_width(g: Graph, bound: int,
                               exact_cap: int = EXACT_CAP) -> TreeDecomposition | None:
    """A decomposition of width <= bound, or None if the width provably exceeds it.

    Min-fill acts as a cheap accepting certificate; the exact solver settles
    graphs within the cap.  Raises when neither route is conclusive.
    """
    td = heuristic_decomposition(g)
    if td.width <= bound:
        return td
    if g.n <= exact_cap:
        w, td = exact_treewidth(g)
        return td if w <= bound else None
    raise ValueError(f"cannot certify treewidth <= {bound} for {g.n} vertices")


def rooted_component_decompositions(g: Graph, x: Iterable[int], t: int,
                                    verify: bool = True
                                    ) -> list[tuple[frozenset[int], TreeDecomposition]]:
    """Per component of g-x, a rooted decomposition of width <= t-1.

    Decompositions are rerooted at their smallest bag index.  With verify
    enabled, a component that cannot be decomposed within the bound raises.
    """
    rest = g.without(x)
    out = []
    for comp in rest.components():
        gc = rest.induced(comp)
        if verify:
            td = decomposition_within_width(gc, t - 1)
            if td is None:
                raise ValueError("modulator invalid")
        else:
            td = heuristic_decomposition(gc)
            if td.width > t - 1:
                if gc.n > EXACT_CAP:
                    raise ValueError("modulator invalid")
                w, td = exact_treewidth(gc)
                if w > t - 1:
                    raise ValueError("modulator invalid")
        out.append((comp, td.rerooted(0)))
    return out


def make_nice(td: TreeDecomposition, g: Graph | None = None) -> NiceTreeDecomposition:
    """Equivalent nice decomposition built top-down from td.

    Every original bag survives intact; between adjacent original bags the
    construction forgets then introduces one vertex at a time, and nodes with
    several children become a cascade of binary joins.  All bags stay inside
    some original bag, so the width is unchanged.
    """
    if g is not None:
        rep = validate_decomposition(g, td)
        if not rep.ok:
            raise ValueError("decomposition invalid")

    bags: list[frozenset[int]] = []
    parent: list[int] = []
    ch = td.children()

    def add(bag: frozenset[int], par: int) -> int:
        bags.append(bag)
        parent.append(par)
        return len(bags) - 1

    def expand_leaf(node: int) -> None:
        """Introduce chain from the empty leaf up to this node's bag."""
        cur = node
        items = sorted(bags[node])
        bag = bags[node]
        for v in reversed(items):
            bag = bag - {v}
            cur = add(bag, cur)

    def transition(par_node: int, child_idx: int) -> None:
        """Chain from par_node's bag down to the child's bag, then recurse."""
        upper = bags[par_node]
        lower = td.bags[child_idx]
        seq = [lower]
        bag = lower
        for v in sorted(lower - upper):
            bag = bag - {v}
            seq.append(bag)
        for v in sorted(upper - lower):
            bag = bag | {v}
            seq.append(bag)
        cur = par_node
        for b in reversed(seq[:-1]):
            cur = add(b, cur)
        expand(child_idx, cur)

    def expand(idx: int, node: int) -> None:
        """`node` already carries td.bags[idx]; build its children below."""
        kids = ch[idx]
        if not kids:
            expand_leaf(node)
            return
        if len(kids) == 1:
            transition(node, kids[0])
            return
        bag = bags[node]
        cur = node
        remaining = list(kids)
        while len(remaining) > 2:
            side = add(bag, cur)
            transition(side, remaining.pop(0))
            cur = add(bag, cur)
        left = add(bag, cur)
        transition(left, remaining[0])
        right = add(bag, cur)
        transition(right, remaining[1])

    for r in td.roots():
        top = add(td.bags[r], -1)
        expand(r, top)

    children_of: list[list[int]] = [[] for _ in bags]
    for i, p in enumerate(parent):
        if p >= 0:
            children_of[p].append(i)
    kinds = []
    for i, b in enumerate(bags):
        kids = children_of[i]
        if not kids:
            kinds.append("leaf")
        elif len(kids) == 2:
            kinds.append("join")
        else:
            kinds.append("forget" if len(b) < len(bags[kids[0]]) else "introduce")
    return NiceTreeDecomposition(tuple(bags), tuple(parent), tuple(kinds))
