"""Plain-text graph format and JSON helpers.

Format: header line `n m`, then m lines `u v` with 0-indexed endpoints; an
optional third column carries the multiplicity in pattern files.  Canonical
serialization relabels vertices to 0..n-1 by order and sorts edges
lexicographically.
"""

from __future__ import annotations

from .graphs import Graph


class GraphParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_graph(text: str, pattern: bool = False) -> Graph:
    lines = text.splitlines()
    header_at = None
    for i, raw in enumerate(lines):
        if raw.strip() and not raw.lstrip().startswith("#"):
            header_at = i
            break
    if header_at is None:
        raise GraphParseError(1, "missing header")
    parts = lines[header_at].split()
    if len(parts) != 2:
        raise GraphParseError(header_at + 1, "header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(header_at + 1, "header must be 'n m'") from None
    if n < 0 or m < 0:
        raise GraphParseError(header_at + 1, "negative counts")
    edges = []
    mult = {}
    seen = 0
    for i in range(header_at + 1, len(lines)):
        raw = lines[i].strip()
        if not raw or raw.startswith("#"):
            continue
        cols = raw.split()
        if len(cols) not in (2, 3):
            raise GraphParseError(i + 1, "edge line must be 'u v' or 'u v mult'")
        try:
            u, v = int(cols[0]), int(cols[1])
            w = int(cols[2]) if len(cols) == 3 else 1
        except ValueError:
            raise GraphParseError(i + 1, "edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(i + 1, f"endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphParseError(i + 1, "self-loop")
        if w > 1 and not pattern:
            raise GraphParseError(i + 1, "multiplicity requires a pattern file")
        edges.append((u, v))
        if w > 1:
            mult[(u, v)] = w
        seen += 1
    if seen != m:
        raise GraphParseError(len(lines), f"expected {m} edges, found {seen}")
    try:
        return Graph(range(n), edges, mult or None, pattern=pattern)
    except ValueError as exc:
        raise GraphParseError(header_at + 1, str(exc)) from None


def serialize_graph(g: Graph) -> str:
    relabel = {v: i for i, v in enumerate(g.vertices)}
    rows = sorted((relabel[u], relabel[v], g.multiplicity(u, v)) for u, v in g.edges())
    out = [f"{g.n} {g.m}"]
    for u, v, w in rows:
        out.append(f"{u} {v} {w}" if w > 1 else f"{u} {v}")
    return "\n".join(out) + "\n"


def load_graph(path: str, pattern: bool = False) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read(), pattern=pattern)


def save_graph(path: str, g: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g))


def parse_vertex_set(text: str) -> frozenset[int]:
    """Whitespace or comma separated vertex ids, comments allowed."""
    ids = []
    for i, raw in enumerate(text.splitlines()):
        s = raw.split("#", 1)[0].replace(",", " ").strip()
        if not s:
            continue
        for tok in s.split():
            try:
                ids.append(int(tok))
            except ValueError:
                raise GraphParseError(i + 1, f"bad vertex id {tok!r}") from None
    return frozenset(ids)


def load_vertex_set(path: str) -> frozenset[int]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_vertex_set(fh.read())
