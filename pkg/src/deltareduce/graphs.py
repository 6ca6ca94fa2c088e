"""Simple undirected graphs, degree machinery, and the derived subgraphs
induced by the max-degree vertices.

A graph lives on vertices 0..vertex_count-1 with a canonical edge list
(sorted pairs, lexicographic order).  From a graph g we derive

  * gv: the subgraph induced by the closed neighbourhood of the set of
    max-degree vertices, and
  * ge: the graph on the same vertex set whose edges are exactly the
    edges incident to a max-degree vertex.

Both keep the maximum degree, the max-degree set, and (gv) the minimum
size of a degree-reducing vertex set / (ge) of a degree-reducing edge
set, so the exact solvers can work on them instead of g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rng import SplitMix64

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph: no loops, no multi-edges, indices < vertex_count."""

    __slots__ = ("vertex_count", "edges", "_adj", "_deg")

    def __init__(self, vertex_count: int, edges=()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            canon.add((u, v) if u < v else (v, u))
        self.vertex_count = vertex_count
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        adj = [set() for _ in range(vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._deg = tuple(len(s) for s in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._deg[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u] if 0 <= u < self.vertex_count else False

    def remove_vertices(self, removed) -> "Graph":
        """Subgraph after deleting the given vertices (labels unchanged except
        survivors are compacted to 0..n'-1 in increasing old-label order)."""
        removed = set(removed)
        keep = [v for v in range(self.vertex_count) if v not in removed]
        relabel = {v: i for i, v in enumerate(keep)}
        new_edges = [
            (relabel[u], relabel[v])
            for u, v in self.edges
            if u not in removed and v not in removed
        ]
        return Graph(len(keep), new_edges)

    def remove_edges(self, removed) -> "Graph":
        removed = {(u, v) if u < v else (v, u) for u, v in removed}
        for e in removed:
            if e not in self._edge_set():
                raise ValueError(f"not an edge: {e}")
        return Graph(self.vertex_count, [e for e in self.edges if e not in removed])

    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count}, {list(self.edges)})"


@dataclass(frozen=True)
class GraphStats:
    """The tuple (k, t, n, m): max degree, number of max-degree vertices,
    vertex count of gv, edge count of ge."""

    k: int
    t: int
    n: int
    m: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be >= 1 for a non-empty graph")
        if self.n > (self.k + 1) * self.t:
            raise ValueError(f"n={self.n} exceeds (k+1)t={(self.k + 1) * self.t}")
        if self.m > self.k * self.t:
            raise ValueError(f"m={self.m} exceeds kt={self.k * self.t}")
        if 2 * self.m < self.k * self.t:
            raise ValueError(f"2m={2 * self.m} below kt={self.k * self.t}")


def max_degree(g: Graph) -> int:
    """Maximum degree; 0 for the empty graph by convention."""
    return max(g._deg) if g.vertex_count else 0


def max_degree_set(g: Graph) -> frozenset[int]:
    """All vertices attaining the maximum degree."""
    if g.vertex_count == 0:
        raise ValueError("no vertices")
    k = max_degree(g)
    return frozenset(v for v in range(g.vertex_count) if g.degree(v) == k)


def closed_neighborhood(g: Graph, vertices) -> frozenset[int]:
    """Union of N[v] over the given vertices; empty input gives the empty set."""
    out: set[int] = set()
    for v in vertices:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} out of range")
        out.add(v)
        out |= g.neighbors(v)
    return frozenset(out)


def _induce(g: Graph, kept: list[int], edges) -> tuple[Graph, dict[int, int]]:
    relabel = {v: i for i, v in enumerate(kept)}
    sub = Graph(len(kept), [(relabel[u], relabel[v]) for u, v in edges])
    return sub, relabel


def derive_gv(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by N[M(g)], plus the old->new vertex map."""
    if g.vertex_count == 0:
        raise ValueError("no vertices")
    keep = sorted(closed_neighborhood(g, max_degree_set(g)))
    keep_set = set(keep)
    edges = [e for e in g.edges if e[0] in keep_set and e[1] in keep_set]
    return _induce(g, keep, edges)


def derive_ge(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Graph on N[M(g)] whose edges are exactly those incident to M(g)."""
    if g.vertex_count == 0:
        raise ValueError("no vertices")
    m_set = max_degree_set(g)
    keep = sorted(closed_neighborhood(g, m_set))
    edges = [e for e in g.edges if e[0] in m_set or e[1] in m_set]
    return _induce(g, keep, edges)


def stats(g: Graph) -> GraphStats:
    if g.vertex_count == 0:
        raise ValueError("no vertices")
    gv, _ = derive_gv(g)
    ge, _ = derive_ge(g)
    return GraphStats(
        k=max_degree(g),
        t=len(max_degree_set(g)),
        n=gv.vertex_count,
        m=ge.edge_count,
    )


# ---------------------------------------------------------------------------
# generators


def gen_star_forest(k: int, t: int) -> Graph:
    """t vertex-disjoint stars, each a centre joined to k leaves.

    This family attains every upper bound: stats are (k, t, (k+1)t, kt)
    and both optimal deletion sizes equal t.
    """
    if k < 1 or t < 1:
        raise ValueError("need k >= 1 and t >= 1")
    edges = []
    for i in range(t):
        c = i * (k + 1)
        edges.extend((c, c + j) for j in range(1, k + 1))
    return Graph((k + 1) * t, edges)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair (u, v), u < v in lexicographic order, is an edge
    with probability p.  Deterministic for a fixed seed (SplitMix64)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_float() < p:
                edges.append((u, v))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# edge-list text format


class EdgeListParseError(ValueError):
    """Parse failure; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    First non-comment line: vertex count.  Each further non-comment line:
    "u v".  Lines starting with '#' are ignored.  Rejects self-loops,
    duplicate edges and out-of-range indices, reporting the line number.
    """
    n: int | None = None
    seen: set[Edge] = set()
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise EdgeListParseError(lineno, f"expected vertex count, got {line!r}")
            if n < 0:
                raise EdgeListParseError(lineno, "vertex count must be >= 0")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer endpoint in {line!r}")
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(lineno, f"vertex index out of range in {line!r}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise EdgeListParseError(lineno, f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    if n is None:
        raise EdgeListParseError(1, "empty document: missing vertex count")
    return Graph(n, edges)


def serialize(g: Graph) -> str:
    """Canonical text form: vertex count, then sorted edges, '\\n' endings."""
    lines = [str(g.vertex_count)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
