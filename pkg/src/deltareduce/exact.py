"""Exact minimum degree-reducing vertex/edge sets by search, with
verified certificates.

A vertex set R reduces the maximum degree iff the degree of the graph
minus R is smaller, or R is the whole vertex set; an edge set L likewise,
or L = E = empty.  For a graph with at least one edge this is equivalent
to: every max-degree vertex loses itself or a neighbour (R intersects
each closed neighbourhood), resp. loses an incident edge.  The
branch-and-bound search uses that covering form; the plain enumeration
oracle below sticks to the bare definition so the two routes stay
independent.

Search order is iterative deepening on the solution size with
lexicographic subsets inside a size, so the first solution found is the
lexicographically smallest optimum and fixtures are reproducible.  The
budget counts search nodes (candidate partial sets); exhausting it yields
an explicit inconclusive result that still carries sound lower and upper
bounds, never a wrong value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, derive_ge, derive_gv, max_degree, max_degree_set

DEFAULT_BUDGET = 10**8

VERTEX = "vertex"
EDGE = "edge"


@dataclass(frozen=True)
class ReductionCertificate:
    kind: str  # "vertex" | "edge"
    removed: tuple  # sorted vertex ids, or sorted (u, v) edges
    resulting_max_degree: int
    verified: bool


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact search.

    Conclusive: value is the optimum and lower_bound == upper_bound == value.
    Inconclusive (budget exhausted): value is None, lower_bound is the
    smallest size not yet excluded, and certificate backs upper_bound.
    """

    kind: str
    value: int | None
    certificate: ReductionCertificate | None
    conclusive: bool
    lower_bound: int
    upper_bound: int
    nodes: int


class SearchBudgetExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# definitional checks


def _max_degree_without_vertices(g: Graph, removed) -> int:
    best = 0
    for v in range(g.vertex_count):
        if v in removed:
            continue
        d = 0
        for w in g.neighbors(v):
            if w not in removed:
                d += 1
        if d > best:
            best = d
    return best


def _max_degree_without_edges(g: Graph, removed_edges) -> int:
    loss: dict[int, int] = {}
    for u, v in removed_edges:
        loss[u] = loss.get(u, 0) + 1
        loss[v] = loss.get(v, 0) + 1
    best = 0
    for v in range(g.vertex_count):
        d = g.degree(v) - loss.get(v, 0)
        if d > best:
            best = d
    return best


def is_reducing_set(g: Graph, vertices) -> bool:
    """True iff removing the vertices lowers the maximum degree (or the set
    is all of V)."""
    removed = set(vertices)
    for v in removed:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} out of range")
    if len(removed) == g.vertex_count:
        return True
    return _max_degree_without_vertices(g, removed) < max_degree(g)


def is_reducing_edge_set(g: Graph, edges) -> bool:
    """True iff removing the edges lowers the maximum degree (or the graph
    is edgeless and the set empty)."""
    removed = {(u, v) if u < v else (v, u) for u, v in edges}
    edge_set = set(g.edges)
    for e in removed:
        if e not in edge_set:
            raise ValueError(f"not an edge: {e}")
    if not edge_set:
        return len(removed) == 0
    if not removed:
        return False
    return _max_degree_without_edges(g, removed) < max_degree(g)


# ---------------------------------------------------------------------------
# minimum hitting-set search
#
# Requirements and element coverage are bitmasks.  Pruning rules, all of
# which only discard nodes with no feasible completion at the current
# deepening size (so lexicographic first-found is preserved):
#   * some uncovered requirement is disjoint from the remaining pool;
#   * chosen + (greedy count of uncovered requirements with pairwise
#     disjoint remaining element sets) exceeds the size;
#   * chosen + ceil(#uncovered / best remaining per-element coverage)
#     exceeds the size;
#   * an element covering nothing new is never taken (at the minimum
#     size every optimal set, in sorted order, covers something new at
#     each step).


class _HittingSearch:
    def __init__(self, pool_size: int, requirements: list[frozenset[int]], budget: int):
        self.p = pool_size
        self.nreq = len(requirements)
        self.full = (1 << self.nreq) - 1
        self.cov = [0] * pool_size  # element -> requirement mask
        self.req_elems = [0] * self.nreq  # requirement -> element mask
        for i, req in enumerate(requirements):
            for j in req:
                self.cov[j] |= 1 << i
                self.req_elems[i] |= 1 << j
        # OR of cov[j:] for the disjoint-from-remaining prune
        self.suffix_cov = [0] * (pool_size + 1)
        for j in range(pool_size - 1, -1, -1):
            self.suffix_cov[j] = self.suffix_cov[j + 1] | self.cov[j]
        self.budget = budget
        self.nodes = 0

    def _lower_bound(self, uncovered: int, rem_mask: int) -> int:
        used = 0
        disjoint = 0
        count = 0
        u = uncovered
        while u:
            i = (u & -u).bit_length() - 1
            u &= u - 1
            count += 1
            elems = self.req_elems[i] & rem_mask
            if elems & used == 0:
                disjoint += 1
                used |= elems
        best_cov = 1
        m = rem_mask
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            c = (self.cov[j] & uncovered).bit_count()
            if c > best_cov:
                best_cov = c
        return max(disjoint, -(-count // best_cov))

    def _descend(self, start: int, chosen: list[int], covered: int, size: int):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded
        uncovered = self.full & ~covered
        if uncovered == 0:
            return list(chosen)
        if len(chosen) == size:
            return None
        if uncovered & ~self.suffix_cov[start]:
            return None
        rem_mask = ((1 << self.p) - 1) >> start << start
        if len(chosen) + self._lower_bound(uncovered, rem_mask) > size:
            return None
        for j in range(start, self.p):
            if self.cov[j] & uncovered == 0:
                continue
            chosen.append(j)
            found = self._descend(j + 1, chosen, covered | self.cov[j], size)
            chosen.pop()
            if found is not None:
                return found
        return None

    def solve(self, max_size: int):
        """Smallest hitting set up to max_size, lexicographically first."""
        for size in range(max_size + 1):
            found = self._descend(0, [], 0, size)
            if found is not None:
                return found, size
        return None, max_size


def _search_cover(pool_size, requirements, max_size, budget):
    """Run the search; returns (chosen, nodes, exhausted_at_size).

    chosen is None with exhausted_at_size set when the budget ran out; all
    sizes below exhausted_at_size were fully excluded by then.
    """
    search = _HittingSearch(pool_size, requirements, budget)
    size = 0
    try:
        for size in range(max_size + 1):
            found = search._descend(0, [], 0, size)
            if found is not None:
                return found, search.nodes, None
        return None, search.nodes, None
    except SearchBudgetExceeded:
        return None, search.nodes, size


# ---------------------------------------------------------------------------
# exact lambda / lambda_e


def _certificate_vertex(g: Graph, removed) -> ReductionCertificate:
    removed = tuple(sorted(removed))
    ok = is_reducing_set(g, removed)
    return ReductionCertificate(
        kind=VERTEX,
        removed=removed,
        resulting_max_degree=_max_degree_without_vertices(g, set(removed)),
        verified=ok,
    )


def _certificate_edge(g: Graph, removed) -> ReductionCertificate:
    removed = tuple(sorted((u, v) if u < v else (v, u) for u, v in removed))
    ok = is_reducing_edge_set(g, removed)
    return ReductionCertificate(
        kind=EDGE,
        removed=removed,
        resulting_max_degree=_max_degree_without_edges(g, removed),
        verified=ok,
    )


def lambda_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Exact minimum size of a degree-reducing vertex set, with certificate.

    The search runs inside the subgraph induced by the closed
    neighbourhood of the max-degree set, which preserves the optimum, and
    maps the certificate back to g's labels.
    """
    if g.vertex_count == 0:
        raise ValueError("no vertices")
    if max_degree(g) == 0:
        cert = _certificate_vertex(g, range(g.vertex_count))
        n = g.vertex_count
        return ExactResult(VERTEX, n, cert, True, n, n, 0)

    gv, relabel = derive_gv(g)
    inverse = {new: old for old, new in relabel.items()}
    requirements = [
        frozenset(gv.neighbors(v) | {v}) for v in sorted(max_degree_set(gv))
    ]
    t = len(requirements)
    chosen, nodes, exhausted_at = _search_cover(gv.vertex_count, requirements, t, budget)
    if chosen is None:
        fallback = _certificate_vertex(g, [inverse[v] for v in sorted(max_degree_set(gv))])
        return ExactResult(VERTEX, None, fallback, False, exhausted_at, t, nodes)
    removed = [inverse[j] for j in chosen]
    cert = _certificate_vertex(g, removed)
    return ExactResult(VERTEX, len(removed), cert, True, len(removed), len(removed), nodes)


def lambda_e_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Exact minimum size of a degree-reducing edge set, with certificate.

    Searches subsets of the edges incident to max-degree vertices, which
    preserves the optimum.
    """
    if g.vertex_count == 0:
        raise ValueError("no vertices")
    if max_degree(g) == 0:
        cert = _certificate_edge(g, [])
        return ExactResult(EDGE, 0, cert, True, 0, 0, 0)

    ge, relabel = derive_ge(g)
    inverse = {new: old for old, new in relabel.items()}
    pool = ge.edges  # canonical order; relabelling is monotone
    pos_at = {e: i for i, e in enumerate(pool)}
    requirements = []
    for v in sorted(max_degree_set(ge)):
        incident = [pos_at[(v, w) if v < w else (w, v)] for w in ge.neighbors(v)]
        requirements.append(frozenset(incident))
    t = len(requirements)
    chosen, nodes, exhausted_at = _search_cover(len(pool), requirements, t, budget)
    if chosen is None:
        one_per = {min(req) for req in requirements}
        fallback = _certificate_edge(
            g, [_edge_back(pool[j], inverse) for j in sorted(one_per)]
        )
        return ExactResult(
            EDGE, None, fallback, False, exhausted_at, len(fallback.removed), nodes
        )
    removed = [_edge_back(pool[j], inverse) for j in chosen]
    cert = _certificate_edge(g, removed)
    return ExactResult(EDGE, len(removed), cert, True, len(removed), len(removed), nodes)


def _edge_back(edge, inverse):
    u, v = inverse[edge[0]], inverse[edge[1]]
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# plain enumeration oracle (cross-check; definition-only feasibility)


def lambda_plain(g: Graph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Minimum degree-reducing vertex set by plain subset enumeration over
    all vertices of g, testing the bare definition.  Oracle for the
    branch-and-bound path; intended for small graphs only."""
    from itertools import combinations

    if g.vertex_count == 0:
        raise ValueError("no vertices")
    if max_degree(g) == 0:
        cert = _certificate_vertex(g, range(g.vertex_count))
        n = g.vertex_count
        return ExactResult(VERTEX, n, cert, True, n, n, 0)
    tested = 0
    for size in range(g.vertex_count + 1):
        for cand in combinations(range(g.vertex_count), size):
            tested += 1
            if tested > budget:
                fallback = _certificate_vertex(g, sorted(max_degree_set(g)))
                return ExactResult(
                    VERTEX, None, fallback, False, size, len(fallback.removed), tested
                )
            if is_reducing_set(g, cand):
                cert = _certificate_vertex(g, cand)
                return ExactResult(VERTEX, size, cert, True, size, size, tested)
    raise AssertionError("unreachable: V(G) always reduces")


def lambda_e_plain(g: Graph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Minimum degree-reducing edge set by plain subset enumeration over
    all edges of g, testing the bare definition."""
    from itertools import combinations

    if g.vertex_count == 0:
        raise ValueError("no vertices")
    if max_degree(g) == 0:
        cert = _certificate_edge(g, [])
        return ExactResult(EDGE, 0, cert, True, 0, 0, 0)
    tested = 0
    for size in range(g.edge_count + 1):
        for cand in combinations(g.edges, size):
            tested += 1
            if tested > budget:
                t_set = max_degree_set(g)
                one_per = {min((min(v, w), max(v, w)) for w in g.neighbors(v)) for v in t_set}
                fallback = _certificate_edge(g, one_per)
                return ExactResult(
                    EDGE, None, fallback, False, size, len(fallback.removed), tested
                )
            if is_reducing_edge_set(g, cand):
                cert = _certificate_edge(g, cand)
                return ExactResult(EDGE, size, cert, True, size, size, tested)
    raise AssertionError("unreachable: E(G) always reduces")
