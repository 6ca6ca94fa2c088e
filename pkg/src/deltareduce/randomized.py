"""Randomized degree-reducing constructions whose expected sizes match
the probabilistic bounds, plus a Monte Carlo harness.

Vertex construction: include each vertex of gv independently with
probability p into S, then add every max-degree vertex whose closed
neighbourhood misses S.  Each max-degree vertex has a closed
neighbourhood of exactly k+1 vertices inside gv, so the expected size is
exactly n*p + t*(1-p)^(k+1).

Edge construction: include each edge of ge independently with
probability p into S, then for every max-degree vertex whose incident
edges all miss S add its lexicographically smallest incident edge.  Each
such vertex has exactly k incident edges, so the expected size is at
most m*p + t*(1-p)^k, with equality when the added edges never coincide
(in particular on star forests).

One PRNG substream per trial, derived from (seed, trial index), keeps
trials order-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import rng
from .exact import (
    EDGE,
    VERTEX,
    ReductionCertificate,
    _certificate_edge,
    _certificate_vertex,
)
from .graphs import Graph, derive_ge, derive_gv, max_degree_set, stats


@dataclass(frozen=True)
class MonteCarloReport:
    kind: str  # "vertex" | "edge"
    trials: int
    p: float
    empirical_mean: float
    empirical_std: float
    std_defined: bool  # False for trials == 1 or zero variance
    expected: float  # n*p + t*(1-p)^(k+1), resp. m*p + t*(1-p)^k
    z_score: float  # 0 when std is undefined
    all_verified: bool


def _check_p(p: float):
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")


def sample_reducing_set(g: Graph, p: float, seed: int) -> ReductionCertificate:
    """One draw of the vertex construction; always a verified certificate."""
    _check_p(p)
    return _sample_vertex(g, p, rng.SplitMix64(seed))


def _sample_vertex(g: Graph, p: float, stream: rng.SplitMix64) -> ReductionCertificate:
    gv, relabel = derive_gv(g)
    inverse = {new: old for old, new in relabel.items()}
    sampled = {v for v in range(gv.vertex_count) if stream.next_float() < p}
    removed = set(sampled)
    for v in sorted(max_degree_set(gv)):
        if v not in sampled and not (gv.neighbors(v) & sampled):
            removed.add(v)
    return _certificate_vertex(g, [inverse[v] for v in removed])


def sample_reducing_edge_set(g: Graph, p: float, seed: int) -> ReductionCertificate:
    """One draw of the edge construction; always a verified certificate."""
    _check_p(p)
    return _sample_edge(g, p, rng.SplitMix64(seed))


def _sample_edge(g: Graph, p: float, stream: rng.SplitMix64) -> ReductionCertificate:
    ge, relabel = derive_ge(g)
    inverse = {new: old for old, new in relabel.items()}
    sampled = {e for e in ge.edges if stream.next_float() < p}
    removed = set(sampled)
    for v in sorted(max_degree_set(ge)):
        incident = sorted((v, w) if v < w else (w, v) for w in ge.neighbors(v))
        if not any(e in sampled for e in incident):
            removed.add(incident[0])
    back = [(inverse[u], inverse[v]) for u, v in removed]
    return _certificate_edge(g, back)


def expected_size(g: Graph, p: float, kind: str) -> float:
    """Closed-form expectation of the construction's size on g."""
    _check_p(p)
    st = stats(g)
    if kind == VERTEX:
        return st.n * p + st.t * (1.0 - p) ** (st.k + 1)
    if kind == EDGE:
        return st.m * p + st.t * (1.0 - p) ** st.k
    raise ValueError(f"unknown kind {kind!r}")


def monte_carlo(
    g: Graph, p: float, trials: int, seed: int, kind: str = VERTEX
) -> MonteCarloReport:
    """Run the construction `trials` times and compare the empirical mean
    size with the closed-form expectation.  Deterministic for a fixed
    seed; every sampled set is verified."""
    _check_p(p)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if kind not in (VERTEX, EDGE):
        raise ValueError(f"unknown kind {kind!r}")
    sample = _sample_vertex if kind == VERTEX else _sample_edge

    sizes = []
    all_ok = True
    for i in range(trials):
        cert = sample(g, p, rng.substream(seed, i))
        all_ok = all_ok and cert.verified
        sizes.append(float(len(cert.removed)))

    mean = math.fsum(sizes) / trials
    var = math.fsum((s - mean) ** 2 for s in sizes) / (trials - 1) if trials > 1 else 0.0
    std = math.sqrt(var)
    std_defined = trials > 1 and std > 0.0
    exp = expected_size(g, p, kind)
    z = (mean - exp) / (std / math.sqrt(trials)) if std_defined else 0.0
    return MonteCarloReport(
        kind=kind,
        trials=trials,
        p=p,
        empirical_mean=mean,
        empirical_std=std,
        std_defined=std_defined,
        expected=exp,
        z_score=z,
        all_verified=all_ok,
    )
