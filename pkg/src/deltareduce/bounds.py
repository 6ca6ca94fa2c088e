"""Closed-form upper bounds on the minimum degree-reducing vertex set
(size lambda) and edge set (size lambda_e), and their comparison.

For parameters k (max degree), t (number of max-degree vertices),
n (vertices of gv) and m (edges of ge):

  vertex side:  b1 = (n + (k-1)t) / (2k)
                b2 = n (1 - k/(k+1) * (n/((k+1)t))^(1/k))
                ln-bound = (n ln(k+1) + t) / (k+1)
  edge side:    b1 = (m + (k-1)t) / (2k-1)
                b2 = m (1 - (k-1)/k * (m/(kt))^(1/(k-1)))        (k >= 2)

b2 on each side is the minimum over p of the expected size of the
randomized construction, u(p) = np + t(1-p)^(k+1) on the vertex side and
u(p) = mp + t(1-p)^k on the edge side; the minimizers are closed-form.

"graph" mode enforces the ranges realizable by an actual graph
(t <= n <= (k+1)t, kt/2 <= m <= kt); "abstract" mode only keeps the
parameters in the bounds' mathematical domain, which is needed when the
comparison coordinate x = kt/m exceeds 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Verdicts for a bound comparison.
B1_SMALLER = "B1Smaller"
B2_SMALLER = "B2Smaller"
EQUAL = "Equal"
B2_UNDEFINED = "B2Undefined"

GRAPH_MODE = "graph"
ABSTRACT_MODE = "abstract"

# Inputs are capped so every bound value stays below ~1e9 and the absolute
# comparison tolerance stays meaningful.
_CAP = 10**9
_TOL = 1e-12


@dataclass(frozen=True)
class BoundReport:
    """Both bound values for one parameter tuple plus which is smaller.

    b2, p_star and u_at_p_star are None exactly when the second bound's
    precondition fails (edge side with k = 1); ln_bound exists only on
    the vertex side.
    """

    kind: str  # "vertex" | "edge"
    mode: str  # "graph" | "abstract"
    b1: float
    b2: float | None
    ln_bound: float | None
    p_star: float | None
    u_at_p_star: float | None
    verdict: str


def _check_int(name: str, value: int, lo: int = 1):
    if not isinstance(value, int):
        raise TypeError(f"{name} must be an integer")
    if value < lo:
        raise ValueError(f"{name} must be >= {lo}, got {value}")
    if value > _CAP:
        raise ValueError(f"{name} exceeds the {_CAP} input cap")


def check_vertex_params(k: int, t: int, n: int, mode: str = GRAPH_MODE):
    """Validate (k, t, n); graph mode additionally requires t <= n."""
    _check_int("k", k)
    _check_int("t", t)
    _check_int("n", n)
    if mode not in (GRAPH_MODE, ABSTRACT_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    if n > (k + 1) * t:
        raise ValueError(f"n={n} exceeds (k+1)t={(k + 1) * t}")
    if mode == GRAPH_MODE and n < t:
        raise ValueError(f"graph-mode requires t <= n, got t={t}, n={n}")


def check_edge_params(k: int, t: int, m: int, mode: str = GRAPH_MODE):
    """Validate (k, t, m); graph mode additionally requires 2m >= kt."""
    _check_int("k", k)
    _check_int("t", t)
    _check_int("m", m)
    if mode not in (GRAPH_MODE, ABSTRACT_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    if m > k * t:
        raise ValueError(f"m={m} exceeds kt={k * t}")
    if mode == GRAPH_MODE and 2 * m < k * t:
        raise ValueError(f"graph-mode requires 2m >= kt, got m={m}, kt={k * t}")


def _root(x: float, k: int) -> float:
    """x**(1/k) via exp(log(x)/k), exact at x in {0, 1}."""
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    return math.exp(math.log(x) / k)


# ---------------------------------------------------------------------------
# vertex side


def bound_v1(k: int, t: int, n: int) -> float:
    if k == 0:
        raise ValueError("no bound for edgeless graphs")
    _check_int("k", k)
    _check_int("t", t)
    _check_int("n", n)
    return (n + (k - 1) * t) / (2 * k)


def bound_v2(k: int, t: int, n: int) -> float:
    if k == 0:
        raise ValueError("no bound for edgeless graphs")
    check_vertex_params(k, t, n, ABSTRACT_MODE)
    ratio = n / ((k + 1) * t)
    return n * (1.0 - (k / (k + 1)) * _root(ratio, k))


def bound_v_ln(k: int, t: int, n: int) -> float:
    if k == 0:
        raise ValueError("no bound for edgeless graphs")
    _check_int("k", k)
    _check_int("t", t)
    _check_int("n", n)
    return (n * math.log(k + 1) + t) / (k + 1)


def u_vertex(p: float, k: int, t: int, n: int) -> float:
    """Expected size np + t(1-p)^(k+1) of the sampled vertex construction."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    return n * p + t * (1.0 - p) ** (k + 1)


def p_star_vertex(k: int, t: int, n: int) -> float:
    """Minimizer of u_vertex; lies in [0, 1] because n <= (k+1)t."""
    check_vertex_params(k, t, n, ABSTRACT_MODE)
    return 1.0 - _root(n / ((k + 1) * t), k)


# ---------------------------------------------------------------------------
# edge side


def bound_e1(k: int, t: int, m: int) -> float:
    if k == 0:
        raise ValueError("no bound for edgeless graphs")
    _check_int("k", k)
    _check_int("t", t)
    _check_int("m", m)
    return (m + (k - 1) * t) / (2 * k - 1)


def bound_e2(k: int, t: int, m: int) -> float:
    if k < 2:
        raise ValueError("second edge bound requires k >= 2")
    check_edge_params(k, t, m, ABSTRACT_MODE)
    ratio = m / (k * t)
    return m * (1.0 - ((k - 1) / k) * _root(ratio, k - 1))


def u_edge(p: float, k: int, t: int, m: int) -> float:
    """Expected size mp + t(1-p)^k of the sampled edge construction."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    return m * p + t * (1.0 - p) ** k


def p_star_edge(k: int, t: int, m: int) -> float:
    if k < 2:
        raise ValueError("second edge bound requires k >= 2")
    check_edge_params(k, t, m, ABSTRACT_MODE)
    return 1.0 - _root(m / (k * t), k - 1)


def k2_edge_identity(t: int, m: int) -> float:
    """Closed form of b2 - b1 when k = 2: (2t-m)(3m-2t)/(12t)."""
    _check_int("t", t)
    _check_int("m", m)
    return (2 * t - m) * (3 * m - 2 * t) / (12 * t)


# ---------------------------------------------------------------------------
# comparison


def _verdict(b1: float, b2: float) -> str:
    tol = _TOL * max(1.0, abs(b1), abs(b2))
    if abs(b1 - b2) <= tol:
        return EQUAL
    return B1_SMALLER if b1 < b2 else B2_SMALLER


def compare_vertex(k: int, t: int, n: int, mode: str = GRAPH_MODE) -> BoundReport:
    check_vertex_params(k, t, n, mode)
    b1 = bound_v1(k, t, n)
    b2 = bound_v2(k, t, n)
    ps = p_star_vertex(k, t, n)
    return BoundReport(
        kind="vertex",
        mode=mode,
        b1=b1,
        b2=b2,
        ln_bound=bound_v_ln(k, t, n),
        p_star=ps,
        u_at_p_star=u_vertex(ps, k, t, n),
        verdict=_verdict(b1, b2),
    )


def compare_edge(k: int, t: int, m: int, mode: str = GRAPH_MODE) -> BoundReport:
    check_edge_params(k, t, m, mode)
    b1 = bound_e1(k, t, m)
    if k == 1:
        return BoundReport(
            kind="edge", mode=mode, b1=b1, b2=None, ln_bound=None,
            p_star=None, u_at_p_star=None, verdict=B2_UNDEFINED,
        )
    b2 = bound_e2(k, t, m)
    ps = p_star_edge(k, t, m)
    return BoundReport(
        kind="edge",
        mode=mode,
        b1=b1,
        b2=b2,
        ln_bound=None,
        p_star=ps,
        u_at_p_star=u_edge(ps, k, t, m),
        verdict=_verdict(b1, b2),
    )


# ---------------------------------------------------------------------------
# exact-rational path
#
# b1 on both sides is rational for integer inputs.  b2 is rational exactly
# when the inner ratio has a rational k-th (resp. (k-1)-th) root, which
# covers the attainment family (ratio 1) and the whole k = 2 edge side;
# these are the cases the equality and identity claims are about.


def _nth_root_exact(value: int, k: int) -> int | None:
    if value < 0:
        return None
    r = round(value ** (1.0 / k)) if value else 0
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == value:
            return cand
    return None


def _frac_nth_root(q: Fraction, k: int) -> Fraction | None:
    num = _nth_root_exact(q.numerator, k)
    den = _nth_root_exact(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def bound_v1_frac(k: int, t: int, n: int) -> Fraction:
    if k < 1:
        raise ValueError("no bound for edgeless graphs")
    return Fraction(n + (k - 1) * t, 2 * k)


def bound_e1_frac(k: int, t: int, m: int) -> Fraction:
    if k < 1:
        raise ValueError("no bound for edgeless graphs")
    return Fraction(m + (k - 1) * t, 2 * k - 1)


def bound_v2_frac(k: int, t: int, n: int) -> Fraction:
    """Exact b2 (vertex); raises if (n/((k+1)t))^(1/k) is irrational."""
    check_vertex_params(k, t, n, ABSTRACT_MODE)
    root = _frac_nth_root(Fraction(n, (k + 1) * t), k)
    if root is None:
        raise ValueError("inner root is irrational; no exact value")
    return n * (1 - Fraction(k, k + 1) * root)


def bound_e2_frac(k: int, t: int, m: int) -> Fraction:
    """Exact b2 (edge); always works at k = 2 and on the attainment family."""
    if k < 2:
        raise ValueError("second edge bound requires k >= 2")
    check_edge_params(k, t, m, ABSTRACT_MODE)
    root = _frac_nth_root(Fraction(m, k * t), k - 1)
    if root is None:
        raise ValueError("inner root is irrational; no exact value")
    return m * (1 - Fraction(k - 1, k) * root)


def k2_edge_identity_frac(t: int, m: int) -> Fraction:
    if t < 1:
        raise ValueError("t must be >= 1")
    return Fraction((2 * t - m) * (3 * m - 2 * t), 12 * t)
