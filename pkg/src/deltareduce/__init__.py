"""Tools for shrinking the maximum degree of a simple graph.

Exact minimum vertex/edge deletion solvers, closed-form upper bounds,
randomized constructions matching the bounds in expectation, and numeric
analysis of the crossover thresholds that decide which bound is better.
"""

__version__ = "0.1.0"

from .graphs import Graph, GraphStats  # noqa: F401
from .exact import ReductionCertificate  # noqa: F401
