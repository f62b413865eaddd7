"""Independent set to weighted homomorphism onto the plain 4-cycle: a bare
grid whose information lives entirely in the edge weights."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DialectError
from ..geometry import SegmentArrangement
from ..graph import Graph
from ..targets import c4
from ..weights import NEG_INF, WeightModel
from .chains import F, hseg, vseg
from .output import PROBLEM_WHOM, ReductionOutput

# C4 vertices a=0, b=1, c=2, d=3 around the cycle
_AB = (0, 1)
_BC = (1, 2)
_CD = (2, 3)
_DA = (0, 3)


def is_to_whom_c4(g: Graph, k: int) -> ReductionOutput:
    """n horizontal plus n vertical disjoint parallel segments (a complete
    bipartite instance).  Diagonal grid edges may only carry the ab/cd pairs;
    edges of g forbid ab on both their crossings.  alpha(g) >= k iff some
    homomorphism has weight >= 2k.
    """
    n = g.n
    if n == 0:
        raise DialectError("need at least one vertex")
    lo, hi = F(0), F(4 * n + 4)
    segments = [hseg(F(4 * i), (lo, hi)) for i in range(1, n + 1)]
    segments += [vseg(F(4 * j), (lo, hi)) for j in range(1, n + 1)]
    labels = [f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, n + 1)]
    edges = [(i, n + j) for i in range(n) for j in range(n)]
    instance = Graph(2 * n, edges, labels)

    vertex = {}
    for v in range(2 * n):
        vertex[(v, 0)] = 1
        vertex[(v, 1)] = 1
    edge_w: dict = {}
    for i in range(n):
        e = (i, n + i)
        edge_w[(e, _BC)] = NEG_INF
        edge_w[(e, _DA)] = NEG_INF
    for u, v in g.sorted_edges():
        for e in ((u, n + v), (v, n + u)):
            edge_w[(e, _AB)] = NEG_INF
    w = WeightModel(vertex, edge_w)
    return ReductionOutput(
        instance, c4(), w, None, 2 * k, PROBLEM_WHOM,
        arrangement=SegmentArrangement(segments, labels),
        claimed_slope_count=2,
        notes="bare grid; the reduction lives in the edge weights",
    )
