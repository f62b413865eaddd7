"""Independent set to weighted homomorphism onto the looped-triangle target,
realized by an axis-parallel segment grid with seven-segment vertex gadgets."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DialectError
from ..geometry import Segment, SegmentArrangement
from ..graph import Graph
from ..models import weight_model_oct
from .chains import F, hseg, vseg
from .output import PROBLEM_WHOM, ReductionOutput

# vertex gadget in coordinates relative to the (x_i, y_i) crossing; the two
# collinear pairs (d1,d7) and (d4,d5) overlap, which is how the figure's
# nearly-touching strokes read in a two-direction arrangement
_GADGET = [
    ("d1", "v", F(-9, 10), (F(-3, 10), F(4, 10))),
    ("d2", "v", F(-2, 5), (F(-3, 10), F(11, 20))),
    ("d3", "h", F(7, 10), (F(-11, 10), F(3, 10))),
    ("d4", "h", F(1, 1), (F(-9, 20), F(3, 10))),
    ("d5", "h", F(1, 1), (F(-6, 5), F(-7, 20))),
    ("d6", "h", F(1, 2), (F(-6, 5), F(-7, 20))),
    ("d7", "v", F(-9, 10), (F(3, 10), F(6, 5))),
]

# intersection pattern realized by the gadget, against the two grid segments
_GADGET_EDGES = [
    ("x", "d1"), ("x", "d2"), ("y", "d3"), ("y", "d4"),
    ("d1", "d7"), ("d2", "d6"), ("d3", "d7"), ("d4", "d5"),
    ("d5", "d7"), ("d6", "d7"),
]


def is_to_oct_segments(g: Graph, k: int) -> ReductionOutput:
    """Axis-parallel grid, a seven-segment gadget on each (x_i, y_i)
    crossing, and one grid-overlapping segment per edge crossing.

    alpha(g) >= k iff the output admits a homomorphism of weight at least
    7n + 2m + k under the odd-cycle-transversal weights.
    """
    n = g.n
    if n == 0:
        raise DialectError("need at least one vertex")
    m = g.edge_count()
    spacing = 4
    lo, hi = F(-2), F(4 * n + 2)

    segments: list[Segment] = []
    labels: list[str] = []
    edges: set[tuple[int, int]] = set()

    for i in range(1, n + 1):
        segments.append(hseg(F(4 * i), (lo, hi)))
        labels.append(f"x{i}")
    for j in range(1, n + 1):
        segments.append(vseg(F(4 * j), (lo, hi)))
        labels.append(f"y{j}")

    def x_id(i):
        return i - 1

    def y_id(j):
        return n + j - 1

    for i in range(2 * n):
        for j in range(i + 1, 2 * n):
            if (i < n) != (j < n):
                edges.add((i, j))  # the full grid

    for i in range(1, n + 1):
        px, py = F(4 * i), F(4 * i)
        ids = {"x": x_id(i), "y": y_id(i)}
        for name, orient, offset, (a, b) in _GADGET:
            seg_id = len(segments)
            if orient == "v":
                segments.append(vseg(px + offset, (py + a, py + b)))
            else:
                segments.append(hseg(py + offset, (px + a, px + b)))
            labels.append(f"{name}@v{i}")
            ids[name] = seg_id
        for u, v in _GADGET_EDGES:
            edges.add(tuple(sorted((ids[u], ids[v]))))

    for u, v in g.sorted_edges():
        for (i, j) in ((u + 1, v + 1), (v + 1, u + 1)):
            px, py = F(4 * j), F(4 * i)  # crossing of horizontal x_i, vertical y_j
            seg_id = len(segments)
            segments.append(vseg(px, (py - F(1, 2), py + F(3, 5))))
            labels.append(f"e@({i},{j})")
            edges.add(tuple(sorted((x_id(i), seg_id))))
            edges.add(tuple(sorted((y_id(j), seg_id))))

    instance = Graph(len(segments), edges, labels)
    h, w = weight_model_oct(instance)
    return ReductionOutput(
        instance, h, w, None, 7 * n + 2 * m + k, PROBLEM_WHOM,
        arrangement=SegmentArrangement(segments, labels),
        claimed_slope_count=2,
        notes="axis-parallel grid with seven-segment vertex gadgets",
    )
