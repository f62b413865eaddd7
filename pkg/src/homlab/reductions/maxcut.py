"""The max-cut hardness chain: clause gadgets, the bisection blow-up, and the
segment-grid construction whose cut threshold encodes max bisection."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DialectError
from ..geometry import Segment, SegmentArrangement
from ..graph import Graph
from ..models import weight_model_maxcut
from .cnf import CnfFormula, Dialect, require_distinct_clauses
from .output import PROBLEM_MAX_BISECTION, PROBLEM_WHOM, ReductionOutput


def posnae3sat_to_maxcut(phi: CnfFormula) -> tuple[Graph, int]:
    """All-positive not-all-equal clauses to a max-cut threshold.

    One vertex per variable; a 2-clause contributes an edge, a 3-clause a
    nine-cycle threaded through its three variable vertices.  Satisfiable
    iff the graph has a cut of size m2 + 8*m3.
    """
    if phi.dialect is not Dialect.POS_NAE_3SAT:
        raise DialectError("posnae3sat_to_maxcut needs the all-positive dialect")
    require_distinct_clauses(phi)
    for var, count in phi.occurrence_counts().items():
        if count > 3:
            raise DialectError(f"variable {var} occurs {count} times (limit 3)")
    n = phi.num_vars
    edges: list[tuple[int, int]] = []
    labels = [f"x{i}" for i in range(1, n + 1)]
    next_id = n
    m2 = m3 = 0
    for ci, clause in enumerate(phi.clauses, 1):
        vs = [v - 1 for v in clause]
        if len(vs) == 2:
            m2 += 1
            edges.append((vs[0], vs[1]))
        else:
            m3 += 1
            l1, r1, l2, r2, l3, r3 = range(next_id, next_id + 6)
            labels += [f"{name}@c{ci}" for name in ("l1", "r1", "l2", "r2", "l3", "r3")]
            next_id += 6
            cycle = [l1, vs[0], r1, l2, vs[1], r2, l3, vs[2], r3]
            edges += [(cycle[t], cycle[(t + 1) % 9]) for t in range(9)]
    return Graph(next_id, edges, labels), m2 + 8 * m3


def lemma1_output(phi: CnfFormula) -> ReductionOutput:
    g, threshold = posnae3sat_to_maxcut(phi)
    h, w = weight_model_maxcut(g)
    return ReductionOutput(
        g, h, w, None, threshold, PROBLEM_WHOM,
        notes="clause-gadget max cut construction (nine-cycles)",
    )


def maxcut_to_bisection(g: Graph, k: int) -> tuple[Graph, int]:
    """Pendant blow-up: F has a vertex v' glued to each v.

    g has a cut of size >= k iff F has a bisection of size >= n + k, and
    every maximum cut of F is a bisection.
    """
    n = g.n
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + [f"{l}'" for l in g.labels]
    else:
        labels = [f"v{i}" for i in range(n)] + [f"v{i}'" for i in range(n)]
    edges = list(g.edges) + [(v, n + v) for v in range(n)]
    return Graph(2 * n, edges, labels), n + k


def lemma2_output(g: Graph, k: int) -> ReductionOutput:
    f, threshold = maxcut_to_bisection(g, k)
    h, w = weight_model_maxcut(f)
    return ReductionOutput(
        f, h, w, None, threshold, PROBLEM_MAX_BISECTION,
        notes="pendant blow-up; every maximum cut of the output is a bisection",
    )


def bisection_to_maxcut_segments(g: Graph, k: int) -> ReductionOutput:
    """Two pencils of segments crossing grid-like (a clique on X u Y), a
    16-segment gadget on each (x_i, y_i) crossing, and a two-segment bent
    gadget on both crossings of every edge.

    A bisection of size >= k exists iff the output has a cut of size at least
    n^2 + 32n + 4m + 2k.  Intended for inputs whose maximum cuts are all
    bisections (the pendant blow-up guarantees that).
    """
    n = g.n
    if n == 0:
        raise DialectError("need at least one vertex")
    m = g.edge_count()
    big = Fraction(8 * (n + 2))
    a_pt = (Fraction(0), Fraction(0))
    b_pt = (big, big)
    # X_i from the origin pencil, slope i/big < 1; Y_j from the top pencil,
    # slope big/(big-j) > 1
    x_dirs = [(big, Fraction(i)) for i in range(1, n + 1)]
    y_dirs = [(Fraction(j) - big, -big) for j in range(1, n + 1)]
    x_segs = [Segment(a_pt, (big, Fraction(i))) for i in range(1, n + 1)]
    y_segs = [Segment(b_pt, (Fraction(j), Fraction(0))) for j in range(1, n + 1)]

    def crossing(i: int, j: int) -> tuple[Fraction, Fraction]:
        # X_i: (t*big, t*i); Y_j: b_pt + s*(j-big, -big); solve exactly
        denom = big * big - Fraction(i) * (big - Fraction(j))
        y = Fraction(i * j) * big / denom
        x = y * big / Fraction(i)
        return (x, y)

    segments: list[Segment] = list(x_segs) + list(y_segs)
    labels = [f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, n + 1)]
    edges: set[tuple[int, int]] = set()
    for i in range(2 * n):
        for j in range(i + 1, 2 * n):
            edges.add((i, j))  # pencil cliques plus the full grid

    gadget_points = {}
    sorted_edges = g.sorted_edges()
    for i in range(1, n + 1):
        gadget_points[(i, i)] = crossing(i, i)
    for u, v in sorted_edges:
        gadget_points[(u + 1, v + 1)] = crossing(u + 1, v + 1)
        gadget_points[(v + 1, u + 1)] = crossing(v + 1, u + 1)

    def clear_radius(point, own: set[int]) -> Fraction:
        delta = Fraction(1)
        while True:
            if _box_clear(point, delta, segments, own) and all(
                q == point or _linf(point, q) > 2 * delta for q in gadget_points.values()
            ):
                return delta
            delta /= 2

    def x_id(i):
        return i - 1

    def y_id(j):
        return n + j - 1

    # vertex gadgets: 16 parallel slope -1 segments through both pencils
    for i in range(1, n + 1):
        p = gadget_points[(i, i)]
        delta = clear_radius(p, {x_id(i), y_id(i)})
        eta = delta / 32
        dx, dy = x_dirs[i - 1]
        ex, ey = y_dirs[i - 1]
        for r in range(1, 17):
            s_x = r * eta / (dx + dy)
            q1 = (p[0] + s_x * dx, p[1] + s_x * dy)
            s_y = r * eta / (ex + ey)
            q2 = (p[0] + s_y * ex, p[1] + s_y * ey)
            stretch = ((q1[0] - q2[0]) / 8, (q1[1] - q2[1]) / 8)
            e1 = (q1[0] + stretch[0], q1[1] + stretch[1])
            e2 = (q2[0] - stretch[0], q2[1] - stretch[1])
            seg_id = len(segments)
            segments.append(Segment(e1, e2))
            labels.append(f"d{r}@v{i}")
            edges.add((x_id(i), seg_id))
            edges.add((y_id(i), seg_id))

    # edge gadgets: alpha parallel to the Y pencil member, beta to the X one
    for u, v in sorted_edges:
        for (i, j) in ((u + 1, v + 1), (v + 1, u + 1)):
            p = gadget_points[(i, j)]
            delta = clear_radius(p, {x_id(i), y_id(j)})
            eps = delta / 8
            dx, dy = x_dirs[i - 1]
            ux, uy = dx / big, dy / big
            ex, ey = y_dirs[j - 1]
            wx, wy = ex / big, ey / big
            a_star = (p[0] - 2 * eps * ux, p[1] - 2 * eps * uy)
            b_star = (p[0] + 2 * eps * wx, p[1] + 2 * eps * wy)
            alpha = Segment(
                (a_star[0] - eps * wx, a_star[1] - eps * wy),
                (a_star[0] + 4 * eps * wx, a_star[1] + 4 * eps * wy),
            )
            beta = Segment(
                (b_star[0] + eps * ux, b_star[1] + eps * uy),
                (b_star[0] - 4 * eps * ux, b_star[1] - 4 * eps * uy),
            )
            alpha_id = len(segments)
            segments.append(alpha)
            labels.append(f"alpha@({i},{j})")
            beta_id = len(segments)
            segments.append(beta)
            labels.append(f"beta@({i},{j})")
            edges.add((x_id(i), alpha_id))
            edges.add((alpha_id, beta_id))
            edges.add((y_id(j), beta_id))

    instance = Graph(len(segments), edges, labels)
    h, w = weight_model_maxcut(instance)
    threshold = n * n + 32 * n + 4 * m + 2 * k
    return ReductionOutput(
        instance, h, w, None, threshold, PROBLEM_WHOM,
        arrangement=SegmentArrangement(segments, labels),
        notes="pencil grid with 16-segment vertex gadgets and bent edge gadgets",
    )


def _linf(p, q) -> Fraction:
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def _box_clear(p, delta, segments, allowed: set[int]) -> bool:
    """No segment outside `allowed` touches the closed box p +/- delta."""
    lo_x, hi_x = p[0] - delta, p[0] + delta
    lo_y, hi_y = p[1] - delta, p[1] + delta
    sides = [
        Segment((lo_x, lo_y), (hi_x, lo_y)),
        Segment((hi_x, lo_y), (hi_x, hi_y)),
        Segment((hi_x, hi_y), (lo_x, hi_y)),
        Segment((lo_x, hi_y), (lo_x, lo_y)),
    ]
    from ..geometry import segments_intersect

    for idx, seg in enumerate(segments):
        if idx in allowed:
            continue
        if _point_in_box(seg.p, lo_x, hi_x, lo_y, hi_y) or _point_in_box(
            seg.q, lo_x, hi_x, lo_y, hi_y
        ):
            return False
        if any(segments_intersect(seg, side) for side in sides):
            return False
    return True


def _point_in_box(pt, lo_x, hi_x, lo_y, hi_y) -> bool:
    return lo_x <= pt[0] <= hi_x and lo_y <= pt[1] <= hi_y
