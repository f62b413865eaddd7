"""3-SAT to locally surjective homomorphism, for path targets, cycle targets,
and the loop-pendant target.

The path/cycle constructions share a skeleton: one vertical occurrence
segment per literal occurrence (positive then negative occurrences grouped
per variable, left to right, each column slightly shorter at the bottom than
the one before), horizontal clause segments crossing every column, a
measuring path hanging off the right edge, per-occurrence paths tying
columns to the measuring path, and a small membership gadget on each
(occurrence, clause) crossing.  All segments are axis-parallel; paths of
collinear segments are realized as overlap chains.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DialectError
from ..geometry import Segment, SegmentArrangement
from ..graph import Graph
from ..targets import cycle, loop_pendant, path
from .chains import F, hseg, interval_chain, vseg
from .cnf import CnfFormula, Dialect, require_both_polarities
from .output import PROBLEM_LSHOM, ReductionOutput


class _Builder:
    def __init__(self):
        self.segments: list[Segment] = []
        self.labels: list[str] = []
        self.edges: set[tuple[int, int]] = set()

    def add(self, seg: Segment, label: str) -> int:
        self.segments.append(seg)
        self.labels.append(label)
        return len(self.segments) - 1

    def link(self, u: int, v: int):
        self.edges.add((u, v) if u <= v else (v, u))

    def output(self, target, notes) -> ReductionOutput:
        instance = Graph(len(self.segments), self.edges, self.labels)
        return ReductionOutput(
            instance, target, None, None, None, PROBLEM_LSHOM,
            arrangement=SegmentArrangement(self.segments, self.labels),
            claimed_slope_count=2,
            notes=notes,
        )


def _occurrences(phi: CnfFormula):
    """Columns ordered variable by variable, positives before negatives,
    clause order within.  Returns [(var, positive, clause_index)] in column
    order plus the per-variable column ranges."""
    per_var_pos: dict[int, list[int]] = {v: [] for v in range(1, phi.num_vars + 1)}
    per_var_neg: dict[int, list[int]] = {v: [] for v in range(1, phi.num_vars + 1)}
    for p, clause in enumerate(phi.clauses, 1):
        for lit in clause:
            (per_var_pos if lit > 0 else per_var_neg)[abs(lit)].append(p)
    occs = []
    ranges = {}
    for v in range(1, phi.num_vars + 1):
        start = len(occs) + 1
        for p in per_var_pos[v]:
            occs.append((v, True, p))
        mid = len(occs) + 1
        for p in per_var_neg[v]:
            occs.append((v, False, p))
        ranges[v] = (start, mid - 1, mid, len(occs))  # pos cols, neg cols
    return occs, ranges


def _validate(phi: CnfFormula):
    if phi.dialect is not Dialect.THREE_SAT:
        raise DialectError("these generators consume plain 3-SAT formulas")
    require_both_polarities(phi)


def threesat_to_lshom_path(phi: CnfFormula, k: int) -> ReductionOutput:
    """Decision instance for locally surjective homomorphism onto the k-path;
    yes iff phi is satisfiable.  Needs k >= 4."""
    if k < 4:
        raise DialectError("the path construction needs k >= 4")
    _validate(phi)
    return _build_skeleton(phi, k, is_cycle=False)


def threesat_to_lshom_cycle(phi: CnfFormula, k: int) -> ReductionOutput:
    """Decision instance for locally surjective homomorphism onto the
    k-cycle; yes iff phi is satisfiable.  Needs k >= 3, k != 4."""
    if k < 3 or k == 4:
        raise DialectError("the cycle construction needs k >= 3, k != 4")
    _validate(phi)
    return _build_skeleton(phi, k, is_cycle=True)


def _build_skeleton(phi: CnfFormula, k: int, is_cycle: bool) -> ReductionOutput:
    occs, ranges = _occurrences(phi)
    n, m, O = phi.num_vars, phi.num_clauses, len(occs)
    b = _Builder()
    x_t = F(O + 2)
    eta = Fraction(1, O + 1)
    col_bot = [F(-2 * m - 2) + o * eta for o in range(1, O + 1)]
    col_top = F(12)

    col_ids = []
    for o, (var, positive, p) in enumerate(occs, 1):
        sign = "+" if positive else "-"
        col_ids.append(b.add(vseg(F(o), (col_bot[o - 1], col_top)), f"occ{sign}{var}@c{p}#{o}"))

    # variable gadgets
    r_len = 2 * k - 3 if not is_cycle else k - 1
    var_first: dict[int, int] = {}
    var_last: dict[int, int] = {}
    for var in range(1, n + 1):
        lo_p, hi_p, lo_n, hi_n = ranges[var]
        min_x, max_x = F(lo_p), F(hi_p)
        max_t = F(hi_n)
        xa = max_x + F(3, 10)
        if is_cycle and k == 3:
            r1 = b.add(hseg(F(11), (min_x - F(2, 5), max_x + F(13, 20))), f"r1@u{var}")
            r2 = b.add(hseg(F(11), (max_x + F(3, 5), max_t + F(2, 5))), f"r2@u{var}")
            b.link(r1, r2)
            var_first[var], var_last[var] = r1, r2
        else:
            r1 = b.add(hseg(F(11), (min_x - F(2, 5), xa + F(1, 10))), f"r1@u{var}")
            chain, _ = interval_chain(F(11), F(57, 5), r_len - 2)
            prev = r1
            for t, iv in enumerate(chain, 2):
                rid = b.add(vseg(xa, iv), f"r{t}@u{var}")
                b.link(prev, rid)
                prev = rid
            r_last = b.add(
                hseg(F(57, 5), (xa - F(1, 10), max_t + F(2, 5))), f"r{r_len}@u{var}"
            )
            b.link(prev, r_last)
            var_first[var], var_last[var] = r1, r_last
        for o in range(lo_p, hi_p + 1):
            b.link(var_first[var], col_ids[o - 1])
        for o in range(lo_n, hi_n + 1):
            b.link(var_last[var], col_ids[o - 1])

    # clause segments crossing every column
    y_ids = []
    for p in range(1, m + 1):
        yid = b.add(hseg(F(-2 * p), (F(0), F(O + 1))), f"y{p}")
        y_ids.append(yid)
        for cid in col_ids:
            b.link(yid, cid)

    # y' hooks from each clause segment to the top of the measuring path
    yp_ids = []
    for p in range(1, m + 1):
        ypid = b.add(
            hseg(F(-2 * p), (F(O) + F(1, 2), x_t + F(1, 5))), f"y'{p}"
        )
        yp_ids.append(ypid)
        b.link(y_ids[p - 1], ypid)

    # the measuring path T
    a_t = F(-2 * m) - F(11, 20)
    b_t = F(-2 * m) - F(19, 20)
    a2 = F(-2 * m - 2) - F(1, 20)
    t_ids: list[int] = []
    if is_cycle and k == 3:
        t_ids.append(b.add(vseg(x_t, (a2, F(-3, 2))), "t1"))
    else:
        t_ids.append(b.add(vseg(x_t, (a_t, F(-3, 2))), "t1"))
        mid_count = (k - 2) if not is_cycle else (k - 4)
        chain, _ = interval_chain(a_t, b_t, mid_count)
        for t, iv in enumerate(chain, 2):
            t_ids.append(b.add(vseg(x_t, iv), f"t{t}"))
        t_ids.append(b.add(vseg(x_t, (a2, b_t)), f"t{len(t_ids) + 1}"))
        if not is_cycle:
            tail, _ = interval_chain(a2, a2 - 1, k - 1)
            for iv in tail:
                t_ids.append(b.add(vseg(x_t, iv), f"t{len(t_ids) + 1}"))
    for t in range(len(t_ids) - 1):
        b.link(t_ids[t], t_ids[t + 1])
    for ypid in yp_ids:
        b.link(ypid, t_ids[0])
    spine_anchor = t_ids[k - 1] if not is_cycle else t_ids[k - 3]  # t_k / t_{k-2}

    # occurrence-to-spine connectors at staggered heights under the grid
    for o in range(1, O + 1):
        y_q = col_bot[o - 1] + eta / 4
        count = (k - 3) if not is_cycle else 1
        chain, _ = interval_chain(F(o), x_t, count, max_margin=F(1, 5))
        prev = col_ids[o - 1]
        name = "q" if not is_cycle else "x'"
        for t, iv in enumerate(chain, 1):
            qid = b.add(hseg(y_q, iv), f"{name}{t}@#{o}")
            b.link(prev, qid)
            prev = qid
        b.link(prev, spine_anchor)

    # membership gadgets on each (occurrence, clause) crossing
    s_len = (2 * k - 4) if not is_cycle else (k - 2)
    for o, (var, positive, p) in enumerate(occs, 1):
        ox = F(o)
        ry = F(-2 * p)
        alpha = b.add(
            hseg(ry + F(9, 20), (ox - F(9, 20), ox + F(1, 20))), f"alpha@#{o}"
        )
        beta = b.add(
            vseg(ox - F(2, 5), (ry - F(1, 20), ry + F(1, 2))), f"beta@#{o}"
        )
        b.link(alpha, col_ids[o - 1])
        b.link(alpha, beta)
        b.link(beta, y_ids[p - 1])
        if is_cycle and k == 3:
            s1 = b.add(
                hseg(ry + F(9, 20), (ox - F(11, 20), ox - F(7, 20))), f"s1@#{o}"
            )
            b.link(alpha, s1)
            b.link(s1, beta)
        else:
            chain, _ = interval_chain(ry + F(9, 20), ry + F(1, 10), s_len - 1)
            prev = alpha
            for t, iv in enumerate(chain, 1):
                sid = b.add(vseg(ox - F(1, 5), iv), f"s{t}@#{o}")
                b.link(prev, sid)
                prev = sid
            s_last = b.add(
                hseg(ry + F(1, 10), (ox - F(9, 20), ox - F(3, 20))), f"s{s_len}@#{o}"
            )
            b.link(prev, s_last)
            b.link(s_last, beta)

    target = cycle(k) if is_cycle else path(k)
    kind = "cycle" if is_cycle else "path"
    return b.output(target, f"occurrence grid with membership gadgets, {kind} target k={k}")


def threesat_to_lshom_loopedge(phi: CnfFormula, occ_clique: bool = False) -> ReductionOutput:
    """Decision instance for locally surjective homomorphism onto the
    pendant-loop target (loopless vertex attached to a looped one); yes iff
    phi is satisfiable.  Clauses must have exactly three literals.

    The clause-gadget drawing exists only as an external figure, so only the
    abstract graph is produced, reconstructed from the argument that forces
    h(f)=a, h(e)=h(s)=b and makes the central clause vertex unhappy exactly
    when all three literals fail.  occ_clique adds the optional pairwise
    intersections among occurrence segments.
    """
    _validate(phi)
    for c in phi.clauses:
        if len(c) != 3:
            raise DialectError("the pendant-loop construction needs exactly 3 literals per clause")
    n, m = phi.num_vars, phi.num_clauses
    edges: set[tuple[int, int]] = set()
    labels: list[str] = []

    def add(label: str) -> int:
        labels.append(label)
        return len(labels) - 1

    def link(u, v):
        edges.add((u, v) if u <= v else (v, u))

    x_ids = {}
    y_ids = {}
    for var in range(1, n + 1):
        x_ids[var] = add(f"x{var}")
        y_ids[var] = add(f"y{var}")
        link(x_ids[var], y_ids[var])
    occ_ids = []
    for p, clause in enumerate(phi.clauses, 1):
        z = add(f"z@c{p}")
        qs = [add(f"q{j}@c{p}") for j in (1, 2, 3)]
        ps = [add(f"p{j}@c{p}") for j in (1, 2, 3)]
        for q, pp in zip(qs, ps):
            link(z, q)
            link(q, pp)
        for j, lit in enumerate(clause):
            s = add(f"s{j + 1}@c{p}")
            e = add(f"e{j + 1}@c{p}")
            f = add(f"f{j + 1}@c{p}")
            link(s, e)
            link(e, f)
            link(s, ps[j])
            link(s, x_ids[abs(lit)] if lit > 0 else y_ids[abs(lit)])
            occ_ids.append(s)
    if occ_clique:
        for i in range(len(occ_ids)):
            for j in range(i + 1, len(occ_ids)):
                link(occ_ids[i], occ_ids[j])
    instance = Graph(len(labels), edges, labels)
    return ReductionOutput(
        instance, loop_pendant(), None, None, None, PROBLEM_LSHOM,
        notes="pendant-loop target; abstract graph only"
        + (" (occurrence clique variant)" if occ_clique else ""),
    )
