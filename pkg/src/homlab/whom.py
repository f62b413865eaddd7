"""Maximum-weight list homomorphism to a fixed target.

solve_whom runs list arc consistency, branches on a high-degree vertex while
the target has the no-two-common-neighbors property, and otherwise does one
step of separator divide and conquer.  Correctness never depends on the
property or on the graph being a string graph; those only buy the
subexponential bound, so when branching is unavailable the solver falls back
to separators with an enlarged budget and, at the bottom, to enumeration.

oracle_whom and count_whom are the independent exhaustive references.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import BudgetExceededError
from .graph import Graph, norm_edge
from .separator import DEFAULT_BETA, find_balanced_separator, heuristic_separator
from .star import has_property_star
from .weights import (
    ExtWeight,
    ListAssignment,
    NEG_INF,
    WeightModel,
    ext_add,
    ext_lt,
    ext_max,
)


class _Infeasible:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFEASIBLE"


INFEASIBLE = _Infeasible()


@dataclass(frozen=True)
class WhomInstance:
    g: Graph
    h: Graph
    weights: WeightModel
    lists: ListAssignment
    threshold: Optional[ExtWeight] = None

    @classmethod
    def make(cls, g, h, weights=None, lists=None, threshold=None):
        return cls(
            g,
            h,
            weights if weights is not None else WeightModel(),
            lists if lists is not None else ListAssignment.full(g, h),
            threshold,
        )


@dataclass
class WhomResult:
    optimum: ExtWeight | _Infeasible
    witness: Optional[dict[int, int]]

    @property
    def feasible(self) -> bool:
        return self.optimum is not INFEASIBLE


@dataclass
class WhomConfig:
    separator_c: float = 4.0
    beta: Fraction = DEFAULT_BETA
    leaf_product_cap: int = 4096
    leaf_vertex_cap: int = 4
    oracle_node_budget: int = 50_000_000
    separator_work_budget: int = 2_000_000
    jobs: int = 1
    deadline: Optional[float] = None  # time.monotonic() cutoff
    branch_probe: Optional[list] = None  # test hook: records (lists, v, a)


@dataclass
class WhomStats:
    branch_nodes: int = 0
    separator_nodes: int = 0
    leaf_nodes: int = 0
    separator_sizes: list = field(default_factory=list)


def _check_deadline(config: WhomConfig):
    if config.deadline is not None:
        import time

        if time.monotonic() > config.deadline:
            raise BudgetExceededError("time budget exceeded")


# ---------------------------------------------------------------------------
# internal state over original vertex ids


class _State:
    __slots__ = ("inst", "lists", "vw_extra", "zero", "config", "stats")

    def __init__(self, inst, lists, vw_extra, zero, config, stats):
        self.inst = inst
        self.lists = lists        # dict v -> frozenset of admissible colors
        self.vw_extra = vw_extra  # dict (v, a) -> folded integer weight
        self.zero = zero          # vertices whose own weights are charged elsewhere
        self.config = config
        self.stats = stats

    def vertex_weight(self, v: int, a: int) -> ExtWeight:
        extra = self.vw_extra.get((v, a), 0)
        if v in self.zero:
            return extra
        return ext_add(self.inst.weights.vertex_weight(v, a), extra)

    def edge_weight(self, u: int, v: int, a: int, b: int) -> ExtWeight:
        if u in self.zero and v in self.zero:
            return 0
        return self.inst.weights.edge_weight((u, v), (a, b))


def _arc_consistency(g: Graph, h: Graph, lists: dict[int, frozenset[int]], active: set[int]) -> bool:
    """Standard arc consistency: drop b from L(v) when no neighbor supports it."""
    queue = list(sorted(active))
    inq = set(queue)
    while queue:
        v = queue.pop(0)
        inq.discard(v)
        for u in sorted(g.neighbors(v)):
            if u not in active or u == v:
                continue
            supported = frozenset(
                b for b in lists[u] if any(h.has_edge(a, b) for a in lists[v])
            )
            if supported != lists[u]:
                lists[u] = supported
                if not supported:
                    return False
                if u not in inq:
                    queue.append(u)
                    inq.add(u)
    return True


def _fold_assignment(state: _State, active: set[int], assignment: dict[int, int], v: int, a: int) -> ExtWeight:
    """Assign v -> a, delete it, fold its incident edge weights into the
    residual vertex weights of its still-unassigned neighbors.

    Returns the weight charged now: v's own (residual) vertex weight plus its
    loop weight.  Edges to previously assigned vertices were folded into v
    when those neighbors were assigned, so they are already inside the
    residual vertex weight; nothing is counted twice.
    """
    g, h = state.inst.g, state.inst.h
    gained = state.vertex_weight(v, a)
    if g.has_loop(v):
        gained = ext_add(gained, state.edge_weight(v, v, a, a))
    assignment[v] = a
    active.discard(v)
    for u in sorted(g.neighbors(v)):
        if u == v or u not in active:
            continue
        kept = []
        for b in state.lists[u]:
            if not h.has_edge(a, b):
                continue
            w = state.edge_weight(u, v, b, a)
            if w != 0:
                key = (u, b)
                state.vw_extra[key] = ext_add(state.vw_extra.get(key, 0), w)
            kept.append(b)
        state.lists[u] = frozenset(kept)
    return gained


def preprocess(inst: WhomInstance):
    """Arc consistency plus forced-assignment elimination, to a fixed point.

    Returns (reduced_instance_or_None, kept_old_ids, assignment, accumulated,
    feasible).  The reduced instance is relabeled 0..k-1 following kept_old_ids
    and its optimum plus `accumulated` equals the original optimum.
    """
    state, active, assignment, acc, feasible = _preprocess_state(inst)
    if not feasible:
        return None, (), dict(assignment), 0, False
    kept = tuple(sorted(active))
    idx = {v: i for i, v in enumerate(kept)}
    sub, _ = inst.g.induced(kept)
    vertex = {}
    for v in kept:
        for a in state.lists[v]:
            w = state.vertex_weight(v, a)
            if w != 0:
                vertex[(idx[v], a)] = w
    edge = {}
    for (u, v) in inst.g.edges:
        if u in idx and v in idx:
            for a in state.lists[u]:
                for b in state.lists[v] if u != v else [a]:
                    w = state.edge_weight(u, v, a, b)
                    if w != 0:
                        edge[((idx[u], idx[v]), norm_edge(a, b))] = w
    reduced = WhomInstance(
        sub,
        inst.h,
        WeightModel(vertex, edge),
        ListAssignment(sub, inst.h, {idx[v]: state.lists[v] for v in kept}),
        inst.threshold,
    )
    return reduced, kept, dict(assignment), acc, True


def _preprocess_state(inst: WhomInstance, config: Optional[WhomConfig] = None):
    config = config or WhomConfig()
    g, h = inst.g, inst.h
    lists = {v: inst.lists.get(v) for v in g.vertices}
    state = _State(inst, lists, {}, frozenset(), config, WhomStats())
    active = set(g.vertices)
    assignment: dict[int, int] = {}
    acc: ExtWeight = 0
    for v in sorted(active):
        if g.has_loop(v):
            lists[v] = frozenset(a for a in lists[v] if h.has_loop(a))
    while True:
        for v in sorted(active):
            if not lists[v]:
                return state, active, assignment, acc, False
        if not _arc_consistency(g, h, lists, active):
            return state, active, assignment, acc, False
        singletons = [v for v in sorted(active) if len(lists[v]) == 1]
        if not singletons:
            return state, active, assignment, acc, True
        for v in singletons:
            if v not in active:
                continue
            if not lists[v]:
                return state, active, assignment, acc, False
            (a,) = lists[v]
            acc = ext_add(acc, _fold_assignment(state, active, assignment, v, a))


# ---------------------------------------------------------------------------
# the solver


def solve_whom(
    inst: WhomInstance,
    config: Optional[WhomConfig] = None,
    stats: Optional[WhomStats] = None,
) -> WhomResult:
    config = config or WhomConfig()
    stats = stats if stats is not None else WhomStats()
    state, active, assignment, acc, feasible = _preprocess_state(inst, config)
    state.stats = stats
    if not feasible:
        return WhomResult(INFEASIBLE, None)
    sub = _solve(state, active)
    if sub is None:
        return WhomResult(INFEASIBLE, None)
    opt, wit = sub
    full = dict(assignment)
    full.update(wit)
    return WhomResult(ext_add(acc, opt), full)


def _solve(state: _State, active: set[int]):
    """Exact optimum over list-respecting homomorphisms on `active`.

    Returns (weight, witness) or None when infeasible.  Assumes lists are
    arc-consistent with no empty or singleton list (callers re-run
    preprocessing after any list change).
    """
    _check_deadline(state.config)
    g = state.inst.g
    if not active:
        return 0, {}
    n = len(active)
    product = 1
    for v in active:
        product *= len(state.lists[v])
        if product > state.config.leaf_product_cap:
            break
    if n <= state.config.leaf_vertex_cap or product <= state.config.leaf_product_cap:
        state.stats.leaf_nodes += 1
        return _leaf_enumerate(state, active)

    deg_threshold = math.ceil(n ** (1 / 3))
    by_degree = sorted(
        active, key=lambda v: (-sum(1 for u in g.neighbors(v) if u in active), v)
    )
    v = by_degree[0]
    v_deg = sum(1 for u in g.neighbors(v) if u in active)
    if v_deg > deg_threshold and has_property_star(state.inst.h):
        pair = _branch_pair(state, active, v)
        if pair is not None:
            state.stats.branch_nodes += 1
            a = pair
            if state.config.branch_probe is not None:
                state.config.branch_probe.append(
                    ({u: state.lists[u] for u in sorted(active)}, v, a)
                )
            return _branch(state, active, v, a)
    return _separate(state, active)


def _branch_pair(state: _State, active: set[int], v: int):
    """Color a in L(v) non-adjacent to some b in the most frequent neighbor
    list; exists whenever the target has the property and lists are reduced."""
    g, h = state.inst.g, state.inst.h
    groups: dict[frozenset, int] = {}
    for u in g.neighbors(v):
        if u in active and u != v:
            groups[state.lists[u]] = groups.get(state.lists[u], 0) + 1
    if not groups:
        return None
    freq_list = max(sorted(groups, key=lambda s: tuple(sorted(s))), key=lambda s: groups[s])
    for a in sorted(state.lists[v]):
        for b in sorted(freq_list):
            if not h.has_edge(a, b):
                return a
    return None


def _branch(state: _State, active: set[int], v: int, a: int):
    best = None
    for new_list in (frozenset([a]), state.lists[v] - {a}):
        sub = _restart(state, active, {v: new_list})
        if sub is None:
            continue
        if best is None or ext_lt(best[0], sub[0]):
            best = sub
    return best


def _restart(state: _State, active: set[int], overrides: dict[int, frozenset]):
    """Re-run preprocessing on a modified copy of the state, then solve."""
    lists = dict(state.lists)
    lists.update(overrides)
    for v, s in overrides.items():
        if not s:
            return None
    sub_state = _State(
        state.inst,
        lists,
        dict(state.vw_extra),
        state.zero,
        state.config,
        state.stats,
    )
    sub_active = set(active)
    assignment: dict[int, int] = {}
    acc: ExtWeight = 0
    g, h = state.inst.g, state.inst.h
    while True:
        for v in sorted(sub_active):
            if not sub_state.lists[v]:
                return None
        if not _arc_consistency(g, h, sub_state.lists, sub_active):
            return None
        singletons = [v for v in sorted(sub_active) if len(sub_state.lists[v]) == 1]
        if not singletons:
            break
        for v in singletons:
            if v not in sub_active:
                continue
            if not sub_state.lists[v]:
                return None
            (a,) = sub_state.lists[v]
            acc = ext_add(acc, _fold_assignment(sub_state, sub_active, assignment, v, a))
    sub = _solve(sub_state, sub_active)
    if sub is None:
        return None
    opt, wit = sub
    merged = dict(assignment)
    merged.update(wit)
    return ext_add(acc, opt), merged


def _pick_separator(state: _State, sub_graph: Graph):
    """Heuristic first (plays the role of extraction from a representation);
    exhaustive minimum search for small graphs; None if nothing usable."""
    n = sub_graph.n
    budget = min(n, max(1, math.ceil(state.config.separator_c * n ** (2 / 3))))
    heur = heuristic_separator(sub_graph, state.config.beta)
    if heur is not None and not (heur.v1 and heur.v2):
        heur = None
    if heur is not None and len(heur.s) <= budget:
        return heur
    for max_size in (budget, n):
        try:
            sep = find_balanced_separator(
                sub_graph, max_size, state.config.beta, state.config.separator_work_budget
            )
        except BudgetExceededError:
            sep = None
        if sep is not None and sep.v1 and sep.v2:
            return sep
    return heur


def _separate(state: _State, active: set[int]):
    g = state.inst.g
    sub_graph, idx = g.induced(active)
    back = {i: v for v, i in idx.items()}
    sep = _pick_separator(state, sub_graph)
    if sep is None:
        # no usable separator (e.g. near-clique): exhaustive leaf
        state.stats.leaf_nodes += 1
        return _leaf_enumerate(state, active)
    state.stats.separator_nodes += 1
    state.stats.separator_sizes.append(len(sep.s))
    s_vertices = sorted(back[i] for i in sep.s)
    s_set = frozenset(s_vertices)
    side1 = {back[i] for i in sep.v1} | set(s_vertices)
    side2 = {back[i] for i in sep.v2} | set(s_vertices)

    best = None
    for coloring in _separator_colorings(state, active, s_vertices):
        # S vertex weights and S-internal edge weights are charged here once;
        # the side calls see S as weightless preassigned vertices.
        w_s = _coloring_weight(state, s_vertices, coloring)
        sub_zero = state.zero | s_set
        halves = []
        for side in (side1, side2):
            overrides = {v: frozenset([coloring[v]]) for v in s_vertices}
            half_state = _State(
                state.inst,
                {v: state.lists[v] for v in side},
                {k: w for k, w in state.vw_extra.items() if k[0] in side and k[0] not in s_set},
                sub_zero,
                state.config,
                state.stats,
            )
            halves.append(_restart(half_state, side, overrides))
            if halves[-1] is None:
                break
        if halves[-1] is None:
            continue
        total = ext_add(w_s, halves[0][0], halves[1][0])
        if best is None or ext_lt(best[0], total):
            merged = dict(coloring)
            merged.update(halves[0][1])
            merged.update(halves[1][1])
            best = (total, merged)
    return best


def _separator_colorings(state: _State, active: set[int], s_vertices: list[int]):
    """All list-respecting colorings of the separator, pruned on internal
    edges as they are extended."""
    g, h = state.inst.g, state.inst.h
    coloring: dict[int, int] = {}

    def extend(i: int):
        _check_deadline(state.config)
        if i == len(s_vertices):
            yield dict(coloring)
            return
        v = s_vertices[i]
        for a in sorted(state.lists[v]):
            ok = True
            for u in g.neighbors(v):
                if u in coloring and not h.has_edge(coloring[u], a):
                    ok = False
                    break
            if ok and g.has_loop(v) and not h.has_edge(a, a):
                ok = False
            if ok:
                coloring[v] = a
                yield from extend(i + 1)
                del coloring[v]

    yield from extend(0)


def _coloring_weight(state: _State, s_vertices: list[int], coloring: dict[int, int]) -> ExtWeight:
    """Vertex weights of S plus S-internal edge weights, charged once here."""
    g = state.inst.g
    terms = [state.vertex_weight(v, coloring[v]) for v in s_vertices]
    sset = set(s_vertices)
    for u, v in g.edges:
        if u in sset and v in sset:
            terms.append(state.edge_weight(u, v, coloring[u], coloring[v]))
    return ext_add(*terms)


def _leaf_enumerate(state: _State, active: set[int]):
    """Plain backtracking over the active subgraph in index order."""
    g, h = state.inst.g, state.inst.h
    order = sorted(active)
    pos = {v: i for i, v in enumerate(order)}
    best: list = [None, None]

    def extend(i: int, weight: ExtWeight, assignment: dict[int, int]):
        _check_deadline(state.config)
        if i == len(order):
            if best[0] is None or ext_lt(best[0], weight):
                best[0] = weight
                best[1] = dict(assignment)
            return
        v = order[i]
        for a in sorted(state.lists[v]):
            if g.has_loop(v) and not h.has_edge(a, a):
                continue
            w = state.vertex_weight(v, a)
            if g.has_loop(v):
                w = ext_add(w, state.edge_weight(v, v, a, a))
            ok = True
            for u in g.neighbors(v):
                if u == v or u not in active:
                    continue
                if u in assignment:
                    if not h.has_edge(assignment[u], a):
                        ok = False
                        break
                    w = ext_add(w, state.edge_weight(u, v, assignment[u], a))
            if not ok:
                continue
            assignment[v] = a
            extend(i + 1, ext_add(weight, w), assignment)
            del assignment[v]

    extend(0, 0, {})
    if best[0] is None:
        return None
    return best[0], best[1]


# ---------------------------------------------------------------------------
# exhaustive references


def oracle_whom(
    inst: WhomInstance,
    node_budget: int = 50_000_000,
    deadline: Optional[float] = None,
) -> WhomResult:
    """Ground truth: exhaustive search over all list-respecting maps.

    Backtracking in natural vertex order with smallest-color-first extension
    and an admissible optimistic bound on the unassigned suffix, so subtrees
    that cannot strictly beat the incumbent are cut; the reported witness is
    still the lexicographically least among the optima.
    """
    g, h = inst.g, inst.h
    lists = [sorted(inst.lists.get(v)) for v in g.vertices]
    if any(not l for l in lists):
        return WhomResult(INFEASIBLE, None)
    nodes = 0
    best: list = [None, None]
    assignment: dict[int, int] = {}
    config = WhomConfig(deadline=deadline)

    # ub[v]: best conceivable contribution of v (its vertex weight, loop, and
    # edges to smaller-indexed neighbors, each maximized independently)
    ub = []
    for v in g.vertices:
        terms = [ext_max(inst.weights.vertex_weight(v, a) for a in lists[v])]
        for u in g.neighbors(v):
            if u == v:
                terms.append(
                    ext_max(
                        inst.weights.edge_weight((v, v), (a, a))
                        for a in lists[v]
                        if h.has_edge(a, a)
                    )
                    if any(h.has_edge(a, a) for a in lists[v])
                    else NEG_INF
                )
            elif u < v:
                pairs = [
                    inst.weights.edge_weight((u, v), (b, a))
                    for a in lists[v]
                    for b in lists[u]
                    if h.has_edge(b, a)
                ]
                terms.append(ext_max(pairs) if pairs else NEG_INF)
        ub.append(ext_add(*terms))
    suffix = [0] * (g.n + 1)
    for v in range(g.n - 1, -1, -1):
        suffix[v] = ext_add(suffix[v + 1], ub[v])

    def extend(v: int, weight: ExtWeight):
        nonlocal nodes
        _check_deadline(config)
        if v == g.n:
            if best[0] is None or ext_lt(best[0], weight):
                best[0] = weight
                best[1] = dict(assignment)
            return
        if best[0] is not None and not ext_lt(best[0], ext_add(weight, suffix[v])):
            return
        for a in lists[v]:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(f"oracle exceeded {node_budget} nodes")
            w = inst.weights.vertex_weight(v, a)
            ok = True
            for u in g.neighbors(v):
                if u == v:
                    if not h.has_edge(a, a):
                        ok = False
                        break
                    w = ext_add(w, inst.weights.edge_weight((v, v), (a, a)))
                elif u < v:
                    if not h.has_edge(assignment[u], a):
                        ok = False
                        break
                    w = ext_add(w, inst.weights.edge_weight((u, v), (assignment[u], a)))
            if not ok:
                continue
            assignment[v] = a
            extend(v + 1, ext_add(weight, w))
            del assignment[v]

    extend(0, 0)
    if best[0] is None:
        return WhomResult(INFEASIBLE, None)
    return WhomResult(best[0], best[1])


def count_whom(
    inst: WhomInstance,
    threshold: ExtWeight,
    node_budget: int = 50_000_000,
) -> int:
    """Number of list-respecting homomorphisms of weight >= threshold,
    by exhaustive enumeration."""
    g, h = inst.g, inst.h
    lists = [sorted(inst.lists.get(v)) for v in g.vertices]
    if any(not l for l in lists):
        return 0
    nodes = 0
    count = 0
    assignment: dict[int, int] = {}

    def extend(v: int, weight: ExtWeight):
        nonlocal nodes, count
        if v == g.n:
            if not ext_lt(weight, threshold):
                count += 1
            return
        for a in lists[v]:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(f"count exceeded {node_budget} nodes")
            w = inst.weights.vertex_weight(v, a)
            ok = True
            for u in g.neighbors(v):
                if u == v:
                    if not h.has_edge(a, a):
                        ok = False
                        break
                    w = ext_add(w, inst.weights.edge_weight((v, v), (a, a)))
                elif u < v:
                    if not h.has_edge(assignment[u], a):
                        ok = False
                        break
                    w = ext_add(w, inst.weights.edge_weight((u, v), (assignment[u], a)))
            if not ok:
                continue
            assignment[v] = a
            extend(v + 1, ext_add(weight, w))
            del assignment[v]

    extend(0, 0)
    return count
