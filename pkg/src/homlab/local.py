"""Locally injective / bijective / surjective homomorphism solvers.

LIHom and LBHom share one separator recursion: separator vertices get pinned
colors plus an exact neighborhood-image requirement split between the two
sides (the split parts are disjoint because the solution is injective around
each vertex); leaves enumerate and check image exactness together with local
injectivity.  Bijectivity reduces to injectivity through the equal-degree
list filter applied against the input graph.

LSHom is solved only for the 3-path and the 4-cycle.  The 3-path case is a
covering problem (color one bipartition class with the two path ends so that
every requirement set on the other class is seen); it runs a win-win between
separator recursion and branching on a large complete bipartite subgraph.
The 4-cycle reduces to two 3-path runs with the class roles swapped.

oracle_local is the independent exhaustive reference for all variants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import BudgetExceededError, MalformedInputError
from .graph import Graph
from .separator import DEFAULT_BETA, find_balanced_separator, heuristic_separator
from .targets import path


@dataclass
class LocalConfig:
    separator_c: float = 2.0
    density_c: float = 1.0
    beta: Fraction = DEFAULT_BETA
    leaf_vertex_cap: int = 6
    leaf_product_cap: int = 4096
    lshom_leaf_x_cap: int = 11
    separator_work_budget: int = 2_000_000
    biclique_budget: int = 2_000_000
    oracle_node_budget: int = 50_000_000
    deadline: Optional[float] = None
    force_dense: bool = False  # test hook: always try the biclique branch


@dataclass(frozen=True)
class LocalInstance:
    """List + exact-neighborhood-image constrained locally injective search."""

    g: Graph
    h: Graph
    lists: dict[int, frozenset[int]]
    sigma: dict[int, frozenset[int]]  # exact image required of N_G(v)


@dataclass(frozen=True)
class SurjInstance:
    """The generalized 3-path covering problem: color xs with the two path
    ends so that sigma(y) is a subset of the colors on N(y), for every y."""

    g: Graph
    xs: frozenset[int]
    ys: frozenset[int]
    sigma: dict[int, frozenset[int]]

    def __post_init__(self):
        if self.xs & self.ys:
            raise MalformedInputError("classes overlap")
        for u, v in self.g.edges:
            if (u in self.xs and v in self.xs) or (u in self.ys and v in self.ys):
                raise MalformedInputError("classes are not independent sets")
        for y, s in self.sigma.items():
            if y not in self.ys:
                raise MalformedInputError("sigma keyed outside the y class")
            if not s <= P3_ENDS:
                raise MalformedInputError("sigma values must be path ends")


def _check_deadline(config: LocalConfig):
    if config.deadline is not None:
        import time

        if time.monotonic() > config.deadline:
            raise BudgetExceededError("time budget exceeded")


# ---------------------------------------------------------------------------
# exhaustive oracle

VARIANTS = ("injective", "bijective", "surjective")


def oracle_local(
    g: Graph,
    h: Graph,
    variant: str,
    node_budget: int = 50_000_000,
    deadline: Optional[float] = None,
) -> Optional[dict[int, int]]:
    """Exhaustive search for a locally constrained homomorphism.

    Backtracking in natural vertex order, smallest color first, so the first
    witness found is lexicographically least.  Prunes on homomorphism
    validity, on color clashes between vertices with a common neighbor
    (injective/bijective), and on unreachable coverage (surjective/bijective).
    """
    if variant not in VARIANTS:
        raise MalformedInputError(f"unknown variant {variant!r}")
    if g.n == 0:
        return {}
    config = LocalConfig(deadline=deadline)
    inj = variant in ("injective", "bijective")
    surj = variant in ("surjective", "bijective")
    domains = []
    for v in g.vertices:
        dom = []
        for a in h.vertices:
            if g.has_loop(v) and not h.has_loop(a):
                continue
            da, dv = h.degree(a), g.degree(v)
            if variant == "injective" and da < dv:
                continue
            if variant == "bijective" and da != dv:
                continue
            if variant == "surjective" and da > dv:
                continue
            dom.append(a)
        if not dom:
            return None
        domains.append(dom)
    conflicts = _conflict_sets(g) if inj else None
    nodes = 0
    hom: dict[int, int] = {}

    def coverage_ok(w: int) -> bool:
        needed = set(h.neighbors(hom[w]))
        free = 0
        for u in g.neighbors(w):
            if u in hom:
                needed.discard(hom[u])
            else:
                free += 1
        return len(needed) <= free

    def extend(v: int) -> Optional[dict[int, int]]:
        nonlocal nodes
        _check_deadline(config)
        if v == g.n:
            return dict(hom)
        for a in domains[v]:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(f"oracle exceeded {node_budget} nodes")
            ok = True
            for u in g.neighbors(v):
                if u in hom and not h.has_edge(hom[u], a):
                    ok = False
                    break
                if u == v and not h.has_edge(a, a):
                    ok = False
                    break
            if ok and inj:
                for u in conflicts[v]:
                    if u in hom and hom[u] == a:
                        ok = False
                        break
            if ok:
                hom[v] = a
                if surj:
                    for w in set(g.neighbors(v)) | {v}:
                        if w in hom and not coverage_ok(w):
                            ok = False
                            break
                if ok:
                    res = extend(v + 1)
                    if res is not None:
                        return res
                del hom[v]
        return None

    return extend(0)


def _conflict_sets(g: Graph) -> list[frozenset[int]]:
    """conflicts[v] = vertices u != v sharing a neighbor with v (loops make a
    vertex its own neighbor, so looped neighbors induce conflicts too)."""
    conf = [set() for _ in range(g.n)]
    for w in g.vertices:
        nb = sorted(g.neighbors(w))
        for i, u in enumerate(nb):
            for v in nb[i + 1:]:
                conf[u].add(v)
                conf[v].add(u)
    return [frozenset(c) for c in conf]


# ---------------------------------------------------------------------------
# LIHom / LBHom: separator recursion with neighborhood-image guessing


def solve_lihom(g: Graph, h: Graph, config: Optional[LocalConfig] = None) -> Optional[dict[int, int]]:
    """A locally injective homomorphism g -> h, or None."""
    return _solve_local(g, h, "injective", config or LocalConfig())


def solve_lbhom(g: Graph, h: Graph, config: Optional[LocalConfig] = None) -> Optional[dict[int, int]]:
    """A locally bijective homomorphism g -> h, or None."""
    return _solve_local(g, h, "bijective", config or LocalConfig())


def _solve_local(g: Graph, h: Graph, variant: str, config: LocalConfig):
    if g.n == 0:
        return {}
    if g.max_degree() > h.max_degree():
        return None
    lists = {}
    for v in g.vertices:
        dom = []
        for a in h.vertices:
            if g.has_loop(v) and not h.has_loop(a):
                continue
            if variant == "injective" and h.degree(a) < g.degree(v):
                continue
            if variant == "bijective" and h.degree(a) != g.degree(v):
                continue
            dom.append(a)
        if not dom:
            return None
        lists[v] = frozenset(dom)
    inst = LocalInstance(g, h, lists, {})
    return _sigma_solve(inst, frozenset(g.vertices), config)


def _sigma_solve(inst: LocalInstance, active: frozenset[int], config: LocalConfig):
    """Locally injective list homomorphism on g[active] with exact
    neighborhood images prescribed by inst.sigma."""
    _check_deadline(config)
    if not active:
        return {}
    g = inst.g
    comps = _components_within(g, active)
    if len(comps) > 1:
        merged: dict[int, int] = {}
        for comp in comps:
            sub = _sigma_solve(inst, comp, config)
            if sub is None:
                return None
            merged.update(sub)
        return merged

    product = 1
    for v in active:
        product *= len(inst.lists[v])
        if product > config.leaf_product_cap:
            break
    if len(active) <= config.leaf_vertex_cap or product <= config.leaf_product_cap:
        return _local_leaf(inst, active, config)

    sub_graph, idx = g.induced(active)
    back = {i: v for v, i in idx.items()}
    m = sub_graph.edge_count()
    budget = min(sub_graph.n, max(1, math.ceil(config.separator_c * math.sqrt(max(m, 1)))))
    sep = _usable_separator(sub_graph, budget, config)
    if sep is None:
        return _local_leaf(inst, active, config)
    s_vertices = sorted(back[i] for i in sep.s)
    side1 = frozenset(back[i] for i in sep.v1) | frozenset(s_vertices)
    side2 = frozenset(back[i] for i in sep.v2) | frozenset(s_vertices)

    h = inst.h
    all_colors = frozenset(h.vertices)
    conflicts = _conflict_sets(g)

    for phi in _pinned_colorings(inst, active, s_vertices, conflicts, config):
        known = {
            v: frozenset(phi[u] for u in g.neighbors(v) if u in phi)
            for v in s_vertices
        }
        ok = True
        for v in s_vertices:
            if v in inst.sigma and not known[v] <= inst.sigma[v]:
                ok = False
                break
        if not ok:
            continue
        for splits in _split_choices(inst, s_vertices, known, all_colors):
            halves = []
            for side_index, side in enumerate((side1, side2)):
                sigma = {w: inst.sigma[w] for w in inst.sigma if w in side and w not in splits}
                lists = {w: inst.lists[w] for w in side}
                for v in s_vertices:
                    lists[v] = frozenset([phi[v]])
                    sigma[v] = splits[v][side_index] | known[v]
                sub_inst = LocalInstance(g, h, lists, sigma)
                halves.append(_sigma_solve(sub_inst, side, config))
                if halves[-1] is None:
                    break
            if halves[-1] is None:
                continue
            merged = dict(phi)
            merged.update(halves[0])
            merged.update(halves[1])
            return merged
    return None


def _components_within(g: Graph, active: frozenset[int]) -> list[frozenset[int]]:
    seen = set()
    comps = []
    for root in sorted(active):
        if root in seen:
            continue
        comp = {root}
        seen.add(root)
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in active and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def _local_leaf(inst: LocalInstance, active: frozenset[int], config: LocalConfig):
    """Enumerate list-respecting maps of g[active]; check edges, injectivity
    around every vertex, and exact images for sigma-constrained vertices."""
    g, h = inst.g, inst.h
    order = sorted(active)
    conflicts = _conflict_sets(g)
    hom: dict[int, int] = {}

    def images_exact(v: int) -> bool:
        img = frozenset(hom[u] for u in g.neighbors(v) if u in active)
        return img == inst.sigma[v]

    def extend(i: int):
        _check_deadline(config)
        if i == len(order):
            for v in order:
                if v in inst.sigma and not images_exact(v):
                    return None
            return dict(hom)
        v = order[i]
        for a in sorted(inst.lists[v]):
            ok = h.has_edge(a, a) if g.has_loop(v) else True
            if ok:
                for u in g.neighbors(v):
                    if u in hom and not h.has_edge(hom[u], a):
                        ok = False
                        break
            if ok:
                for u in conflicts[v]:
                    if u in active and u in hom and hom[u] == a:
                        ok = False
                        break
            if ok:
                hom[v] = a
                res = extend(i + 1)
                if res is not None:
                    return res
                del hom[v]
        return None

    return extend(0)


def _usable_separator(sub_graph: Graph, budget: int, config: LocalConfig):
    heur = heuristic_separator(sub_graph, config.beta)
    if heur is not None and not (heur.v1 and heur.v2):
        heur = None
    if heur is not None and len(heur.s) <= budget:
        return heur
    for max_size in (budget, sub_graph.n):
        try:
            sep = find_balanced_separator(
                sub_graph, max_size, config.beta, config.separator_work_budget
            )
        except BudgetExceededError:
            sep = None
        if sep is not None and sep.v1 and sep.v2:
            return sep
    return heur


def _pinned_colorings(inst, active, s_vertices, conflicts, config):
    """List-respecting colorings of the separator, pruned on edges and on
    common-neighbor clashes inside the separator."""
    g, h = inst.g, inst.h
    phi: dict[int, int] = {}

    def extend(i: int):
        _check_deadline(config)
        if i == len(s_vertices):
            yield dict(phi)
            return
        v = s_vertices[i]
        for a in sorted(inst.lists[v]):
            if g.has_loop(v) and not h.has_edge(a, a):
                continue
            ok = True
            for u in g.neighbors(v):
                if u in phi and not h.has_edge(phi[u], a):
                    ok = False
                    break
            if ok:
                for u in conflicts[v]:
                    if u in phi and phi[u] == a:
                        ok = False
                        break
            if ok:
                phi[v] = a
                yield from extend(i + 1)
                del phi[v]

    yield from extend(0)


def _subsets_by_card_colex(colors: frozenset[int]):
    ordered = sorted(colors)
    for size in range(len(ordered) + 1):
        for combo in combinations(ordered, size):
            yield frozenset(combo)


def _split_choices(inst, s_vertices, known, all_colors):
    """Per separator vertex: ordered disjoint (side1, side2) image parts.

    Constrained vertices must partition their outstanding requirement; free
    vertices may leave colors unused.  Yields dicts v -> (part1, part2).
    """

    def options(v):
        if v in inst.sigma:
            leftover = inst.sigma[v] - known[v]
            for part1 in _subsets_by_card_colex(leftover):
                yield (part1, leftover - part1)
        else:
            extra = all_colors - known[v]
            for part1 in _subsets_by_card_colex(extra):
                for part2 in _subsets_by_card_colex(extra - part1):
                    yield (part1, part2)

    def rec(i):
        if i == len(s_vertices):
            yield {}
            return
        v = s_vertices[i]
        for choice in options(v):
            for rest in rec(i + 1):
                rest[v] = choice
                yield rest

    yield from rec(0)


# ---------------------------------------------------------------------------
# LSHom for the 3-path and the 4-cycle

P3_ENDS = frozenset({0, 2})
P3_MID = 1


def sigma_p3_solve(inst: SurjInstance, config: Optional[LocalConfig] = None) -> Optional[dict[int, int]]:
    """Solve the generalized covering problem: returns x -> {0,2} colors, or
    None.  Free x vertices (never constrained) come back colored 0."""
    config = config or LocalConfig()
    state = _P3State(
        inst.g,
        set(inst.xs),
        set(inst.ys),
        {y: frozenset(inst.sigma.get(y, frozenset())) for y in inst.ys},
        config,
    )
    return state.solve()


def oracle_sigma_p3(inst: SurjInstance) -> Optional[dict[int, int]]:
    """Exhaustive reference for sigma_p3_solve: try all end-colorings."""
    xs = sorted(inst.xs)
    from itertools import product as iproduct

    for combo in iproduct(sorted(P3_ENDS), repeat=len(xs)):
        hom = dict(zip(xs, combo))
        if all(
            s <= {hom[u] for u in inst.g.neighbors(y) if u in inst.xs}
            for y, s in inst.sigma.items()
        ):
            return hom
    return None


class _P3State:
    def __init__(self, g, xs, ys, sigma, config):
        self.g = g
        self.xs = xs
        self.ys = ys
        self.sigma = sigma
        self.config = config
        self.assignment: dict[int, int] = {}

    def solve(self) -> Optional[dict[int, int]]:
        if not self._solve_rec(frozenset(self.xs), frozenset(self.ys), dict(self.sigma)):
            return None
        return self.assignment

    # The recursion carries explicit (xs, ys, sigma) views; assignments of
    # successful branches accumulate in self.assignment, and a failed branch's
    # writes are always overwritten by whichever branch finally succeeds on
    # the same vertices.

    def _solve_rec(self, xs, ys, sigma) -> bool:
        _check_deadline(self.config)
        xs, ys, sigma, feasible = self._reduce(xs, ys, sigma)
        if not feasible:
            return False
        if not ys:
            for x in sorted(xs):
                self.assignment[x] = 0
            return True
        comps = _components_within(self.g, xs | ys)
        if len(comps) > 1:
            for comp in comps:
                if not self._solve_rec(
                    xs & comp, ys & comp, {y: sigma[y] for y in sigma if y in comp}
                ):
                    return False
            return True
        if len(xs) <= self.config.lshom_leaf_x_cap:
            return self._leaf(xs, ys, sigma)
        n = len(xs) + len(ys)
        t = max(1, math.ceil(n ** (1 / 3)))
        m = sum(1 for u, v in self.g.edges if u in xs and v in ys or u in ys and v in xs)
        dense_threshold = math.ceil(
            (self.config.density_c / 3) * (n ** (4 / 3)) * math.log2(max(n, 2))
        )
        if self.config.force_dense or m > dense_threshold:
            try:
                bic = _find_biclique_classes(self.g, xs, ys, t, self.config)
            except BudgetExceededError:
                bic = None
            if bic is not None:
                return self._biclique_branch(xs, ys, sigma, bic)
        return self._separator_branch(xs, ys, sigma)

    def _reduce(self, xs, ys, sigma):
        xs, ys = set(xs), set(ys)
        sigma = dict(sigma)
        changed = True
        while changed:
            changed = False
            for y in sorted(ys):
                if not sigma[y]:
                    ys.discard(y)
                    del sigma[y]
                    changed = True
                    continue
                nbrs = [u for u in self.g.neighbors(y) if u in xs]
                if not nbrs or len(sigma[y]) > len(nbrs):
                    return xs, ys, sigma, False
            for x in sorted(xs):
                if not any(u in ys for u in self.g.neighbors(x)):
                    xs.discard(x)
                    self.assignment[x] = 0
                    changed = True
        return frozenset(xs), frozenset(ys), sigma, True

    def _leaf(self, xs, ys, sigma) -> bool:
        order = sorted(xs)
        from itertools import product as iproduct

        for combo in iproduct((0, 2), repeat=len(order)):
            hom = dict(zip(order, combo))
            if all(
                s <= {hom[u] for u in self.g.neighbors(y) if u in xs}
                for y, s in sigma.items()
            ):
                self.assignment.update(hom)
                return True
        return False

    def _biclique_branch(self, xs, ys, sigma, bic) -> bool:
        bx, by = bic
        # all of bx one end color
        for color in (0, 2):
            sig2 = dict(sigma)
            ok = True
            for y in sorted(ys):
                if any(u in bx for u in self.g.neighbors(y)):
                    sig2[y] = sig2[y] - {color}
            if self._solve_rec(xs - bx, ys, sig2):
                for x in sorted(bx):
                    self.assignment[x] = color
                return True
        # mixed: some ordered pair realizes both ends; removing by keeps
        # every biclique y happy
        for x1 in sorted(bx):
            for x2 in sorted(bx):
                if x1 == x2:
                    continue
                sig2 = {y: sigma[y] for y in sigma if y not in by}
                for y in sorted(ys - by):
                    s = sig2[y]
                    if x1 in self.g.neighbors(y):
                        s = s - {0}
                    if x2 in self.g.neighbors(y):
                        s = s - {2}
                    sig2[y] = s
                if self._solve_rec(xs - {x1, x2}, ys - by, sig2):
                    self.assignment[x1] = 0
                    self.assignment[x2] = 2
                    return True
        return False

    def _separator_branch(self, xs, ys, sigma) -> bool:
        active = xs | ys
        sub_graph, idx = self.g.induced(active)
        back = {i: v for v, i in idx.items()}
        n = sub_graph.n
        budget = min(
            n,
            max(
                1,
                math.ceil(
                    self.config.separator_c
                    * (n ** (2 / 3))
                    * math.sqrt(math.log2(max(n, 2)))
                ),
            ),
        )
        sep = _usable_separator(sub_graph, budget, self.config)
        if sep is None:
            return self._leaf(xs, ys, sigma)
        s_vertices = sorted(back[i] for i in sep.s)
        side1 = frozenset(back[i] for i in sep.v1)
        side2 = frozenset(back[i] for i in sep.v2)
        s_x = [v for v in s_vertices if v in xs]
        s_y = [v for v in s_vertices if v in ys]

        from itertools import product as iproduct

        for combo in iproduct((0, 2), repeat=len(s_x)):
            phi = dict(zip(s_x, combo))
            leftovers = []
            for y in s_y:
                seen = {phi[u] for u in self.g.neighbors(y) if u in phi}
                leftovers.append(sorted(sigma[y] - seen))
            for split_bits in iproduct(*[range(2 ** len(l)) for l in leftovers]):
                split1 = {}
                split2 = {}
                for y, leftover, bits in zip(s_y, leftovers, split_bits):
                    part1 = frozenset(
                        c for j, c in enumerate(leftover) if (bits >> j) & 1 == 0
                    )
                    split1[y] = part1
                    split2[y] = frozenset(leftover) - part1
                snapshot = dict(self.assignment)
                if self._try_sides(xs, ys, sigma, phi, side1, side2, s_x, s_y, split1, split2):
                    for x, c in phi.items():
                        self.assignment[x] = c
                    return True
                self.assignment = snapshot
        return False

    def _try_sides(self, xs, ys, sigma, phi, side1, side2, s_x, s_y, split1, split2) -> bool:
        for side, split in ((side1, split1), (side2, split2)):
            sub_xs = (xs & side) - set(s_x)
            sub_ys = (ys & side) | set(s_y)
            sub_sigma = {}
            for y in sub_ys:
                if y in split:
                    sub_sigma[y] = split[y]
                else:
                    s = sigma[y]
                    for u in self.g.neighbors(y):
                        if u in phi:
                            s = s - {phi[u]}
                    sub_sigma[y] = s
            if not self._solve_rec(frozenset(sub_xs), frozenset(sub_ys), sub_sigma):
                return False
        return True


def find_biclique(g: Graph, t: int, budget: int = 2_000_000):
    """Vertex-disjoint sets (A, B), |A| = |B| = t, with every cross pair
    adjacent; None if no such biclique exists."""
    if t < 1:
        raise MalformedInputError("biclique size must be at least 1")
    work = 0
    verts = sorted(g.vertices)
    for a_combo in combinations(verts, t):
        work += 1
        if work > budget:
            raise BudgetExceededError(f"biclique search exceeded {budget} candidates")
        common = None
        for a in a_combo:
            nb = g.neighbors(a)
            common = nb if common is None else common & nb
            if len(common) < t:
                break
        if common is None:
            continue
        eligible = sorted(common - set(a_combo))
        if len(eligible) >= t:
            return frozenset(a_combo), frozenset(eligible[:t])
    return None


def _find_biclique_classes(g, xs, ys, t, config):
    """Biclique with the A side inside xs and the B side inside ys."""
    work = 0
    for a_combo in combinations(sorted(xs), t):
        work += 1
        if work > config.biclique_budget:
            raise BudgetExceededError("biclique search exceeded budget")
        common = None
        for a in a_combo:
            nb = frozenset(u for u in g.neighbors(a) if u in ys)
            common = nb if common is None else common & nb
            if len(common) < t:
                break
        if common is None or len(common) < t:
            continue
        return frozenset(a_combo), frozenset(sorted(common)[:t])
    return None


def solve_lshom_p3(g: Graph, config: Optional[LocalConfig] = None) -> Optional[dict[int, int]]:
    """A locally surjective homomorphism onto the 3-path (vertices 0-1-2),
    or None.  Graphs with an isolated vertex have none; the empty graph has
    the empty one."""
    config = config or LocalConfig()
    if g.n == 0:
        return {}
    if g.min_degree() == 0:
        return None
    parts = g.bipartition()
    if parts is None:
        return None
    hom: dict[int, int] = {}
    for comp in g.components():
        a = frozenset(v for v in comp if v in parts[0])
        b = comp - a
        sub = _component_p3(g, a, b, config)
        if sub is None:
            sub = _component_p3(g, b, a, config)
        if sub is None:
            return None
        hom.update(sub)
    return hom


def _component_p3(g, xs, ys, config):
    if not xs or not ys:
        return None
    inst = SurjInstance(g, xs, ys, {y: P3_ENDS for y in ys})
    res = sigma_p3_solve(inst, config)
    if res is None:
        return None
    hom = {y: P3_MID for y in ys}
    hom.update(res)
    return hom


def solve_lshom_c4(g: Graph, config: Optional[LocalConfig] = None) -> Optional[dict[int, int]]:
    """A locally surjective homomorphism onto the 4-cycle 0-1-2-3-0, or None.

    Runs the 3-path machinery twice per component with the class roles
    swapped; both must succeed, and the two colorings compose into the
    4-cycle witness (second coloring shifted by one around the cycle).
    """
    config = config or LocalConfig()
    if g.n == 0:
        return {}
    if g.min_degree() == 0:
        return None
    parts = g.bipartition()
    if parts is None:
        return None
    hom: dict[int, int] = {}
    for comp in g.components():
        a = frozenset(v for v in comp if v in parts[0])
        b = comp - a
        if not a or not b:
            return None
        r1 = sigma_p3_solve(SurjInstance(g, a, b, {y: P3_ENDS for y in b}), config)
        if r1 is None:
            return None
        r2 = sigma_p3_solve(SurjInstance(g, b, a, {y: P3_ENDS for y in a}), config)
        if r2 is None:
            return None
        for z in a:
            hom[z] = r1[z]
        for z in b:
            hom[z] = r2[z] + 1
    return hom
