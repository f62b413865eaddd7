"""Independent brute-force oracles for the source side of every reduction
and for cross-validation in tests.

Everything here is plain enumeration, deliberately separate from the solver
code paths it is used to check.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .graph import Graph


def cut_size(g: Graph, side_a: frozenset[int] | set[int]) -> int:
    return sum(1 for u, v in g.edges if (u in side_a) != (v in side_a))


def max_cut(g: Graph) -> int:
    """Maximum cut by enumerating 2^(n-1) partitions (vertex 0 pinned)."""
    if g.n == 0:
        return 0
    best = 0
    edges = g.sorted_edges()
    for bits in range(2 ** (g.n - 1)):
        mask = bits << 1  # vertex 0 stays on side 0
        size = 0
        for u, v in edges:
            if ((mask >> u) ^ (mask >> v)) & 1:
                size += 1
        if size > best:
            best = size
    return best


def max_cut_conditioned(g: Graph, core: Sequence[int]) -> int:
    """Exact maximum cut via enumeration of core colorings and independent
    optimization of each component of G - core.

    Exhaustive (the per-component optimum is itself enumerated), just
    factored; intended for gadget graphs whose non-core components are tiny.
    """
    core = sorted(set(core))
    core_set = set(core)
    rest, _ = g.induced([v for v in g.vertices if v not in core_set])
    rest_ids = [v for v in g.vertices if v not in core_set]
    comps = []
    seen = set()
    for i in range(len(rest_ids)):
        if i in seen:
            continue
        comp = {i}
        seen.add(i)
        stack = [i]
        while stack:
            u = stack.pop()
            for w in rest.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(sorted(rest_ids[j] for j in comp))
    core_edges = [(u, v) for u, v in g.edges if u in core_set and v in core_set]
    best = None
    for assign in product((0, 1), repeat=len(core)):
        side = dict(zip(core, assign))
        total = sum(1 for u, v in core_edges if side[u] != side[v])
        for comp in comps:
            comp_best = 0
            for sub in product((0, 1), repeat=len(comp)):
                s = dict(zip(comp, sub))
                val = 0
                for v in comp:
                    for w in g.neighbors(v):
                        if w in side:
                            if s[v] != side[w]:
                                val += 1
                        elif w in s and w > v:
                            if s[v] != s[w]:
                                val += 1
                        elif w == v:
                            pass
                if val > comp_best:
                    comp_best = val
            total += comp_best
        if best is None or total > best:
            best = total
    return best if best is not None else 0


def max_bisection(g: Graph) -> Optional[int]:
    """Largest cut over partitions with equal sides, None when n is odd."""
    if g.n % 2 == 1:
        return None
    if g.n == 0:
        return 0
    half = g.n // 2
    best = 0
    for side in combinations(range(1, g.n), half):
        # vertex 0 pinned to the complement side
        a = set(side)
        size = cut_size(g, a)
        if size > best:
            best = size
    return best


def every_max_cut_is_bisection(g: Graph) -> bool:
    if g.n == 0:
        return True
    best = max_cut(g)
    for bits in range(2 ** (g.n - 1)):
        mask = bits << 1
        a = {v for v in g.vertices if (mask >> v) & 1}
        if cut_size(g, a) == best and 2 * len(a) != g.n:
            return False
    return True


def independence_number(g: Graph) -> int:
    """alpha(g); a vertex with a loop is never in an independent set."""
    best = 0
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))

    def grow(idx: int, chosen: set[int]):
        nonlocal best
        if len(chosen) + (len(order) - idx) <= best:
            return
        if idx == len(order):
            best = max(best, len(chosen))
            return
        v = order[idx]
        if v not in chosen and not (g.neighbors(v) & chosen) and not g.has_loop(v):
            chosen.add(v)
            grow(idx + 1, chosen)
            chosen.remove(v)
        grow(idx + 1, chosen)

    grow(0, set())
    return best


def nae_satisfiable(num_vars: int, clauses: Iterable[Sequence[int]]) -> bool:
    """Not-all-equal satisfiability of all-positive clauses (1-based vars)."""
    clauses = [tuple(c) for c in clauses]
    for bits in range(2**num_vars):
        ok = True
        for c in clauses:
            vals = {(bits >> (u - 1)) & 1 for u in c}
            if len(vals) != 2:
                ok = False
                break
        if ok:
            return True
    return False


def sat_satisfiable(num_vars: int, clauses: Iterable[Sequence[int]]) -> bool:
    """3-SAT satisfiability by enumeration; literals are signed 1-based ints."""
    clauses = [tuple(c) for c in clauses]
    for bits in range(2**num_vars):
        ok = True
        for c in clauses:
            if not any(
                ((bits >> (abs(l) - 1)) & 1) == (1 if l > 0 else 0) for l in c
            ):
                ok = False
                break
        if ok:
            return True
    return False
