"""Balanced vertex separators: exhaustive minimum search and a BFS heuristic.

Balance is relative to the surviving vertices: a Separation (S, V1, V2) is
valid when V1 and V2 see no edge between them and |Vi| <= beta * (|V1|+|V2|),
compared exactly over rationals.  With any vertex surviving this forces both
sides nonempty, which is what the divide-and-conquer callers need for
progress.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import BudgetExceededError, MalformedInputError
from .graph import Graph

DEFAULT_BETA = Fraction(2, 3)


@dataclass(frozen=True)
class Separation:
    s: frozenset[int]
    v1: frozenset[int]
    v2: frozenset[int]
    beta: Fraction


def verify_separation(g: Graph, sep: Separation) -> bool:
    """Check every Separation invariant; solvers call this before trusting one."""
    if not (Fraction(1, 2) < sep.beta < 1):
        return False
    parts = [sep.s, sep.v1, sep.v2]
    if sum(len(p) for p in parts) != g.n:
        return False
    if sep.s | sep.v1 | sep.v2 != frozenset(g.vertices):
        return False
    for u, v in g.edges:
        if (u in sep.v1 and v in sep.v2) or (u in sep.v2 and v in sep.v1):
            return False
    rem = len(sep.v1) + len(sep.v2)
    if len(sep.v1) > sep.beta * rem or len(sep.v2) > sep.beta * rem:
        return False
    return True


def colex_combinations(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Size-k subsets of range(n) in colexicographic order."""
    if k == 0:
        yield ()
        return
    if k > n:
        return
    for last in range(k - 1, n):
        for rest in colex_combinations(last, k - 1):
            yield rest + (last,)


def _side_split(
    g: Graph, s: set[int], beta: Fraction
) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Deterministic grouping of the components of G-S into two balanced
    sides, or None."""
    remaining = [v for v in g.vertices if v not in s]
    rem = len(remaining)
    if rem == 0:
        return frozenset(), frozenset()
    # hi is the largest integer side size with size <= beta*rem
    hi = int(beta * rem)
    if Fraction(hi) > beta * rem:
        hi -= 1
    lo = rem - hi
    if lo > hi:
        return None
    seen = set(s)
    comps = []
    for root in remaining:
        if root in seen:
            continue
        comp = {root}
        seen.add(root)
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        if len(comp) > hi:
            return None
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    sizes = [len(c) for c in comps]
    # suffix-achievable subset sums as bitsets
    suffix = [0] * (len(sizes) + 1)
    suffix[len(sizes)] = 1
    for i in range(len(sizes) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (suffix[i + 1] << sizes[i])
    target = None
    for t in range(lo, hi + 1):
        if (suffix[0] >> t) & 1:
            target = t
            break
    if target is None:
        return None
    v1 = []
    need = target
    for i, comp in enumerate(comps):
        if need >= sizes[i] and (suffix[i + 1] >> (need - sizes[i])) & 1:
            v1.extend(comp)
            need -= sizes[i]
    assert need == 0
    v1set = frozenset(v1)
    v2set = frozenset(remaining) - v1set
    return v1set, v2set


def find_balanced_separator(
    g: Graph,
    max_size: int,
    beta: Fraction = DEFAULT_BETA,
    work_budget: int = 20_000_000,
) -> Optional[Separation]:
    """Minimum-size balanced separator with |S| <= max_size, or None.

    Sizes are searched 0, 1, ..., max_size; within one size, candidate
    subsets are enumerated in colexicographic order, so the returned S is the
    colex-first among minimum-size balanced separators.  A caller that gets
    None may report the graph as not being a string graph.

    Raises BudgetExceededError (carrying the last fully searched size) if the
    subset enumeration exceeds work_budget before finishing.
    """
    if not (Fraction(1, 2) < beta < 1):
        raise MalformedInputError("beta must lie strictly between 1/2 and 1")
    if max_size > g.n:
        max_size = g.n
    if max_size < 0:
        return None
    work = 0
    for size in range(max_size + 1):
        for combo in colex_combinations(g.n, size):
            work += 1
            if work > work_budget:
                raise BudgetExceededError(
                    f"separator search exceeded {work_budget} candidate subsets",
                    partial_bound=size - 1,
                )
            s = set(combo)
            split = _side_split(g, s, beta)
            if split is not None:
                return Separation(frozenset(s), split[0], split[1], beta)
    return None


def heuristic_separator(g: Graph, beta: Fraction = DEFAULT_BETA) -> Optional[Separation]:
    """Best-effort BFS-layering separator with greedy refinement.

    Whatever comes back satisfies the Separation invariants; may return None.
    """
    if not (Fraction(1, 2) < beta < 1):
        raise MalformedInputError("beta must lie strictly between 1/2 and 1")
    if g.n == 0:
        return None
    roots = [0]
    by_degree = max(g.vertices, key=lambda v: (g.degree(v), -v))
    if by_degree not in roots:
        roots.append(by_degree)
    best: Optional[Separation] = None
    for root in roots:
        for layer in _bfs_layers(g, root):
            s = _shrink_cut(g, set(layer), beta)
            if s is None:
                continue
            split = _side_split(g, s, beta)
            if split is None:
                continue
            cand = Separation(frozenset(s), split[0], split[1], beta)
            if verify_separation(g, cand) and (best is None or len(cand.s) < len(best.s)):
                best = cand
    return best


def _bfs_layers(g: Graph, root: int) -> list[list[int]]:
    dist = {root: 0}
    queue = [root]
    while queue:
        u = queue.pop(0)
        for w in sorted(g.neighbors(u)):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    depth = max(dist.values())
    layers = [[] for _ in range(depth + 1)]
    for v in sorted(dist):
        layers[dist[v]].append(v)
    return layers


def _shrink_cut(g: Graph, s: set[int], beta: Fraction) -> Optional[set[int]]:
    """Greedily drop vertices from s while a balanced split still exists."""
    if _side_split(g, s, beta) is None:
        return None
    for v in sorted(s):
        trial = s - {v}
        if _side_split(g, trial, beta) is not None:
            s = trial
    return s
