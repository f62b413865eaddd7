"""Shared enumeration helpers for the test suite."""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest

from homlab.graph import Graph

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def all_labeled_graphs(n: int, loops: bool = False):
    """Every labeled graph on n vertices, optionally with every loop pattern."""
    pairs = list(combinations(range(n), 2))
    loop_slots = list(range(n)) if loops else []
    slots = pairs + [(v, v) for v in loop_slots]
    for bits in range(2 ** len(slots)):
        yield Graph(n, [slots[i] for i in range(len(slots)) if (bits >> i) & 1])


def _wl_signatures(n: int, adj: list[frozenset[int]]) -> tuple:
    colors = [len(adj[v]) for v in range(n)]
    for _ in range(n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return tuple(colors)


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant canonical edge set via refinement-restricted
    permutation search (brute force within refinement classes)."""
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    colors = _wl_signatures(n, adj)
    blocks: dict[int, list[int]] = {}
    for v in range(n):
        blocks.setdefault(colors[v], []).append(v)
    ordered_blocks = [blocks[c] for c in sorted(blocks)]
    best = None
    for perm_parts in product(*(permutations(b) for b in ordered_blocks)):
        layout = [v for part in perm_parts for v in part]
        relabel = {v: i for i, v in enumerate(layout)}
        canon = tuple(
            sorted(
                (min(relabel[u], relabel[v]), max(relabel[u], relabel[v]))
                for u, v in g.edges
            )
        )
        if best is None or canon < best:
            best = canon
    return (n, best)


def connected_graphs_up_to(max_n: int) -> dict[int, list[Graph]]:
    """All connected simple graphs up to isomorphism, by vertex count,
    generated by single-vertex augmentation with canonical deduplication."""
    out: dict[int, list[Graph]] = {1: [Graph(1)]}
    for n in range(2, max_n + 1):
        seen = {}
        for g in out[n - 1]:
            base = list(g.edges)
            for mask in range(1, 2 ** (n - 1)):
                edges = base + [
                    (u, n - 1) for u in range(n - 1) if (mask >> u) & 1
                ]
                cand = Graph(n, edges)
                key = canonical_form(cand)
                if key not in seen:
                    seen[key] = cand
        out[n] = list(seen.values())
        assert len(out[n]) == CONNECTED_COUNTS[n], (n, len(out[n]))
    return out


def random_connected_graph(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    while True:
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = Graph(n, edges)
        if g.is_connected():
            return g


@pytest.fixture(scope="session")
def connected_upto_7():
    return connected_graphs_up_to(7)
