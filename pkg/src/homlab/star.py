"""The no-two-vertices-with-two-common-neighbors property and its
forbidden-induced-subgraph characterization."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from .graph import Graph
from .targets import forbidden_seven


def has_property_star(h: Graph) -> bool:
    """True iff no two distinct vertices share two or more common neighbors.

    A loop at v puts v in N(v).
    """
    for u, v in combinations(h.vertices, 2):
        if len(h.neighbors(u) & h.neighbors(v)) >= 2:
            return False
    return True


@dataclass(frozen=True)
class ForbiddenWitness:
    label: str               # which of the seven patterns, "a".."g"
    embedding: tuple[int, ...]  # pattern vertex i -> embedding[i] in H


def _induced_embeddings(pattern: Graph, host: Graph):
    """All induced embeddings, in deterministic order: vertex combinations
    ascending, then permutations in lexicographic order."""
    k = pattern.n
    pat_pairs = [
        (x, y, pattern.has_edge(x, y)) for x in range(k) for y in range(x, k)
    ]
    for combo in combinations(host.vertices, k):
        for perm in permutations(combo):
            ok = True
            for x, y, present in pat_pairs:
                if host.has_edge(perm[x], perm[y]) != present:
                    ok = False
                    break
            if ok:
                yield perm


def forbidden_subgraph_witness(h: Graph) -> Optional[ForbiddenWitness]:
    """An induced embedding of one of the seven forbidden patterns, searched
    in label order (a)..(g), or None if the property holds.

    Agrees with has_property_star; the equivalence is exercised exhaustively
    in the test suite.
    """
    for label, pattern in forbidden_seven().items():
        for emb in _induced_embeddings(pattern, h):
            return ForbiddenWitness(label, emb)
    return None
