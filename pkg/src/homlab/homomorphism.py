"""Homomorphism predicates, weights, and the locally constrained variants."""

from __future__ import annotations

from typing import Mapping

from .errors import ContractViolationError, MalformedInputError
from .graph import Graph
from .weights import ExtWeight, WeightModel, ext_add

Homomorphism = Mapping[int, int]


def _check_map(g: Graph, h: Graph, hom: Homomorphism) -> None:
    if set(hom.keys()) != set(g.vertices):
        raise MalformedInputError("map is not total on V(G)")
    for v, a in hom.items():
        if not (0 <= a < h.n):
            raise MalformedInputError(f"image {a} of vertex {v} outside V(H)")


def is_homomorphism(g: Graph, h: Graph, hom: Homomorphism) -> bool:
    """True iff every edge of G, loops included, maps to an edge of H."""
    _check_map(g, h, hom)
    return all(h.has_edge(hom[u], hom[v]) for u, v in g.edges)


def weight_of(g: Graph, h: Graph, w: WeightModel, hom: Homomorphism) -> ExtWeight:
    """Total weight of hom: vertex terms plus edge terms; NEG_INF absorbs."""
    if not is_homomorphism(g, h, hom):
        raise ContractViolationError("weight_of requires a valid homomorphism")
    terms = [w.vertex_weight(v, hom[v]) for v in g.vertices]
    terms += [w.edge_weight((u, v), (hom[u], hom[v])) for u, v in g.edges]
    return ext_add(*terms)


def _neighborhood_image(g: Graph, h: Graph, hom: Homomorphism, v: int) -> list[int]:
    return [hom[u] for u in g.neighbors(v)]


def is_locally_injective(g: Graph, h: Graph, hom: Homomorphism) -> bool:
    if not is_homomorphism(g, h, hom):
        raise ContractViolationError("locally constrained checks require a homomorphism")
    for v in g.vertices:
        img = _neighborhood_image(g, h, hom, v)
        if len(set(img)) != len(img):
            return False
    return True


def is_locally_surjective(g: Graph, h: Graph, hom: Homomorphism) -> bool:
    if not is_homomorphism(g, h, hom):
        raise ContractViolationError("locally constrained checks require a homomorphism")
    for v in g.vertices:
        if set(_neighborhood_image(g, h, hom, v)) != set(h.neighbors(hom[v])):
            return False
    return True


def is_locally_bijective(g: Graph, h: Graph, hom: Homomorphism) -> bool:
    if not is_homomorphism(g, h, hom):
        raise ContractViolationError("locally constrained checks require a homomorphism")
    for v in g.vertices:
        img = _neighborhood_image(g, h, hom, v)
        if len(set(img)) != len(img):
            return False
        if set(img) != set(h.neighbors(hom[v])):
            return False
    return True


def happy_vertices(g: Graph, h: Graph, hom: Homomorphism) -> frozenset[int]:
    """Vertices v with h(N_G(v)) = N_H(h(v)); all of them iff locally surjective."""
    if not is_homomorphism(g, h, hom):
        raise ContractViolationError("happy_vertices requires a homomorphism")
    return frozenset(
        v
        for v in g.vertices
        if set(_neighborhood_image(g, h, hom, v)) == set(h.neighbors(hom[v]))
    )
