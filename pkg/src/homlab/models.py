"""Weight models turning classic optimization problems into max-weight
homomorphism instances."""

from __future__ import annotations

from .graph import Graph
from .targets import loop_edge, loop_pendant, oct_target
from .weights import WeightModel


def weight_model_maxcut(g: Graph) -> tuple[Graph, WeightModel]:
    """Target a=0, b=1 both looped; cut edges (mapped to ab) score 1.

    The optimum over homomorphisms equals the maximum cut of g.
    """
    h = loop_edge()
    edge = {((u, v), (0, 1)): 1 for u, v in g.edges}
    return h, WeightModel(edge=edge)


def weight_model_oct(g: Graph) -> tuple[Graph, WeightModel]:
    """Looped a=0 plus adjacent b=1, c=2; vertices mapped to b or c score 1.

    The b/c preimages induce a bipartite subgraph, so the optimum equals
    n minus the minimum odd cycle transversal size.
    """
    h = oct_target()
    vertex = {}
    for v in g.vertices:
        vertex[(v, 1)] = 1
        vertex[(v, 2)] = 1
    return h, WeightModel(vertex=vertex)


def weight_model_independent_set(g: Graph) -> tuple[Graph, WeightModel]:
    """Loopless a=0 scores 1, looped b=1 scores 0; optimum is alpha(g)."""
    h = loop_pendant()
    vertex = {(v, 0): 1 for v in g.vertices}
    return h, WeightModel(vertex=vertex)
