"""homlab: solvers and hardness-instance generators for weighted and locally
constrained graph homomorphism problems on string/segment graphs."""

from .errors import (
    BudgetExceededError,
    ContractViolationError,
    DialectError,
    HomlabError,
    MalformedInputError,
    WeightOverflowError,
)
from .graph import Graph
from .weights import NEG_INF, ListAssignment, WeightModel
from .homomorphism import (
    happy_vertices,
    is_homomorphism,
    is_locally_bijective,
    is_locally_injective,
    is_locally_surjective,
    weight_of,
)
from .star import ForbiddenWitness, forbidden_subgraph_witness, has_property_star
from .induced_paths import longest_induced_path_length
from .models import (
    weight_model_independent_set,
    weight_model_maxcut,
    weight_model_oct,
)
from .geometry import (
    Segment,
    SegmentArrangement,
    intersection_graph,
    segments_intersect,
    slope_count,
)
from .separator import (
    Separation,
    find_balanced_separator,
    heuristic_separator,
    verify_separation,
)
from .whom import (
    INFEASIBLE,
    WhomConfig,
    WhomInstance,
    WhomResult,
    count_whom,
    oracle_whom,
    preprocess,
    solve_whom,
)
from .local import (
    LocalConfig,
    LocalInstance,
    SurjInstance,
    find_biclique,
    oracle_local,
    oracle_sigma_p3,
    sigma_p3_solve,
    solve_lbhom,
    solve_lihom,
    solve_lshom_c4,
    solve_lshom_p3,
)

__all__ = [name for name in dir() if not name.startswith("_")]
