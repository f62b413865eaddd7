"""Generated-instance bundles with construction-time fidelity checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import ReductionFidelityError
from ..geometry import SegmentArrangement, intersection_graph, slope_count
from ..graph import Graph
from ..weights import ExtWeight, ListAssignment, WeightModel

# what the threshold means, and which oracle judges the generated instance
PROBLEM_WHOM = "whom"             # max-weight homomorphism >= threshold
PROBLEM_LSHOM = "lshom"           # locally surjective homomorphism exists
PROBLEM_MAX_BISECTION = "max-bisection"  # bisection of size >= threshold


@dataclass(frozen=True)
class ReductionOutput:
    instance: Graph
    target: Graph
    weights: Optional[WeightModel]
    lists: Optional[ListAssignment]
    threshold: Optional[ExtWeight]
    problem: str
    arrangement: Optional[SegmentArrangement] = None
    claimed_slope_count: Optional[int] = None
    notes: str = ""

    def __post_init__(self):
        if self.arrangement is not None:
            derived = intersection_graph(self.arrangement)
            if derived != self.instance:
                missing = sorted(self.instance.edges - derived.edges)
                extra = sorted(derived.edges - self.instance.edges)
                raise ReductionFidelityError(
                    f"arrangement does not realize the instance: "
                    f"missing={missing[:8]} extra={extra[:8]} "
                    f"(n={self.instance.n} vs {derived.n})"
                )
            if self.claimed_slope_count is not None:
                actual = slope_count(self.arrangement)
                if actual != self.claimed_slope_count:
                    raise ReductionFidelityError(
                        f"claimed {self.claimed_slope_count} slopes, measured {actual}"
                    )
