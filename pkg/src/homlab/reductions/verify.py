"""Brute-force equivalence checking of generated instances."""

from __future__ import annotations

from typing import Optional

from ..bruteforce import max_bisection
from ..local import oracle_local
from ..weights import ListAssignment, WeightModel, ext_lt
from ..whom import INFEASIBLE, WhomInstance, oracle_whom
from .output import (
    PROBLEM_LSHOM,
    PROBLEM_MAX_BISECTION,
    PROBLEM_WHOM,
    ReductionOutput,
)


def target_answer(out: ReductionOutput, budget: int = 50_000_000, deadline=None) -> bool:
    """Decide the generated instance exhaustively at its threshold."""
    if out.problem == PROBLEM_WHOM:
        inst = WhomInstance(
            out.instance,
            out.target,
            out.weights if out.weights is not None else WeightModel(),
            out.lists
            if out.lists is not None
            else ListAssignment.full(out.instance, out.target),
        )
        res = oracle_whom(inst, node_budget=budget, deadline=deadline)
        if res.optimum is INFEASIBLE:
            return False
        return not ext_lt(res.optimum, out.threshold)
    if out.problem == PROBLEM_LSHOM:
        return (
            oracle_local(
                out.instance, out.target, "surjective",
                node_budget=budget, deadline=deadline,
            )
            is not None
        )
    if out.problem == PROBLEM_MAX_BISECTION:
        best = max_bisection(out.instance)
        return best is not None and best >= out.threshold
    raise ValueError(f"unknown problem kind {out.problem!r}")


def verify_reduction(
    source_yes: bool,
    out: ReductionOutput,
    budget: int = 50_000_000,
    deadline: Optional[float] = None,
) -> bool:
    """True iff the source answer and the generated instance's answer agree.

    Budget exhaustion raises; it is never reported as a pass or fail.
    """
    return bool(source_yes) == target_answer(out, budget, deadline)
