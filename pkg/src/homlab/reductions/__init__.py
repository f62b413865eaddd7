"""Constructive generators for every hardness reduction, plus brute-force
equivalence verification."""

from .cnf import CnfFormula, Dialect, parse_dimacs, to_dimacs
from .maxcut import (
    bisection_to_maxcut_segments,
    lemma1_output,
    lemma2_output,
    maxcut_to_bisection,
    posnae3sat_to_maxcut,
)
from .oct import is_to_oct_segments
from .output import (
    PROBLEM_LSHOM,
    PROBLEM_MAX_BISECTION,
    PROBLEM_WHOM,
    ReductionOutput,
)
from .lshom import (
    threesat_to_lshom_cycle,
    threesat_to_lshom_loopedge,
    threesat_to_lshom_path,
)
from .verify import target_answer, verify_reduction
from .whom_c4 import is_to_whom_c4

__all__ = [name for name in dir() if not name.startswith("_")]
