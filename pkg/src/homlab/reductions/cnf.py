"""CNF formulas in the two dialects the generators consume, plus DIMACS."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from ..errors import DialectError, MalformedInputError


class Dialect(Enum):
    THREE_SAT = "3sat"
    POS_NAE_3SAT = "posnae3"


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]  # literals: signed 1-based ints
    dialect: Dialect

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for c in self.clauses:
            if not c:
                raise MalformedInputError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise MalformedInputError(f"literal {lit} out of range")
            if self.dialect is Dialect.POS_NAE_3SAT:
                if any(lit < 0 for lit in c):
                    raise DialectError("all-positive clauses required")
                if not 2 <= len(set(c)) == len(c) <= 3:
                    raise DialectError("clauses must have 2 or 3 distinct variables")
            else:
                if len(c) > 3:
                    raise DialectError("clauses limited to 3 literals")

    def occurrence_counts(self) -> dict[int, int]:
        counts = {v: 0 for v in range(1, self.num_vars + 1)}
        for c in self.clauses:
            for lit in c:
                counts[abs(lit)] += 1
        return counts

    def has_both_polarities(self) -> bool:
        pos = set()
        neg = set()
        for c in self.clauses:
            for lit in c:
                (pos if lit > 0 else neg).add(abs(lit))
        return pos >= set(range(1, self.num_vars + 1)) and neg >= set(
            range(1, self.num_vars + 1)
        )

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def require_distinct_clauses(phi: CnfFormula) -> None:
    seen = set()
    for c in phi.clauses:
        key = tuple(sorted(c))
        if key in seen:
            raise DialectError(f"duplicate clause {c}")
        seen.add(key)


def require_both_polarities(phi: CnfFormula) -> None:
    if not phi.has_both_polarities():
        raise DialectError("every variable must occur both positively and negatively")


def parse_dimacs(text: str, dialect: Dialect = Dialect.THREE_SAT) -> CnfFormula:
    """`p cnf n m` header plus 0-terminated clause lines; `c` comments."""
    num_vars = None
    expected = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise MalformedInputError(f"line {lineno}: bad problem line")
            num_vars = int(parts[2])
            expected = int(parts[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                if pending:
                    clauses.append(tuple(pending))
                    pending = []
            else:
                pending.append(lit)
    if pending:
        clauses.append(tuple(pending))
    if num_vars is None:
        raise MalformedInputError("missing `p cnf` header")
    if expected is not None and expected != len(clauses):
        raise MalformedInputError(
            f"header promises {expected} clauses, found {len(clauses)}"
        )
    return CnfFormula(num_vars, tuple(clauses), dialect)


def to_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {phi.num_clauses}"]
    for c in phi.clauses:
        lines.append(" ".join(str(lit) for lit in c) + " 0")
    return "\n".join(lines) + "\n"
