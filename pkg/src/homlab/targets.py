"""Named target graphs.

Each constructor is deterministic.  Convention for the small named targets:
vertex 0 is the distinguished vertex where one exists (the looped vertex of
the odd-cycle-transversal target, the loopless weight-1 vertex of the
independent-set target).
"""

from __future__ import annotations

from .errors import MalformedInputError
from .graph import Graph


def path(k: int) -> Graph:
    """P_k with consecutive vertices 0..k-1 (paper's 1..k shifted to 0-base)."""
    if k < 1:
        raise MalformedInputError("path needs k >= 1")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise MalformedInputError("cycle needs k >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    if k < 1:
        raise MalformedInputError("complete needs k >= 1")
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def reflexive_complete(k: int) -> Graph:
    if k < 1:
        raise MalformedInputError("reflexive_complete needs k >= 1")
    es = [(i, j) for i in range(k) for j in range(i + 1, k)]
    es += [(i, i) for i in range(k)]
    return Graph(k, es)


def complement_of_path(k: int) -> Graph:
    """Complement of P_k; locally injective homomorphism to it is k-L(2,1)-labeling."""
    if k < 1:
        raise MalformedInputError("complement_of_path needs k >= 1")
    p = {(i, i + 1) for i in range(k - 1)}
    es = [(i, j) for i in range(k) for j in range(i + 1, k) if (i, j) not in p]
    return Graph(k, es)


def loop_edge() -> Graph:
    """Two looped vertices a=0, b=1 joined by an edge: E = {aa, ab, bb}."""
    return Graph(2, [(0, 0), (0, 1), (1, 1)], labels=("a", "b"))


def loop_pendant() -> Graph:
    """Loopless a=0 adjacent to looped b=1: E = {ab, bb}."""
    return Graph(2, [(0, 1), (1, 1)], labels=("a", "b"))


def oct_target() -> Graph:
    """Looped a=0 adjacent to b=1 and c=2, plus edge bc (a triangle, one loop)."""
    return Graph(3, [(0, 0), (0, 1), (0, 2), (1, 2)], labels=("a", "b", "c"))


def c4() -> Graph:
    """C_4 with consecutive vertices a=0, b=1, c=2, d=3."""
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], labels=("a", "b", "c", "d"))


def forbidden_seven() -> dict[str, Graph]:
    """The seven graphs whose absence as induced subgraphs characterizes
    the no-two-vertices-with-two-common-neighbors property, keyed (a)..(g)."""
    return {
        "a": loop_edge(),
        # triangle with one looped vertex
        "b": Graph(3, [(0, 0), (0, 1), (0, 2), (1, 2)]),
        # plain 4-cycle
        "c": Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        # 4-cycle, one loop
        "d": Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 0)]),
        # 4-cycle, loops on two opposite vertices
        "e": Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 0), (2, 2)]),
        # diamond: 4-cycle plus one chord
        "f": Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        "g": complete(4),
    }


_NAMED = {
    "loop-edge": loop_edge,
    "loop_edge": loop_edge,
    "loop-pendant": loop_pendant,
    "loop_pendant": loop_pendant,
    "oct": oct_target,
    "oct-target": oct_target,
    "oct_target": oct_target,
    "c4": c4,
}


def by_name(spec: str) -> Graph:
    """Resolve a target selector like P3, Ck:6, K4, Kk-reflexive:3, coP:5."""
    s = spec.strip()
    low = s.lower()
    if low in _NAMED:
        return _NAMED[low]()
    fam, _, arg = s.partition(":")
    famlow = fam.lower()
    if arg:
        k = int(arg)
        if famlow in ("pk", "p"):
            return path(k)
        if famlow in ("ck", "c"):
            return cycle(k)
        if famlow in ("kk", "k"):
            return complete(k)
        if famlow in ("kk-reflexive", "k-reflexive"):
            return reflexive_complete(k)
        if famlow == "cop":
            return complement_of_path(k)
        raise MalformedInputError(f"unknown target family {fam!r}")
    if len(s) >= 2 and s[0] in "PCK" and s[1:].isdigit():
        k = int(s[1:])
        return {"P": path, "C": cycle, "K": complete}[s[0]](k)
    if low.startswith("cop") and s[3:].isdigit():
        return complement_of_path(int(s[3:]))
    raise MalformedInputError(f"unknown target selector {spec!r}")
