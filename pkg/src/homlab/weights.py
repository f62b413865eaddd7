"""Integer weights extended with -infinity, weight models, and vertex lists.

Weights live in the signed 64-bit range; additions are checked and overflow
raises instead of wrapping.  NEG_INF absorbs under addition and is below every
integer.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Union

from .errors import MalformedInputError, WeightOverflowError
from .graph import Graph, norm_edge

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class _NegInf:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not NEG_INF

    def __gt__(self, other):
        return False

    def __le__(self, other):
        return True

    def __ge__(self, other):
        return other is NEG_INF


NEG_INF = _NegInf()

ExtWeight = Union[int, _NegInf]


def check_int64(x: int) -> int:
    if not (INT64_MIN <= x <= INT64_MAX):
        raise WeightOverflowError(f"weight {x} outside signed 64-bit range")
    return x


def ext_add(*vals: ExtWeight) -> ExtWeight:
    total = 0
    for v in vals:
        if v is NEG_INF:
            return NEG_INF
        total += v
    return check_int64(total)


def ext_lt(a: ExtWeight, b: ExtWeight) -> bool:
    if a is NEG_INF:
        return b is not NEG_INF
    if b is NEG_INF:
        return False
    return a < b


def ext_ge(a: ExtWeight, b: ExtWeight) -> bool:
    return not ext_lt(a, b)


def ext_max(vals: Iterable[ExtWeight]) -> ExtWeight:
    best = None
    for v in vals:
        if best is None or ext_lt(best, v):
            best = v
    if best is None:
        raise ValueError("ext_max of empty iterable")
    return best


def format_ext(w: ExtWeight) -> str:
    return "-inf" if w is NEG_INF else str(w)


def parse_ext(token: str) -> ExtWeight:
    if token == "-inf":
        return NEG_INF
    return check_int64(int(token))


def _check_weight(w: ExtWeight) -> ExtWeight:
    if w is NEG_INF:
        return w
    if not isinstance(w, int) or isinstance(w, bool):
        raise MalformedInputError(f"weight must be int or NEG_INF, got {w!r}")
    return check_int64(w)


class WeightModel:
    """Vertex weights on V(G) x V(H) and edge weights on E(G) x E(H).

    Unspecified entries default to 0; edge lookups are orientation-insensitive
    in both arguments.
    """

    def __init__(
        self,
        vertex: Optional[Mapping[tuple[int, int], ExtWeight]] = None,
        edge: Optional[Mapping[tuple[tuple[int, int], tuple[int, int]], ExtWeight]] = None,
    ):
        self._vertex = {}
        if vertex:
            for (v, a), w in vertex.items():
                self._vertex[(v, a)] = _check_weight(w)
        self._edge = {}
        if edge:
            for (guv, hab), w in edge.items():
                key = (norm_edge(*guv), norm_edge(*hab))
                self._edge[key] = _check_weight(w)

    def vertex_weight(self, v: int, a: int) -> ExtWeight:
        return self._vertex.get((v, a), 0)

    def edge_weight(self, guv: tuple[int, int], hab: tuple[int, int]) -> ExtWeight:
        return self._edge.get((norm_edge(*guv), norm_edge(*hab)), 0)

    def vertex_items(self):
        return sorted(self._vertex.items(), key=lambda kv: kv[0])

    def edge_items(self):
        return sorted(self._edge.items(), key=lambda kv: kv[0])

    def is_zero(self) -> bool:
        return not self._vertex and not self._edge

    # --- text format: `vw <v> <a> <w>` / `ew <u> <v> <a> <b> <w>` ---

    def to_text(self) -> str:
        lines = []
        for (v, a), w in self.vertex_items():
            lines.append(f"vw {v} {a} {format_ext(w)}")
        for ((u, v), (a, b)), w in self.edge_items():
            lines.append(f"ew {u} {v} {a} {b} {format_ext(w)}")
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str) -> "WeightModel":
        vertex = {}
        edge = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "vw" and len(parts) == 4:
                vertex[(int(parts[1]), int(parts[2]))] = parse_ext(parts[3])
            elif parts[0] == "ew" and len(parts) == 6:
                key = ((int(parts[1]), int(parts[2])), (int(parts[3]), int(parts[4])))
                edge[key] = parse_ext(parts[5])
            else:
                raise MalformedInputError(f"line {lineno}: bad weight record {line!r}")
        return cls(vertex, edge)


class ListAssignment:
    """Per-vertex admissible target-vertex sets L: V(G) -> 2^{V(H)}.

    An empty list is representable and signals immediate infeasibility.
    """

    def __init__(self, g: Graph, h: Graph, lists: Optional[Mapping[int, Iterable[int]]] = None):
        full = frozenset(h.vertices)
        out = []
        lists = dict(lists) if lists else {}
        for v in g.vertices:
            if v in lists:
                s = frozenset(lists[v])
                if not s <= full:
                    raise MalformedInputError(f"list of vertex {v} mentions vertices outside H")
                out.append(s)
            else:
                out.append(full)
        self._lists = tuple(out)
        self._h_n = h.n

    def get(self, v: int) -> frozenset[int]:
        return self._lists[v]

    def __iter__(self):
        return iter(self._lists)

    def __len__(self):
        return len(self._lists)

    def total_size(self) -> int:
        return sum(len(s) for s in self._lists)

    @classmethod
    def full(cls, g: Graph, h: Graph) -> "ListAssignment":
        return cls(g, h)

    # --- text format: `l <v> <a1> <a2> ...`; absent vertices get full lists ---

    def to_text(self) -> str:
        lines = []
        for v, s in enumerate(self._lists):
            lines.append("l " + " ".join([str(v)] + [str(a) for a in sorted(s)]))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str, g: Graph, h: Graph) -> "ListAssignment":
        lists = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] != "l" or len(parts) < 2:
                raise MalformedInputError(f"line {lineno}: bad list record {line!r}")
            v = int(parts[1])
            if not (0 <= v < g.n):
                raise MalformedInputError(f"line {lineno}: vertex {v} out of range")
            lists[v] = [int(t) for t in parts[2:]]
        return cls(g, h, lists)
