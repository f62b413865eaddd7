"""Undirected graphs with loops, on vertices 0..n-1.

A loop (v, v) puts v into N(v) and contributes 1 to deg(v).  Instances G and
targets H share this type.  Objects are immutable after construction and safe
to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import MalformedInputError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class Graph:
    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise MalformedInputError(f"vertex count must be non-negative, got {n}")
        es = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInputError(f"edge ({u},{v}) out of range for n={n}")
            es.add(norm_edge(u, v))
        self._n = n
        self._edges = frozenset(es)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise MalformedInputError("labels must have one entry per vertex")
        self._labels = labels
        adj = [set() for _ in range(n)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def labels(self):
        return self._labels

    @property
    def vertices(self) -> range:
        return range(self._n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._edges

    def has_loop(self, v: int) -> bool:
        return (v, v) in self._edges

    def edge_count(self) -> int:
        return len(self._edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on the given vertices, relabeled 0..k-1.

        Returns the subgraph and the old->new vertex mapping.
        """
        vs = sorted(set(vertices))
        idx = {v: i for i, v in enumerate(vs)}
        es = [
            (idx[u], idx[v])
            for (u, v) in self._edges
            if u in idx and v in idx
        ]
        labels = None
        if self._labels is not None:
            labels = [self._labels[v] for v in vs]
        return Graph(len(vs), es, labels), idx

    def components(self) -> list[frozenset[int]]:
        seen = [False] * self._n
        out = []
        for root in range(self._n):
            if seen[root]:
                continue
            comp = {root}
            seen[root] = True
            stack = [root]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        stack.append(w)
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """Deterministic 2-coloring, or None if an odd cycle or loop exists.

        In each component the BFS root (minimum vertex) goes to the first
        class.
        """
        color = [-1] * self._n
        for root in range(self._n):
            if color[root] != -1:
                continue
            color[root] = 0
            queue = [root]
            while queue:
                u = queue.pop(0)
                for w in sorted(self._adj[u]):
                    if w == u:
                        return None
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        a = frozenset(v for v in range(self._n) if color[v] == 0)
        b = frozenset(v for v in range(self._n) if color[v] == 1)
        return a, b

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"

    # --- text format: `n <count>` / `e <u> <v>` lines, comments `#` ---

    def to_text(self) -> str:
        lines = [f"n {self._n}"]
        for u, v in self.sorted_edges():
            lines.append(f"e {u} {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, labels: Optional[Sequence[str]] = None) -> "Graph":
        n = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "n":
                if n is not None:
                    raise MalformedInputError(f"line {lineno}: duplicate n line")
                if len(parts) != 2:
                    raise MalformedInputError(f"line {lineno}: bad n line")
                n = int(parts[1])
            elif parts[0] == "e":
                if len(parts) != 3:
                    raise MalformedInputError(f"line {lineno}: bad e line")
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise MalformedInputError(f"line {lineno}: unknown record {parts[0]!r}")
        if n is None:
            raise MalformedInputError("graph text missing `n` line")
        return cls(n, edges, labels)
