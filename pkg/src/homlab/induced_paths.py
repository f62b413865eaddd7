"""Longest induced path search, capped."""

from __future__ import annotations

from .graph import Graph


def longest_induced_path_length(g: Graph, cap: int) -> int:
    """Number of vertices in a longest induced path, or cap+1 if one with
    more than cap vertices exists.

    Loops are irrelevant to induced paths and ignored.  The empty graph has
    length 0; a single vertex is a path of length 1.
    """
    if g.n == 0:
        return 0
    if cap <= 0:
        return cap + 1
    best = 0
    adj = [g.neighbors(v) - {v} for v in g.vertices]

    def extend(path: list[int], in_path: set[int]) -> int:
        nonlocal best
        if len(path) > best:
            best = len(path)
            if best > cap:
                return best
        last = path[-1]
        for w in sorted(adj[last]):
            if w in in_path:
                continue
            # induced: w may touch only the current endpoint
            if any(w in adj[p] for p in path[:-1]):
                continue
            path.append(w)
            in_path.add(w)
            extend(path, in_path)
            in_path.remove(w)
            path.pop()
            if best > cap:
                return best
        return best

    for v in g.vertices:
        extend([v], {v})
        if best > cap:
            return cap + 1
    return best
