"""Exact rational segment arithmetic and the arrangement -> graph bridge.

Closed segments; endpoint touching and collinear overlap count as
intersections.  All predicates are exact over Fraction coordinates, no
epsilons.  Pair testing is brute-force O(n^2): exactness over speed at desk
scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import MalformedInputError
from .graph import Graph

Point = tuple[Fraction, Fraction]


def _pt(p) -> Point:
    x, y = p
    return (Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self):
        object.__setattr__(self, "p", _pt(self.p))
        object.__setattr__(self, "q", _pt(self.q))
        if self.p == self.q:
            raise MalformedInputError("degenerate point-segment")

    def slope(self) -> Optional[Fraction]:
        """dy/dx, or None for vertical."""
        dx = self.q[0] - self.p[0]
        if dx == 0:
            return None
        return (self.q[1] - self.p[1]) / dx


def _orient(a: Point, b: Point, c: Point) -> int:
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _on_segment(a: Point, b: Point, c: Point) -> bool:
    # assumes c collinear with ab
    return (
        min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])
    )


def segments_intersect(s: Segment, t: Segment) -> bool:
    """True iff the closed segments share at least one point."""
    a, b, c, d = s.p, s.q, t.p, t.q
    o1 = _orient(a, b, c)
    o2 = _orient(a, b, d)
    o3 = _orient(c, d, a)
    o4 = _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


class SegmentArrangement:
    """Ordered segments with ids 0..n-1 matching the derived graph's vertices."""

    def __init__(self, segments: Iterable[Segment], labels: Optional[Sequence[str]] = None):
        self._segments = tuple(segments)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != len(self._segments):
                raise MalformedInputError("labels must match segment count")
        self._labels = labels

    @property
    def segments(self) -> tuple[Segment, ...]:
        return self._segments

    @property
    def labels(self):
        return self._labels

    def __len__(self):
        return len(self._segments)

    def __getitem__(self, i: int) -> Segment:
        return self._segments[i]

    def sub_arrangement(self, ids: Iterable[int]) -> "SegmentArrangement":
        ids = sorted(set(ids))
        labels = None
        if self._labels is not None:
            labels = [self._labels[i] for i in ids]
        return SegmentArrangement([self._segments[i] for i in ids], labels)

    # --- text format: `s <x1> <y1> <x2> <y2>`, coordinates int or p/q ---

    def to_text(self) -> str:
        lines = []
        for seg in self._segments:
            coords = [seg.p[0], seg.p[1], seg.q[0], seg.q[1]]
            lines.append("s " + " ".join(str(c) for c in coords))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str) -> "SegmentArrangement":
        segs = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] != "s" or len(parts) != 5:
                raise MalformedInputError(f"line {lineno}: bad segment record {line!r}")
            try:
                x1, y1, x2, y2 = (Fraction(t) for t in parts[1:])
            except (ValueError, ZeroDivisionError) as exc:
                raise MalformedInputError(f"line {lineno}: bad coordinate") from exc
            segs.append(Segment((x1, y1), (x2, y2)))
        return cls(segs)


def intersection_graph(arr: SegmentArrangement) -> Graph:
    """Loopless graph with an edge ij iff segments i and j intersect."""
    n = len(arr)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if segments_intersect(arr[i], arr[j]):
                edges.append((i, j))
    return Graph(n, edges, labels=arr.labels)


def slope_count(arr: SegmentArrangement) -> int:
    """Number of distinct slopes; all vertical segments count as one."""
    return len({seg.slope() for seg in arr.segments})
