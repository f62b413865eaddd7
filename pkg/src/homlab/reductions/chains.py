"""Coordinate helpers for building axis-parallel gadget arrangements.

The workhorse is the collinear interval chain: a run of `count` intervals on
one line where consecutive intervals overlap, non-consecutive ones are
disjoint, the first interval is the only one containing the anchor `a`, and
the last is the only one containing the anchor `b`.  Chains realize paths of
collinear segments (the overlap trick the paper's figures draw as slightly
offset parallel strokes).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..geometry import Segment

Interval = tuple[Fraction, Fraction]


def interval_chain(
    a, b, count: int, max_margin: Optional[Fraction] = None
) -> tuple[list[Interval], Fraction]:
    """`count` >= 1 intervals from anchor a to anchor b; returns (intervals,
    margin).  Intervals come back ordered from the a side to the b side."""
    a, b = Fraction(a), Fraction(b)
    if count < 1:
        raise ValueError("chain needs at least one interval")
    if a == b:
        raise ValueError("anchors must differ")
    flip = a > b
    lo, hi = (b, a) if flip else (a, b)
    span = hi - lo
    margin = span / (8 * count)
    if max_margin is not None and margin > max_margin:
        margin = Fraction(max_margin)
    cuts = [lo + span * j / count for j in range(count + 1)]
    intervals = [(lo - margin, cuts[1] + 2 * margin) if count > 1 else (lo - margin, hi + margin)]
    for j in range(2, count + 1):
        intervals.append((cuts[j - 1] + margin, cuts[j] + 2 * margin))
    if count > 1:
        last_lo, _ = intervals[-1]
        intervals[-1] = (last_lo, hi + margin)
    if flip:
        intervals = [iv for iv in reversed(intervals)]
    return intervals, margin


def vseg(x, interval: Interval) -> Segment:
    lo, hi = interval
    return Segment((Fraction(x), Fraction(lo)), (Fraction(x), Fraction(hi)))


def hseg(y, interval: Interval) -> Segment:
    lo, hi = interval
    return Segment((Fraction(lo), Fraction(y)), (Fraction(hi), Fraction(y)))


def F(num, den=1) -> Fraction:
    return Fraction(num, den)
