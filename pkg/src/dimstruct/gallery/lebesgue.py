"""Lebesgue measure restricted to unit windows, on interval and rectangle unions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..extval import INF, ExtVal
from ..poset import BOTTOM, DimValue, tuple_id


def _q(v):
    return Fraction(v)


@dataclass(frozen=True)
class IntervalSet:
    """Finite union of half-open intervals ``[a, b)``, kept sorted and merged."""

    intervals: tuple = ()

    def __init__(self, intervals=()):
        parts = sorted((_q(a), _q(b)) for a, b in intervals if _q(a) < _q(b))
        merged = []
        for a, b in parts:
            if merged and a <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], b))
            else:
                merged.append((a, b))
        object.__setattr__(self, "intervals", tuple(merged))

    def measure(self, lo=None, hi=None) -> Fraction:
        """Length of the part inside ``[lo, hi)``; ``None`` means unbounded."""
        total = Fraction(0)
        for a, b in self.intervals:
            a2 = a if lo is None else max(a, _q(lo))
            b2 = b if hi is None else min(b, _q(hi))
            if a2 < b2:
                total += b2 - a2
        return total

    def sup(self) -> Fraction | None:
        return self.intervals[-1][1] if self.intervals else None


def leb_mu(H: IntervalSet, n: int) -> ExtVal:
    if H.measure(lo=n + 1) > 0:
        return INF
    return ExtVal(H.measure(n, n + 1))


def leb_dim(H: IntervalSet) -> DimValue:
    """Least ``n`` with nothing beyond ``n + 1``; bottom for the empty set."""
    top = H.sup()
    if top is None:
        return BOTTOM
    return DimValue.of(str(math.ceil(top) - 1))


@dataclass(frozen=True)
class RectSet:
    """Finite union of rectangles ``[a, b) x [c, d)``, stored as disjoint grid cells."""

    cells: tuple = ()

    def __init__(self, rects=()):
        rects = [tuple(_q(v) for v in r) for r in rects]
        rects = [r for r in rects if r[0] < r[1] and r[2] < r[3]]
        ys = sorted({v for r in rects for v in r[2:]})
        bands = []
        for y0, y1 in zip(ys, ys[1:]):
            section = IntervalSet([(r[0], r[1]) for r in rects if r[2] <= y0 and y1 <= r[3]]).intervals
            if bands and bands[-1][1] == y0 and bands[-1][2] == section:
                bands[-1] = (bands[-1][0], y1, section)
            elif section:
                bands.append((y0, y1, section))
        cells = sorted((a, b, y0, y1) for y0, y1, section in bands for a, b in section)
        object.__setattr__(self, "cells", tuple(cells))

    def measure(self, x_range=(None, None), y_range=(None, None)) -> Fraction:
        """Area inside the box given by two half-open ranges."""
        total = Fraction(0)
        for a, b, c, d in self.cells:
            a2 = a if x_range[0] is None else max(a, _q(x_range[0]))
            b2 = b if x_range[1] is None else min(b, _q(x_range[1]))
            c2 = c if y_range[0] is None else max(c, _q(y_range[0]))
            d2 = d if y_range[1] is None else min(d, _q(y_range[1]))
            if a2 < b2 and c2 < d2:
                total += (b2 - a2) * (d2 - c2)
        return total

    def extent(self):
        if not self.cells:
            return None
        return max(c[1] for c in self.cells), max(c[3] for c in self.cells)


def pleb_mu(H: RectSet, nm) -> ExtVal:
    """Infinite when ``H`` has area outside the quadrant below ``(n+1, m+1)``."""
    n, m = nm
    outside = H.measure() - H.measure((None, n + 1), (None, m + 1))
    if outside > 0:
        return INF
    return ExtVal(H.measure((n, n + 1), (m, m + 1)))


def pleb_dim(H: RectSet) -> DimValue:
    ext_ = H.extent()
    if ext_ is None:
        return BOTTOM
    return DimValue.of(tuple_id(str(math.ceil(ext_[0]) - 1), str(math.ceil(ext_[1]) - 1)))


def pleb_dim_pair(H: RectSet):
    ext_ = H.extent()
    if ext_ is None:
        return None
    return (math.ceil(ext_[0]) - 1, math.ceil(ext_[1]) - 1)
