"""Scale pseudo-metrics on finitely supported integer-indexed vectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ..errors import EqualPoints, LawViolation
from ..extval import INF, ExtVal
from ..poset import DimValue


@dataclass(frozen=True)
class ScaleVector:
    entries: tuple = ()
    bound: int = 0

    def __init__(self, entries: Mapping[int, object] | None = None, bound: int | None = None):
        items = tuple(sorted((int(i), Fraction(v)) for i, v in dict(entries or {}).items() if Fraction(v) != 0))
        top = max((i for i, _ in items), default=-1) + 1
        if bound is None:
            bound = top
        elif bound < top:
            raise ValueError(f"entry at index {top - 1} is not below the bound {bound}")
        object.__setattr__(self, "entries", items)
        object.__setattr__(self, "bound", int(bound))

    def __getitem__(self, i: int) -> Fraction:
        return dict(self.entries).get(i, Fraction(0))

    def support(self) -> set:
        return {i for i, _ in self.entries}


def _last_difference(x: ScaleVector, y: ScaleVector):
    diff = x.support() | y.support()
    diff = [i for i in diff if x[i] != y[i]]
    return max(diff) if diff else None


def scale_rho(x: ScaleVector, y: ScaleVector, n: int) -> ExtVal:
    """``|x_n - y_n|`` when the vectors agree above ``n``, else infinity."""
    last = _last_difference(x, y)
    if last is not None and last > n:
        return INF
    return ExtVal(abs(x[n] - y[n]))


def scale_dim(x: ScaleVector, y: ScaleVector) -> DimValue:
    last = _last_difference(x, y)
    if last is None:
        raise EqualPoints("distinct vectors required")
    v = scale_rho(x, y, last)
    if not v.is_positive_finite:
        raise LawViolation("pair is not a point of its own dimension", (x, y))
    return DimValue.of(str(last))
