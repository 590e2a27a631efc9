"""Iterated derived sets at finite rank, through Cantor-Bendixson signatures.

A :class:`RankedSet` records how many copies of the canonical compact set
of each rank it contains.  The rank-``r`` set keeps one point after ``r``
derivations and infinitely many after fewer, so every ``mu_n`` is read off
the signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..errors import LawViolation
from ..extval import INF, ZERO, ExtVal
from ..poset import DimValue


@dataclass(frozen=True)
class RankedSet:
    counts: tuple = ()

    def __init__(self, counts: Mapping[int, int] | None = None):
        items = []
        for r, c in dict(counts or {}).items():
            r, c = int(r), int(c)
            if r < 0 or c < 0:
                raise ValueError("ranks and counts must be nonnegative")
            if c:
                items.append((r, c))
        object.__setattr__(self, "counts", tuple(sorted(items)))

    @property
    def as_dict(self) -> dict:
        return dict(self.counts)

    @property
    def is_empty(self) -> bool:
        return not self.counts

    @property
    def max_rank(self) -> int | None:
        return self.counts[-1][0] if self.counts else None


def ranked_mu(H: RankedSet, n: int) -> ExtVal:
    """``|H^(n)|`` when finite, else infinity."""
    top = H.max_rank
    if top is None or n > top:
        return ZERO
    if n < top:
        return INF
    return ExtVal(H.as_dict[top])


def ranked_dim(H: RankedSet) -> DimValue:
    # the empty set has the zero signature, so its dimension is the least rank
    top = H.max_rank
    return DimValue.of("0") if top is None else DimValue.of(str(top))


def ranked_union(A: RankedSet, B: RankedSet) -> RankedSet:
    """Disjoint union; the derived sets of a finite union are unions."""
    counts = A.as_dict
    for r, c in B.counts:
        counts[r] = counts.get(r, 0) + c
    out = RankedSet(counts)
    expect = max(int(ranked_dim(A).element), int(ranked_dim(B).element))
    if ranked_dim(out) != DimValue.of(str(expect)):
        raise LawViolation("dimension of a union is not the larger dimension", (A, B))
    return out
