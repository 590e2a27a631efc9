"""Dimension structures: validation, dimension, and the derived notions.

A candidate is a finite poset ``S``, a finite point set ``X`` and a total
table ``mu[x][s]`` of values in [0, +inf].  It is a dimension structure when

* (ax1) ``s < p`` and ``mu(x, s) < inf`` imply ``mu(x, p) = 0``;
* (ax2) ``0 < mu(x, s) < inf`` and ``mu(x, p) < inf`` imply ``s, p`` comparable;
* (ax3) ``inf {s : mu(x, s) = 0}`` exists in S-bar for every ``x``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    InconsistencyError,
    PreInvalid,
    TotalityError,
    UnknownElement,
    UnknownPoint,
    ValidationError,
)
from .extval import INF, ZERO, ExtVal, ext
from .poset import DimValue, FinitePoset

__all__ = [
    "Candidate",
    "DimensionStructure",
    "PreDimensionStructure",
    "Violation",
    "AxiomReport",
    "MuD",
    "SpectrumSets",
    "Order",
    "check_axioms",
    "check_pre_axioms",
    "lex_le",
]


class Candidate:
    """Unvalidated data: a poset, points and a total measurement table."""

    def __init__(self, poset: FinitePoset, points: Iterable[str], mu: Mapping[str, Mapping[str, object]]):
        self.poset = poset
        self.points = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise ValueError("point identifiers must be distinct")
        table = {}
        for x in self.points:
            if x not in mu:
                raise TotalityError(f"no measurements for point {x!r}")
            row = mu[x]
            missing = [s for s in poset if s not in row]
            if missing:
                raise TotalityError(f"point {x!r} has no measurement at {missing[0]!r}")
            extra = [s for s in row if s not in poset]
            if extra:
                raise UnknownElement(extra[0])
            table[x] = {s: ext(row[s]) for s in poset}
        extra = [x for x in mu if x not in table]
        if extra:
            raise UnknownPoint(extra[0])
        self._mu = table

    def mu(self, x: str, s: str) -> ExtVal:
        try:
            row = self._mu[x]
        except KeyError:
            raise UnknownPoint(x) from None
        try:
            return row[s]
        except KeyError:
            raise UnknownElement(s) from None

    def row(self, x: str) -> dict:
        if x not in self._mu:
            raise UnknownPoint(x)
        return dict(self._mu[x])

    @property
    def table(self) -> dict:
        return {x: dict(r) for x, r in self._mu.items()}

    def same_data(self, other: "Candidate") -> bool:
        return (
            self.poset == other.poset
            and set(self.points) == set(other.points)
            and self.table == other.table
        )

    def __repr__(self):
        return (f"{type(self).__name__}(|S|={len(self.poset)}, |X|={len(self.points)})")

    # shared helpers ------------------------------------------------------

    def finite_set(self, x: str) -> frozenset:
        return frozenset(s for s, v in self._row(x).items() if v.is_finite)

    def zero_set(self, x: str) -> frozenset:
        return frozenset(s for s, v in self._row(x).items() if v.is_zero)

    def _row(self, x):
        try:
            return self._mu[x]
        except KeyError:
            raise UnknownPoint(x) from None


@dataclass(frozen=True)
class Violation:
    axiom: str
    point: str
    elements: tuple

    def to_dict(self):
        return {"axiom": self.axiom, "point": self.point, "elements": list(self.elements)}


@dataclass
class AxiomReport:
    violations: list = field(default_factory=list)
    checked: tuple = ("ax1", "ax2", "ax3")

    @property
    def ok(self) -> bool:
        return not self.violations

    def of(self, axiom: str) -> list:
        return [v for v in self.violations if v.axiom == axiom]

    @property
    def ax3(self) -> bool:
        return not self.of("ax3")

    @property
    def pre_ok(self) -> bool:
        return not self.of("ax1") and not self.of("ax2")

    def to_dict(self):
        return {
            "ok": self.ok,
            "ax1": not self.of("ax1"),
            "ax2": not self.of("ax2"),
            "ax3": self.ax3,
            "violations": [v.to_dict() for v in self.violations],
        }


def _violations(c: Candidate, axioms=("ax1", "ax2", "ax3")) -> list:
    P = c.poset
    out = []
    for x in c.points:
        row = c._mu[x]
        finite = [s for s in P if row[s].is_finite]
        if "ax1" in axioms:
            for s in finite:
                for p in P.strict_up(s):
                    if not row[p].is_zero:
                        out.append(Violation("ax1", x, (s, p)))
        if "ax2" in axioms:
            for s in finite:
                if row[s].is_positive_finite:
                    for p in finite:
                        if not P.comparable(s, p):
                            out.append(Violation("ax2", x, (s, p)))
        if "ax3" in axioms:
            zeros = [s for s in P if row[s].is_zero]
            if P.inf(zeros) is None:
                out.append(Violation("ax3", x, tuple(zeros)))
    return out


def check_axioms(candidate: Candidate) -> AxiomReport:
    """Full (ax1)-(ax3) check with one witness per violation."""
    return AxiomReport(_violations(candidate))


def check_pre_axioms(candidate: Candidate) -> AxiomReport:
    """(ax1) and (ax2); the (ax3) status is reported but not required.

    Use ``report.pre_ok`` for the pre-structure verdict and ``report.ax3``
    for the informational (ax3) flag.
    """
    return AxiomReport(_violations(candidate))


@dataclass(frozen=True)
class MuD:
    dim: DimValue
    value: ExtVal


@dataclass(frozen=True)
class SpectrumSets:
    S_x: frozenset
    S0_x: frozenset
    Sinf_x: frozenset


class Order(enum.Enum):
    LESS_OR_EQUAL = "less_or_equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"
    EQUAL_CLASS = "equal_class"


def lex_le(P: FinitePoset, a: MuD, b: MuD) -> bool:
    """Lexicographic order on S-bar x [0, +inf]."""
    if P.sbar_eq(a.dim, b.dim):
        return a.value <= b.value
    return P.sbar_lt(a.dim, b.dim)


class PreDimensionStructure(Candidate):
    """Candidate satisfying (ax1) and (ax2); (ax3) may fail."""

    def __init__(self, poset, points, mu):
        super().__init__(poset, points, mu)
        report = check_pre_axioms(self)
        if not report.pre_ok:
            raise PreInvalid("not a pre-dimension structure", report)
        self.ax3 = report.ax3

    @classmethod
    def from_candidate(cls, c: Candidate) -> "PreDimensionStructure":
        return cls(c.poset, c.points, c.table)


class DimensionStructure(Candidate):
    """A validated dimension structure; immutable after construction."""

    def __init__(self, poset, points, mu):
        super().__init__(poset, points, mu)
        report = check_axioms(self)
        if not report.ok:
            first = report.violations[0]
            raise ValidationError(
                f"{first.axiom} fails at point {first.point!r} with {list(first.elements)}",
                report,
            )
        self._dims = {}

    @classmethod
    def from_candidate(cls, c: Candidate) -> "DimensionStructure":
        return cls(c.poset, c.points, c.table)

    # -- measurements on S-bar ---------------------------------------------

    def mu_extended(self, x: str, d: DimValue) -> ExtVal:
        """``mu`` on S-bar: bottom gives +inf and top gives 0 unless they
        alias an existing minimum/maximum."""
        row = self._row(x)
        d = self.poset.canonical(d)
        if d.is_bottom:
            return INF
        if d.is_top:
            return ZERO
        return row[d.element]

    def dim(self, x: str) -> DimValue:
        """``inf {s : mu(x, s) < inf}`` in S-bar, aliases resolved."""
        if x in self._dims:
            return self._dims[x]
        d = self.poset.inf(self.finite_set(x))
        if d is None:
            # (ax3) passed, so inf S_x must exist as well.
            raise InconsistencyError(f"inf S_x undefined at {x!r} although (ax3) holds", x)
        d = self.poset.canonical(d)
        self._dims[x] = d
        return d

    def raw_dim(self, x: str) -> DimValue:
        """Like :meth:`dim` but without aliasing bottom/top to min/max."""
        d = self.poset.inf(self.finite_set(x))
        if d is None:
            raise InconsistencyError(f"inf S_x undefined at {x!r}", x)
        return d

    def mu_D(self, x: str) -> MuD:
        d = self.dim(x)
        return MuD(d, self.mu_extended(x, d))

    def spectrum(self, x: str) -> SpectrumSets:
        finite = self.finite_set(x)
        return SpectrumSets(finite, self.zero_set(x), frozenset(self.poset.elements) - finite)

    def s_points(self, x: str) -> list:
        return [s for s, v in self._row(x).items() if v.is_positive_finite]

    def is_s_point(self, x: str, s: str) -> bool:
        if s not in self.poset:
            raise UnknownElement(s)
        return self.mu(x, s).is_positive_finite

    def is_dim_point(self, x: str) -> bool:
        return bool(self.s_points(x))

    def class_C(self, d: DimValue, m: ExtVal) -> frozenset:
        m = ext(m)
        return frozenset(
            x for x in self.points
            if self.poset.sbar_eq(self.dim(x), d) and self.mu_extended(x, d) == m
        )

    def classes(self) -> dict:
        """Every attained ``(dim, mu at dim)`` pair mapped to its class."""
        out = {}
        for x in self.points:
            key = self.mu_D(x)
            out.setdefault((key.dim, key.value), set()).add(x)
        return {k: frozenset(v) for k, v in out.items()}

    def leq_D(self, x: str, y: str) -> Order:
        P = self.poset
        dx, dy = self.dim(x), self.dim(y)
        if P.sbar_eq(dx, dy):
            mx, my = self.mu_extended(x, dx), self.mu_extended(y, dy)
            if mx == my:
                return Order.EQUAL_CLASS
            return Order.LESS_OR_EQUAL if mx < my else Order.GREATER
        if P.sbar_lt(dx, dy):
            return Order.LESS_OR_EQUAL
        if P.sbar_lt(dy, dx):
            return Order.GREATER
        return Order.INCOMPARABLE

    def le_D(self, x: str, y: str) -> bool:
        return self.leq_D(x, y) in (Order.LESS_OR_EQUAL, Order.EQUAL_CLASS)
