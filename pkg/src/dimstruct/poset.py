"""Finite partially ordered sets and the extended poset S-bar.

Relations are stored fully closed (as up-sets and down-sets per element), so
every order query is a set lookup.  Elements are strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product as _cartesian
from typing import Iterable, Mapping, Sequence

from .errors import CycleError, DisjointnessError, ShapeError, UnknownElement

__all__ = [
    "DimValue",
    "BOTTOM",
    "TOP",
    "FinitePoset",
    "PosetProperties",
    "Convexity",
    "build_poset",
    "chain",
    "antichain",
    "product",
    "product_n",
    "lexicographic",
    "indexed_sum",
    "combine_posets",
    "tuple_id",
    "split_tuple_id",
]


@dataclass(frozen=True)
class DimValue:
    """An element of S-bar: the adjoined bottom, a poset element, or the top.

    Comparisons need the poset, so they live on :class:`FinitePoset`
    (``sbar_le`` and friends), which also resolves the aliasing of bottom/top
    with an existing minimum/maximum.
    """

    kind: str
    element: str | None = None

    def __post_init__(self):
        if self.kind not in ("bottom", "element", "top"):
            raise ValueError(f"bad DimValue kind {self.kind!r}")
        if (self.kind == "element") != (self.element is not None):
            raise ValueError("only element-kind DimValues carry an element")

    @classmethod
    def of(cls, s: str) -> "DimValue":
        return cls("element", s)

    @property
    def is_bottom(self) -> bool:
        return self.kind == "bottom"

    @property
    def is_top(self) -> bool:
        return self.kind == "top"

    @property
    def is_element(self) -> bool:
        return self.kind == "element"

    def __str__(self):
        if self.kind == "bottom":
            return "-inf"
        if self.kind == "top":
            return "+inf"
        return self.element

    def __repr__(self):
        return f"DimValue({str(self)!r})"


BOTTOM = DimValue("bottom")
TOP = DimValue("top")


@dataclass(frozen=True)
class PosetProperties:
    ordered: bool
    dense: bool
    discrete: bool
    lattice: bool
    complete: bool
    has_min: bool
    has_max: bool
    successor: dict = field(default_factory=dict)
    predecessor: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Convexity:
    convex: bool
    up_convex: bool
    down_convex: bool
    principal_filter: bool


class FinitePoset:
    """A finite poset with a closed order relation.

    Build instances with :func:`build_poset`; the constructor trusts its
    input to be a closed partial order.
    """

    def __init__(self, elements: Sequence[str], up: Mapping[str, frozenset]):
        self._elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self._elements)}
        self._up = {e: frozenset(up[e]) for e in self._elements}
        down = {e: set() for e in self._elements}
        for a in self._elements:
            for b in self._up[a]:
                down[b].add(a)
        self._down = {e: frozenset(v) for e, v in down.items()}
        self._min = self._find_extreme(self._up)
        self._max = self._find_extreme(self._down)
        self._props = None

    def _find_extreme(self, cone):
        n = len(self._elements)
        for e in self._elements:
            if len(cone[e]) == n:
                return e
        return None

    # -- basic access ------------------------------------------------------

    @property
    def elements(self) -> tuple:
        return self._elements

    def __iter__(self):
        return iter(self._elements)

    def __len__(self):
        return len(self._elements)

    def __contains__(self, e):
        return e in self._index

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return set(self._elements) == set(other._elements) and self._up == other._up

    def __hash__(self):
        return hash(frozenset(self.relation()))

    def __repr__(self):
        return f"FinitePoset({list(self._elements)!r}, covers={self.covers()!r})"

    def _check(self, e):
        if e not in self._index:
            raise UnknownElement(e)

    def _check_all(self, subset):
        for e in subset:
            self._check(e)

    def le(self, a: str, b: str) -> bool:
        self._check(a)
        self._check(b)
        return b in self._up[a]

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.le(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return self.le(a, b) or self.le(b, a)

    def up(self, a: str) -> frozenset:
        self._check(a)
        return self._up[a]

    def down(self, a: str) -> frozenset:
        self._check(a)
        return self._down[a]

    def strict_up(self, a: str) -> frozenset:
        return self.up(a) - {a}

    def strict_down(self, a: str) -> frozenset:
        return self.down(a) - {a}

    @property
    def minimum(self) -> str | None:
        return self._min

    @property
    def maximum(self) -> str | None:
        return self._max

    def relation(self) -> list:
        """All pairs (a, b) with a <= b, in element order."""
        return [(a, b) for a in self._elements for b in self._elements if b in self._up[a]]

    def strict_pairs(self) -> list:
        return [(a, b) for a, b in self.relation() if a != b]

    def covers(self) -> list:
        out = []
        for a, b in self.strict_pairs():
            between = (self._up[a] & self._down[b]) - {a, b}
            if not between:
                out.append((a, b))
        return out

    def is_chain(self) -> bool:
        return all(self.comparable(a, b) for a, b in combinations(self._elements, 2))

    def restrict(self, subset: Iterable[str]) -> "FinitePoset":
        """The induced subposet on ``subset`` (kept in this poset's order)."""
        keep = set(subset)
        self._check_all(keep)
        elems = [e for e in self._elements if e in keep]
        return FinitePoset(elems, {e: self._up[e] & keep for e in elems})

    # -- bounds ------------------------------------------------------------

    def lower_bounds(self, subset: Iterable[str]) -> frozenset:
        subset = list(subset)
        self._check_all(subset)
        out = set(self._elements)
        for s in subset:
            out &= self._down[s]
        return frozenset(out)

    def upper_bounds(self, subset: Iterable[str]) -> frozenset:
        subset = list(subset)
        self._check_all(subset)
        out = set(self._elements)
        for s in subset:
            out &= self._up[s]
        return frozenset(out)

    def greatest(self, subset: Iterable[str]) -> str | None:
        subset = frozenset(subset)
        for g in subset:
            if subset <= self._down[g]:
                return g
        return None

    def least(self, subset: Iterable[str]) -> str | None:
        subset = frozenset(subset)
        for g in subset:
            if subset <= self._up[g]:
                return g
        return None

    def bound_in_sbar(self, subset: Iterable[str], direction: str = "inf") -> DimValue | None:
        """Infimum or supremum of ``subset`` in S-bar.

        Returns ``TOP`` for the infimum of the empty set (``BOTTOM`` for its
        supremum), ``BOTTOM`` when a nonempty set has no lower bound at all,
        and ``None`` when lower bounds exist but none is greatest.  Dually for
        ``direction="sup"``.
        """
        subset = frozenset(subset)
        self._check_all(subset)
        if direction == "inf":
            if not subset:
                return TOP
            bounds = self.lower_bounds(subset)
            if not bounds:
                return BOTTOM
            g = self.greatest(bounds)
        elif direction == "sup":
            if not subset:
                return BOTTOM
            bounds = self.upper_bounds(subset)
            if not bounds:
                return TOP
            g = self.least(bounds)
        else:
            raise ValueError(f"direction must be 'inf' or 'sup', not {direction!r}")
        return None if g is None else DimValue.of(g)

    def inf(self, subset: Iterable[str]) -> DimValue | None:
        return self.bound_in_sbar(subset, "inf")

    def sup(self, subset: Iterable[str]) -> DimValue | None:
        return self.bound_in_sbar(subset, "sup")

    def meet(self, a: str, b: str) -> str | None:
        lb = self.lower_bounds([a, b])
        return self.greatest(lb)

    def join(self, a: str, b: str) -> str | None:
        ub = self.upper_bounds([a, b])
        return self.least(ub)

    # -- S-bar -------------------------------------------------------------

    def canonical(self, d: DimValue) -> DimValue:
        """Identify bottom/top with an existing minimum/maximum."""
        if d.is_bottom and self._min is not None:
            return DimValue.of(self._min)
        if d.is_top and self._max is not None:
            return DimValue.of(self._max)
        if d.is_element:
            self._check(d.element)
        return d

    def sbar_le(self, a: DimValue, b: DimValue) -> bool:
        a, b = self.canonical(a), self.canonical(b)
        if a.is_bottom or b.is_top:
            return True
        if a.is_top or b.is_bottom:
            return False
        return self.le(a.element, b.element)

    def sbar_eq(self, a: DimValue, b: DimValue) -> bool:
        return self.canonical(a) == self.canonical(b)

    def sbar_lt(self, a: DimValue, b: DimValue) -> bool:
        return self.sbar_le(a, b) and not self.sbar_eq(a, b)

    def sbar_comparable(self, a: DimValue, b: DimValue) -> bool:
        return self.sbar_le(a, b) or self.sbar_le(b, a)

    def sbar_bound(self, values: Iterable[DimValue], direction: str = "sup") -> DimValue | None:
        """Supremum/infimum of a set of S-bar values (``None`` if it fails to exist)."""
        vals = {self.canonical(v) for v in values}
        absorbing = TOP if direction == "sup" else BOTTOM
        if absorbing in vals:
            return absorbing
        r = self.bound_in_sbar([v.element for v in vals if v.is_element], direction)
        return None if r is None else self.canonical(r)

    # -- successor structure -------------------------------------------------

    def successor(self, s: str) -> str | None:
        """``min{p : p > s}`` when it exists."""
        return self.least(self.strict_up(s))

    def predecessor(self, s: str) -> str | None:
        return self.greatest(self.strict_down(s))

    # -- properties ----------------------------------------------------------

    def properties(self) -> PosetProperties:
        if self._props is not None:
            return self._props
        elems = self._elements
        ordered = self.is_chain()
        # On a finite poset every strict pair has a cover between its ends,
        # so density holds only when no two distinct elements are comparable.
        dense = not self.strict_pairs()
        lattice = all(
            self.meet(a, b) is not None and self.join(a, b) is not None
            for a, b in combinations(elems, 2)
        )
        has_min = self._min is not None
        has_max = self._max is not None
        succ = {s: t for s in elems if (t := self.successor(s)) is not None}
        pred = {s: t for s in elems if (t := self.predecessor(s)) is not None}
        self._props = PosetProperties(
            ordered=ordered,
            dense=dense,
            discrete=True,
            lattice=lattice,
            complete=lattice and has_min and has_max,
            has_min=has_min,
            has_max=has_max,
            successor=succ,
            predecessor=pred,
        )
        return self._props

    def is_lattice(self) -> bool:
        return self.properties().lattice

    def is_complete(self) -> bool:
        return self.properties().complete

    def convexity(self, subset: Iterable[str]) -> Convexity:
        P = frozenset(subset)
        self._check_all(P)
        up_convex = all(self._up[a] <= P for a in P)
        down_convex = all(self._down[a] <= P for a in P)
        convex = all(
            (self._up[a] & self._down[c]) <= P for a in P for c in P if c in self._up[a]
        )
        m = self.least(P)
        principal = m is not None and P == self._up[m]
        return Convexity(convex, up_convex, down_convex, principal)


def build_poset(elements: Iterable[str], pairs: Iterable[tuple] = ()) -> FinitePoset:
    """Reflexive-transitive closure of ``pairs`` (each meaning a <= b)."""
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise ValueError("element identifiers must be distinct")
    succ = {e: set() for e in elements}
    for a, b in pairs:
        if a not in succ:
            raise UnknownElement(a)
        if b not in succ:
            raise UnknownElement(b)
        succ[a].add(b)
    up = {}
    for e in elements:
        seen = {e}
        stack = [e]
        while stack:
            for n in succ[stack.pop()]:
                if n not in seen:
                    seen.add(n)
                    stack.append(n)
        up[e] = frozenset(seen)
    for a in elements:
        for b in up[a]:
            if b != a and a in up[b]:
                raise CycleError(f"{a} <= {b} and {b} <= {a}")
    return FinitePoset(elements, up)


def chain(names: Sequence[str]) -> FinitePoset:
    names = list(names)
    return build_poset(names, list(zip(names, names[1:])))


def antichain(names: Sequence[str]) -> FinitePoset:
    return build_poset(list(names), [])


# -- tuple identifiers ---------------------------------------------------------

_ESC = {"\\": "\\\\", "|": "\\|", "(": "\\(", ")": "\\)"}


def tuple_id(*parts: str) -> str:
    """Canonical identifier ``(a|b|...)`` with separators escaped."""
    return "(" + "|".join("".join(_ESC.get(c, c) for c in p) for p in parts) + ")"


def split_tuple_id(ident: str) -> tuple:
    if not (ident.startswith("(") and ident.endswith(")")):
        raise ValueError(f"{ident!r} is not a tuple identifier")
    parts, cur, i, body = [], [], 0, ident[1:-1]
    while i < len(body):
        c = body[i]
        if c == "\\":
            cur.append(body[i + 1])
            i += 2
            continue
        if c == "|":
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(c)
        i += 1
    parts.append("".join(cur))
    return tuple(parts)


# -- combinators ---------------------------------------------------------------

def product_n(posets: Sequence[FinitePoset]) -> FinitePoset:
    """Product order on the cartesian product of several posets."""
    posets = list(posets)
    tuples = list(_cartesian(*[p.elements for p in posets]))
    ids = {t: tuple_id(*t) for t in tuples}
    up = {}
    for t in tuples:
        cones = [p.up(c) for p, c in zip(posets, t)]
        up[ids[t]] = frozenset(ids[u] for u in _cartesian(*cones))
    return FinitePoset([ids[t] for t in tuples], up)


def product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    return product_n([P, Q])


def lexicographic(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """(s1, s2) <= (t1, t2) iff s1 < t1, or s1 = t1 and s2 <= t2."""
    up = {}
    elems = []
    for s1 in P:
        for s2 in Q:
            ident = tuple_id(s1, s2)
            elems.append(ident)
            cone = {tuple_id(s1, t2) for t2 in Q.up(s2)}
            cone |= {tuple_id(t1, t2) for t1 in P.strict_up(s1) for t2 in Q}
            up[ident] = frozenset(cone)
    return FinitePoset(elems, up)


def indexed_sum(index: FinitePoset, blocks: Mapping[str, FinitePoset]) -> FinitePoset:
    """Order sum over an index poset.

    Inside a block the block order applies; across blocks ``s < t`` iff the
    block of ``s`` is strictly below the block of ``t``.
    """
    if set(blocks) != set(index.elements):
        raise ShapeError("blocks must be indexed by exactly the index elements")
    owner = {}
    for p in index:
        for s in blocks[p]:
            if s in owner:
                raise DisjointnessError(f"element {s!r} occurs in blocks {owner[s]!r} and {p!r}")
            owner[s] = p
    elems = [s for p in index for s in blocks[p]]
    up = {}
    for p in index:
        above = [s for q in index.strict_up(p) for s in blocks[q]]
        for s in blocks[p]:
            up[s] = frozenset(blocks[p].up(s)) | frozenset(above)
    return FinitePoset(elems, up)


def combine_posets(kind: str, *args) -> FinitePoset:
    if kind == "product":
        return product(*args)
    if kind == "lexicographic":
        return lexicographic(*args)
    if kind == "indexed_sum":
        return indexed_sum(*args)
    raise ValueError(f"unknown combination {kind!r}")
