"""Building new dimension structures from old ones.

Every builder validates its output and then asserts the dimension law that
goes with it; a failed law raises :class:`LawViolation` carrying a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product as cartesian
from typing import Callable, Iterable, Mapping, Sequence

from .core import DimensionStructure
from .errors import (
    CombinerLawError,
    DisjointnessError,
    LawViolation,
    PreconditionError,
    ShapeError,
    UnknownElement,
    UnknownPoint,
)
from .extval import INF, ZERO, ExtVal, ext_add, ext_min, ext_mul, ext_sup
from .poset import (
    BOTTOM,
    TOP,
    DimValue,
    FinitePoset,
    indexed_sum,
    lexicographic,
    product_n,
    tuple_id,
)
from .classify import classify

__all__ = [
    "Partition",
    "substructure",
    "normalization",
    "quotient",
    "dim_partition",
    "structure_sum",
    "measure_sum",
    "sup_combine",
    "direct_product",
    "i_direct_product",
    "l_direct_product",
    "paired_dim",
]


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering a point set, keyed by block id."""

    blocks: tuple

    def __init__(self, blocks):
        if isinstance(blocks, Mapping):
            items = [(str(k), frozenset(v)) for k, v in blocks.items()]
        else:
            items = [(str(i), frozenset(b)) for i, b in enumerate(blocks)]
        seen = {}
        for key, members in items:
            if not members:
                raise ValueError(f"block {key!r} is empty")
            for x in members:
                if x in seen:
                    raise DisjointnessError(f"point {x!r} is in blocks {seen[x]!r} and {key!r}")
                seen[x] = key
        if len({k for k, _ in items}) != len(items):
            raise ValueError("block identifiers must be distinct")
        object.__setattr__(self, "blocks", tuple(items))

    @property
    def ids(self) -> list:
        return [k for k, _ in self.blocks]

    def covered(self) -> frozenset:
        return frozenset().union(*(m for _, m in self.blocks))

    def block_of(self, x) -> str:
        for k, m in self.blocks:
            if x in m:
                return k
        raise UnknownPoint(x)


# -- restriction -----------------------------------------------------------------

def substructure(D: DimensionStructure, Y: Iterable[str], P: Iterable[str]) -> DimensionStructure:
    """Restrict to points ``Y`` and positions ``P`` with the inherited order."""
    Y, P = list(Y), list(P)
    for x in Y:
        if x not in D.points:
            raise UnknownPoint(x)
    for s in P:
        if s not in D.poset:
            raise UnknownElement(s)
    if not P:
        raise PreconditionError("the position set must be nonempty")
    Q = D.poset.restrict(P)
    out = DimensionStructure(Q, Y, {x: {s: D.mu(x, s) for s in Q} for x in Y})
    for x in Y:
        sp = D.s_points(x)
        if sp and sp[0] in Q and not Q.sbar_eq(out.dim(x), DimValue.of(sp[0])):
            raise LawViolation("an s-point lost its dimension in the substructure", (x, sp[0]))
    return out


def normalization(D: DimensionStructure) -> DimensionStructure:
    """Keep the dim-points and the positions carrying some s-point."""
    X2 = [x for x in D.points if D.is_dim_point(x)]
    carried = {s for x in X2 for s in D.s_points(x)}
    S2 = [s for s in D.poset if s in carried]
    Q = D.poset.restrict(S2)
    out = DimensionStructure(Q, X2, {x: {s: D.mu(x, s) for s in Q} for x in X2})
    if X2 and not classify(out).fully_normal:
        raise LawViolation("normalization is not normal", classify(out).witnesses.get("fully_normal"))
    return out


# -- quotient --------------------------------------------------------------------

def quotient(D: DimensionStructure, partition) -> DimensionStructure:
    """Block measurements are suprema over the block members."""
    part = partition if isinstance(partition, Partition) else Partition(partition)
    if part.covered() != frozenset(D.points):
        extra = part.covered() - frozenset(D.points)
        if extra:
            raise UnknownPoint(sorted(extra)[0])
        raise ValueError("partition does not cover every point")
    P = D.poset
    table = {k: {s: ext_sup(D.mu(x, s) for x in members) for s in P} for k, members in part.blocks}
    out = DimensionStructure(P, part.ids, table)
    for k, members in part.blocks:
        lo = P.sbar_bound([D.dim(x) for x in members], "sup")
        if lo is not None and not P.sbar_le(lo, out.dim(k)):
            raise LawViolation("block dimension below the member dimensions",
                               (k, str(lo), str(out.dim(k))))
    return out


def dim_partition(D: DimensionStructure) -> Partition:
    """The partition of X into the classes ``C_{d,m}``, keyed ``"(d|m)"``."""
    from .extval import format_ext

    return Partition({tuple_id(str(d), format_ext(m)): members
                      for (d, m), members in D.classes().items()})


# -- sum over an index poset -------------------------------------------------------

def structure_sum(index: FinitePoset, family: Mapping[str, DimensionStructure]) -> DimensionStructure:
    """Stack the structures along ``index``.

    A point of block ``p`` keeps its measurements inside ``p``, reads 0 in
    blocks above ``p`` and +inf in blocks below or incomparable.
    """
    if set(family) != set(index.elements):
        raise ShapeError("family must be indexed by exactly the index elements")
    owner = {}
    for p in index:
        for x in family[p].points:
            if x in owner:
                raise DisjointnessError(f"point {x!r} occurs in blocks {owner[x]!r} and {p!r}")
            owner[x] = p
    S = indexed_sum(index, {p: family[p].poset for p in index})
    block_of = {s: p for p in index for s in family[p].poset}
    table = {}
    for x, p in owner.items():
        row = {}
        for s in S:
            q = block_of[s]
            if q == p:
                row[s] = family[p].mu(x, s)
            elif index.lt(p, q):
                row[s] = ZERO
            else:
                row[s] = INF
        table[x] = row
    points = [x for p in index for x in family[p].points]
    out = DimensionStructure(S, points, table)
    for x in points:
        expected = _sum_dim(index, family, owner[x], x)
        if expected is not None and not S.sbar_eq(out.dim(x), expected):
            raise LawViolation("dimension relocation formula fails", (x, str(expected), str(out.dim(x))))
    return out


def _sum_dim(index, family, p, x):
    # Predicted dimension in the sum; None where the formula has no referent.
    D = family[p]
    raw = D.raw_dim(x)
    if not raw.is_top:
        return raw if not raw.is_bottom else _below_block(index, family, p)
    above = index.strict_up(p)
    if not above:
        return TOP
    r = index.least(above)
    if r is None:
        return None
    m = family[r].poset.minimum
    return DimValue.of(m) if m is not None else None


def _below_block(index, family, p):
    # no lower bound inside the block: only blocks strictly below can help,
    # and the formula says nothing about them
    return None if index.strict_down(p) else BOTTOM


# -- pointwise combinations ----------------------------------------------------------

def _shared_shape(structures: Sequence[DimensionStructure]):
    if not structures:
        raise PreconditionError("need at least one structure")
    first = structures[0]
    for D in structures[1:]:
        if D.poset != first.poset or set(D.points) != set(first.points):
            raise PreconditionError("all structures must share points and positions")
    return first.poset, first.points


def measure_sum(structures: Sequence[DimensionStructure], check_hypotheses: bool = True) -> DimensionStructure:
    """Pointwise sum of measurements over shared X and S.

    With ``check_hypotheses`` the input must have complete S, or be all
    principal over a lattice S; otherwise the sum is attempted and validated.
    """
    structures = list(structures)
    P, points = _shared_shape(structures)
    if check_hypotheses and not P.is_complete():
        if not (P.is_lattice() and all(classify(D).principal for D in structures)):
            raise PreconditionError("S must be complete, or a lattice with principal inputs")
    table = {x: {s: reduce(ext_add, (D.mu(x, s) for D in structures)) for s in P} for x in points}
    out = DimensionStructure(P, points, table)
    chain = P.is_chain()
    for x in points:
        lo = P.sbar_bound([D.dim(x) for D in structures], "sup")
        d = out.dim(x)
        if lo is None:
            continue
        if not P.sbar_le(lo, d):
            raise LawViolation("sum dimension below an input dimension", (x, str(lo), str(d)))
        if chain and P.sbar_lt(lo, d):
            nxt = P.successor(lo.element) if lo.is_element else None
            if nxt is None or not P.sbar_eq(d, DimValue.of(nxt)):
                raise LawViolation("chain successor law fails", (x, str(lo), str(d)))
    return out


def sup_combine(structures: Sequence[DimensionStructure], check_hypotheses: bool = True) -> DimensionStructure:
    """Pointwise supremum of measurements over shared X and S."""
    structures = list(structures)
    P, points = _shared_shape(structures)
    if check_hypotheses and not P.is_complete():
        raise PreconditionError("S must be complete")
    table = {x: {s: ext_sup(D.mu(x, s) for D in structures) for s in P} for x in points}
    return DimensionStructure(P, points, table)


# -- products --------------------------------------------------------------------

def paired_dim(raw_dims: Sequence[DimValue]) -> DimValue:
    """Dimension predicted for a tuple point from the raw coordinate dims.

    An empty coordinate finite-set (+inf) empties the product's, and a
    coordinate without lower bound leaves the product without one.
    """
    if any(d.is_top for d in raw_dims):
        return TOP
    if any(d.is_bottom for d in raw_dims):
        return BOTTOM
    return DimValue.of(tuple_id(*(d.element for d in raw_dims)))


def _check_pairing(out, factors, point_tuples, what):
    for z, coords in point_tuples.items():
        expected = paired_dim([D.raw_dim(c) for D, c in zip(factors, coords)])
        if out.raw_dim(z) != expected:
            raise LawViolation(f"{what}: dimension is not the coordinate pair",
                               (z, str(expected), str(out.raw_dim(z))))


def _product_points(factors):
    tuples = list(cartesian(*[D.points for D in factors]))
    return {tuple_id(*t): t for t in tuples}


def direct_product(D1: DimensionStructure, D2: DimensionStructure,
                   combiner: Callable[[ExtVal, ExtVal], ExtVal] | None = None) -> DimensionStructure:
    """Product order on S1 x S2; values multiply (or go through ``combiner``).

    A ``combiner`` must send two positive finite values to a positive finite
    value and must vanish when either argument is 0.
    """
    f = combiner or ext_mul
    S = product_n([D1.poset, D2.poset])
    points = _product_points([D1, D2])
    table = {}
    for z, (x1, x2) in points.items():
        row = {}
        for s1 in D1.poset:
            a = D1.mu(x1, s1)
            for s2 in D2.poset:
                b = D2.mu(x2, s2)
                if a.is_inf or b.is_inf:
                    v = INF
                else:
                    v = f(a, b)
                    if combiner is not None:
                        _check_combiner(a, b, v)
                row[tuple_id(s1, s2)] = v
        table[z] = row
    out = DimensionStructure(S, list(points), table)
    _check_pairing(out, [D1, D2], points, "direct product")
    return out


def _check_combiner(a: ExtVal, b: ExtVal, v):
    if not isinstance(v, ExtVal):
        raise CombinerLawError(f"combiner returned {v!r}, not an extended value")
    if (a.is_zero or b.is_zero) and not v.is_zero:
        raise CombinerLawError(f"combiner({a}, {b}) = {v}, expected 0")
    if a.is_positive_finite and b.is_positive_finite and not v.is_positive_finite:
        raise CombinerLawError(f"combiner({a}, {b}) = {v} is not positive finite")


def i_direct_product(family: Sequence[DimensionStructure]) -> DimensionStructure:
    """Product order on the product of the S_i; the value is the minimum."""
    family = list(family)
    if not family:
        raise PreconditionError("need at least one structure")
    S = product_n([D.poset for D in family])
    points = _product_points(family)
    positions = list(cartesian(*[D.poset.elements for D in family]))
    table = {}
    for z, coords in points.items():
        row = {}
        for q in positions:
            vals = [D.mu(c, s) for D, c, s in zip(family, coords, q)]
            row[tuple_id(*q)] = INF if any(v.is_inf for v in vals) else ext_min(vals)
        table[z] = row
    out = DimensionStructure(S, list(points), table)
    _check_pairing(out, family, points, "i-direct product")
    return out


def l_direct_product(D1: DimensionStructure, D2: DimensionStructure) -> DimensionStructure:
    """Lexicographic order on S1 x S2; +inf where the first factor is +inf."""
    rep = classify(D1)
    if not rep.small:
        raise PreconditionError("the first factor must be small", rep.witnesses.get("small"))
    S = lexicographic(D1.poset, D2.poset)
    points = _product_points([D1, D2])
    table = {}
    for z, (x1, x2) in points.items():
        row = {}
        for s1 in D1.poset:
            a = D1.mu(x1, s1)
            for s2 in D2.poset:
                row[tuple_id(s1, s2)] = INF if a.is_inf else ext_mul(a, D2.mu(x2, s2))
        table[z] = row
    out = DimensionStructure(S, list(points), table)
    for z, (x1, x2) in points.items():
        d2 = D2.raw_dim(x2)
        if not d2.is_element:
            continue
        expected = DimValue.of(tuple_id(D1.dim(x1).element, d2.element))
        if out.raw_dim(z) != expected:
            raise LawViolation("l-direct product: dimension is not the coordinate pair",
                               (z, str(expected), str(out.raw_dim(z))))
    if rep.principal and rep.p_small and classify(D2).principal:
        # only points whose second coordinate has an element as dimension
        for z, (x1, x2) in points.items():
            if not D2.raw_dim(x2).is_element:
                continue
            d = out.dim(z)
            for s in S:
                if S.sbar_lt(d, DimValue.of(s)) and not out.mu(z, s).is_zero:
                    raise LawViolation("l-direct product of principal factors is not principal", (z, s))
    return out
