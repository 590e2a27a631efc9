"""Property classes, synchronization and the discrete-chain checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import Candidate, DimensionStructure, Order, lex_le
from .errors import CycleError, InconsistencyError, NotAPartialOrder, ShapeError, UnknownElement
from .poset import TOP, DimValue, FinitePoset, build_poset

__all__ = [
    "PropertyReport",
    "SyncReport",
    "DiscreteReport",
    "classify",
    "principal_filter_witness",
    "principal_zero_witness",
    "check_ax1prime",
    "check_synchronization",
    "discrete_bounds_check",
    "induced_point_order",
    "as_point_order",
    "pointwise_monotone",
]

FLAGS = (
    "fully_normal", "normal", "quasi_normal",
    "p_strong", "m_strong", "strong",
    "principal", "p_small", "m_small", "small",
)


@dataclass
class PropertyReport:
    fully_normal: bool
    normal: bool
    quasi_normal: bool
    p_strong: bool
    m_strong: bool
    strong: bool
    principal: bool
    p_small: bool
    m_small: bool
    small: bool
    witnesses: dict = field(default_factory=dict)

    def to_dict(self):
        out = {f: getattr(self, f) for f in FLAGS}
        out["witnesses"] = {k: list(v) if isinstance(v, tuple) else v for k, v in self.witnesses.items()}
        return out


def principal_filter_witness(D: DimensionStructure, x: str):
    """First ``s`` breaking "S_x together with inf S_x is a principal filter"."""
    P = D.poset
    d = D.dim(x)
    finite = D.finite_set(x)
    for s in P:
        if P.sbar_le(d, DimValue.of(s)) and s not in finite and not P.sbar_eq(d, DimValue.of(s)):
            return s
    return None


def principal_zero_witness(D: DimensionStructure, x: str):
    """First ``s > dim x`` with ``mu(x, s) != 0``."""
    P = D.poset
    d = D.dim(x)
    for s in P:
        if P.sbar_lt(d, DimValue.of(s)) and not D.mu(x, s).is_zero:
            return s
    return None


def classify(D: DimensionStructure) -> PropertyReport:
    P = D.poset
    w = {}
    s_point_sites = {s for x in D.points for s in D.s_points(x)}
    missing = [s for s in P if s not in s_point_sites]
    fully_normal = not missing
    if missing:
        w["fully_normal"] = missing[0]

    inner = [s for s in P if s not in (P.minimum, P.maximum)]
    missing = [s for s in inner if s not in s_point_sites]
    normal = not missing
    if missing:
        w["normal"] = missing[0]

    attained = {D.dim(x) for x in D.points}
    missing = [s for s in inner if DimValue.of(s) not in attained]
    quasi_normal = not missing
    if missing:
        w["quasi_normal"] = missing[0]

    def all_points(pred, name):
        for x in D.points:
            if not pred(x):
                w[name] = x
                return False
        return True

    p_strong = all_points(lambda x: any(v.is_finite for v in D.row(x).values()), "p_strong")
    m_strong = all_points(lambda x: any(not v.is_zero for v in D.row(x).values()), "m_strong")
    # an adjoined +inf / -inf dimension never counts as small (see notes)
    p_small = all_points(lambda x: not D.dim(x).is_top and D.mu_D(x).value.is_finite, "p_small")
    m_small = all_points(lambda x: not D.dim(x).is_bottom and not D.mu_D(x).value.is_zero, "m_small")

    principal = True
    for x in D.points:
        by_filter = principal_filter_witness(D, x)
        by_zero = principal_zero_witness(D, x)
        if (by_filter is None) != (by_zero is None):
            raise InconsistencyError(
                f"principality tests disagree at {x!r}: filter={by_filter!r}, zero={by_zero!r}", x)
        if by_filter is not None and principal:
            principal = False
            w["principal"] = (x, by_filter)

    if not p_strong:
        w["strong"] = w["p_strong"]
    elif not m_strong:
        w["strong"] = w["m_strong"]
    if not p_small:
        w["small"] = w["p_small"]
    elif not m_small:
        w["small"] = w["m_small"]
    return PropertyReport(
        fully_normal=fully_normal,
        normal=normal,
        quasi_normal=quasi_normal,
        p_strong=p_strong,
        m_strong=m_strong,
        strong=p_strong and m_strong,
        principal=principal,
        p_small=p_small,
        m_small=m_small,
        small=p_small and m_small,
        witnesses=w,
    )


# -- discrete ordered posets ---------------------------------------------------

def _require_chain(P: FinitePoset):
    if not P.is_chain():
        raise ShapeError("operation requires a finite chain")


def check_ax1prime(c: Candidate):
    """``mu(x, s) < inf`` implies ``mu(x, s+) = 0``; returns ``(ok, witness)``."""
    P = c.poset
    _require_chain(P)
    for x in c.points:
        for s in P:
            t = P.successor(s)
            if t is not None and c.mu(x, s).is_finite and not c.mu(x, t).is_zero:
                return False, (x, s)
    return True, None


def _strict_le(P: FinitePoset, a: DimValue, b: DimValue) -> bool:
    # S-bar with bottom/top kept apart from min/max.
    if a.is_bottom or b.is_top:
        return True
    if a.is_top or b.is_bottom:
        return False
    return P.le(a.element, b.element)


@dataclass
class DiscreteReport:
    ok: bool
    witness: object = None
    p_strong_implies_p_small: bool = True


def discrete_bounds_check(D: DimensionStructure) -> DiscreteReport:
    """``(sup Sinf_x)+ <= dim x <= inf S0_x`` on a chain, plus the p-small corollary.

    The successor of ``sup {} = -inf`` is taken to be the minimum of S, and a
    missing successor of the maximum is taken to be +inf.
    """
    P = D.poset
    _require_chain(P)
    for x in D.points:
        sp = D.spectrum(x)
        if not sp.Sinf_x:
            lower = DimValue.of(P.minimum) if len(P) else TOP
        else:
            top_inf = P.greatest(sp.Sinf_x)
            nxt = P.successor(top_inf)
            lower = TOP if nxt is None else DimValue.of(nxt)
        d = D.raw_dim(x)
        upper = P.inf(sp.S0_x)
        if not (_strict_le(P, lower, d) and _strict_le(P, d, upper)):
            return DiscreteReport(False, (x, str(lower), str(d), str(upper)))
    rep = classify(D)
    implied = (not rep.p_strong) or rep.p_small
    return DiscreteReport(implied, None if implied else ("p_small", rep.witnesses.get("p_small")), implied)


# -- synchronization -------------------------------------------------------------

def as_point_order(D: Candidate, order) -> FinitePoset:
    """Accept a FinitePoset on X or a pair list; validate it is a partial order on X."""
    if isinstance(order, FinitePoset):
        if set(order.elements) != set(D.points):
            raise NotAPartialOrder("point order must be defined on exactly the points")
        return order
    try:
        return build_poset(list(D.points), list(order or []))
    except (CycleError, UnknownElement) as exc:
        raise NotAPartialOrder(str(exc)) from exc


def induced_point_order(D: DimensionStructure) -> FinitePoset:
    """The order ``<=_D`` as a poset on X (fails when it is only a preorder)."""
    pairs = []
    for x in D.points:
        for y in D.points:
            if x == y:
                continue
            verdict = D.leq_D(x, y)
            if verdict is Order.EQUAL_CLASS:
                raise NotAPartialOrder(f"{x!r} and {y!r} share dimension and measure")
            if verdict is Order.LESS_OR_EQUAL:
                pairs.append((x, y))
    return build_poset(list(D.points), pairs)


@dataclass
class SyncReport:
    condition1: bool
    condition1_weak: bool
    condition2: bool
    alpha: object
    witness1: object = None
    witness1_weak: object = None
    witness2: object = None

    @property
    def synchronized(self) -> bool:
        return self.condition1 and self.condition2

    def to_dict(self):
        return {
            "synchronized": self.synchronized,
            "alpha": self.alpha,
            "condition1": self.condition1,
            "condition1_weak": self.condition1_weak,
            "condition2": self.condition2,
            "witness1": self.witness1,
            "witness1_weak": self.witness1_weak,
            "witness2": self.witness2,
        }


def check_synchronization(D: DimensionStructure, point_order, alpha="finite") -> SyncReport:
    """Check conditions 1, 1' and 2 of alpha-synchronization.

    Condition 2 is checked on every ``Y`` with ``2 <= |Y| <= alpha`` that has
    a supremum in the point order (``alpha="finite"`` means all subsets);
    singletons satisfy it trivially.
    """
    order = as_point_order(D, point_order)
    P = D.poset
    w1 = w1w = w2 = None
    for x, y in order.strict_pairs():
        if w1 is None and not lex_le(P, D.mu_D(x), D.mu_D(y)):
            w1 = [x, y]
        if w1w is None and not P.sbar_le(D.dim(x), D.dim(y)):
            w1w = [x, y]
    if alpha == "finite":
        limit = len(D.points)
    else:
        limit = int(alpha)
        if limit < 1:
            raise ValueError("alpha must be a positive integer or 'finite'")
    for k in range(2, min(limit, len(D.points)) + 1):
        if w2 is not None:
            break
        for Y in combinations(D.points, k):
            top = order.sup(Y)
            if top is None or not top.is_element:
                continue
            dims = [D.dim(y) for y in Y]
            sd = P.sbar_bound(dims, "sup")
            dtop = D.dim(top.element)
            if sd is None or not P.sbar_eq(sd, dtop):
                w2 = {
                    "Y": list(Y),
                    "sup_Y": top.element,
                    "sup_dims": None if sd is None else str(sd),
                    "dim_sup_Y": str(dtop),
                }
                break
    return SyncReport(w1 is None, w1w is None, w2 is None, alpha, w1, w1w, w2)


def pointwise_monotone(D: DimensionStructure, point_order) -> tuple:
    """``x <= y`` implies ``mu(x, s) <= mu(y, s)`` for every ``s``; ``(ok, witness)``."""
    order = as_point_order(D, point_order)
    for x, y in order.strict_pairs():
        for s in D.poset:
            if D.mu(x, s) > D.mu(y, s):
                return False, (x, y, s)
    return True, None
