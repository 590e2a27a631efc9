"""Every finitely decidable consequence of the axioms, evaluated on one instance.

Each check recomputes its claim from the raw measurement table where it can,
so that a failure points at a bug in the derived notions rather than being
masked by them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import (
    check_ax1prime,
    check_synchronization,
    classify,
    discrete_bounds_check,
    principal_filter_witness,
    principal_zero_witness,
    as_point_order,
)
from .core import DimensionStructure, lex_le
from .poset import DimValue

__all__ = ["PropResult", "proposition_suite", "failures", "csic_witness"]


@dataclass(frozen=True)
class PropResult:
    prop: str
    passed: bool
    witness: object = None

    def to_dict(self):
        return {"prop": self.prop, "passed": self.passed, "witness": self.witness}


def _first(gen):
    for w in gen:
        return w
    return None


def _p0i(D):
    P = D.poset
    return _first(
        (x, s, p)
        for x in D.points
        for s, p in P.strict_pairs()
        if not D.mu(x, p).is_zero and not D.mu(x, s).is_inf
    )


def _cii(D):
    return _first(x for x in D.points if not D.poset.convexity(D.spectrum(x).Sinf_x).down_convex)


def _pzi(D):
    return _first(x for x in D.points if not D.poset.convexity(D.spectrum(x).S0_x).up_convex)


def _pddsd(D):
    return _first(x for x in D.points if len(D.s_points(x)) > 1)


def _ax3_equiv(D):
    P = D.poset
    return _first(
        x for x in D.points
        if (P.inf(D.finite_set(x)) is None) != (P.inf(D.zero_set(x)) is None)
    )


def csic_witness(D, strict_guard: bool = True):
    """First ``(x, sup Sinf_x, inf S0_x)`` with the sup above the inf.

    With ``strict_guard`` the claim is only tested when every element of
    ``Sinf_x`` is comparable with every element of ``S0_x``; without it the
    bare "exist and are comparable" guard is used, which admits genuine
    counterexamples on non-chains.
    """
    P = D.poset
    for x in D.points:
        sp = D.spectrum(x)
        hi = P.sup(sp.Sinf_x)
        lo = P.inf(sp.S0_x)
        if hi is None or lo is None or not P.sbar_comparable(hi, lo):
            continue
        if strict_guard and not all(P.comparable(a, b) for a in sp.Sinf_x for b in sp.S0_x):
            continue
        if not P.sbar_le(hi, lo):
            return (x, str(hi), str(lo))
    return None


def _dim_sandwich(D):
    # dim x <= inf S0_x, since S0_x is contained in S_x.
    P = D.poset
    for x in D.points:
        lo = P.inf(D.zero_set(x))
        if lo is not None and not P.sbar_le(D.dim(x), lo):
            return x
    return None


def _lex(D):
    P = D.poset
    for x in D.points:
        for y in D.points:
            if D.le_D(x, y) != lex_le(P, D.mu_D(x), D.mu_D(y)):
                return (x, y)
    return None


def _s_point(D):
    for x in D.points:
        md = D.mu_D(x)
        for s in D.poset:
            lhs = D.mu(x, s).is_positive_finite
            rhs = D.poset.sbar_eq(md.dim, DimValue.of(s)) and md.value.is_positive_finite
            if lhs != rhs:
                return (x, s)
    return None


def _pprinceq(D):
    for x in D.points:
        if (principal_filter_witness(D, x) is None) != (principal_zero_witness(D, x) is None):
            return x
    return None


def _classes(D):
    seen = {}
    for key, members in D.classes().items():
        for x in members:
            if x in seen:
                return x
            seen[x] = key
        for x in members:
            if D.class_C(key[0], key[1]) != members:
                return (str(key[0]), str(key[1]))
    missing = [x for x in D.points if x not in seen]
    return missing[0] if missing else None


def _small_strong(rep):
    if rep.p_small and not rep.p_strong:
        return "p_small"
    if rep.m_small and not rep.m_strong:
        return "m_small"
    if rep.small and not rep.strong:
        return "small"
    return None


def proposition_suite(D: DimensionStructure, point_order=None) -> list:
    """Evaluate every applicable universally quantified claim on ``D``.

    ``point_order`` (a poset on X or a pair list) enables the
    synchronization propositions.
    """
    P = D.poset
    results = []

    def add(name, witness):
        results.append(PropResult(name, witness is None, witness))

    add("p0i", _p0i(D))
    add("cii", _cii(D))
    add("pzi", _pzi(D))
    add("pddsd", _pddsd(D))
    add("ax3_equiv", _ax3_equiv(D))
    add("csic", csic_witness(D))
    add("dim_le_inf_S0", _dim_sandwich(D))
    add("leqD_lex", _lex(D))
    add("s_point_dim", _s_point(D))
    add("pprinceq", _pprinceq(D))
    add("C_partition", _classes(D))

    rep = classify(D)
    add("small_strong", _small_strong(rep))
    ordered = P.is_chain()
    if ordered:
        add("ordered_principal", None if rep.principal else rep.witnesses.get("principal"))
        ok, w = check_ax1prime(D)
        add("ax1prime", w)
        dr = discrete_bounds_check(D)
        add("discrete_bounds", None if dr.ok else dr.witness)

    if point_order is not None:
        order = as_point_order(D, point_order)
        sync = check_synchronization(D, order, "finite")
        add("cond1_weak", None if (not sync.condition1 or sync.condition1_weak) else sync.witness1_weak)
        if ordered:
            w = None
            for x, y in order.strict_pairs():
                lhs = lex_le(P, D.mu_D(x), D.mu_D(y))
                rhs = all(D.mu(x, s) <= D.mu(y, s) for s in P)
                if lhs != rhs:
                    w = (x, y)
                    break
            add("psync1", w)
        if order.is_chain() and sync.condition1:
            add("psynf", sync.witness2)
    return results


def failures(results) -> list:
    return [r for r in results if not r.passed]
