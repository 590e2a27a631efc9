"""Maps between dimension structures and the sign collapse."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Candidate, DimensionStructure, check_axioms
from .errors import LawViolation, NotSurjective, ShapeError, UnknownElement, UnknownPoint
from .extval import ext_sign, ext_sup
from .poset import DimValue

__all__ = [
    "StructureMap",
    "MapReport",
    "verify_map",
    "dim_transport_check",
    "sign_collapse",
    "fiber_sup",
    "pushforward_check",
    "KINDS",
]

KINDS = ("morphism", "isomorphism", "semi_isomorphism")
_ALIASES = {"iso": "isomorphism", "semiiso": "semi_isomorphism", "semi-isomorphism": "semi_isomorphism"}


def _kind(kind: str) -> str:
    kind = _ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    return kind


@dataclass(frozen=True)
class StructureMap:
    """A point map ``f`` together with a position map ``g``."""

    f: Mapping[str, str]
    g: Mapping[str, str]

    @classmethod
    def from_pairs(cls, f_pairs, g_pairs) -> "StructureMap":
        f, g = {}, {}
        for target, pairs in ((f, f_pairs), (g, g_pairs)):
            for a, b in pairs:
                if a in target and target[a] != b:
                    raise ValueError(f"{a!r} is mapped twice")
                target[a] = b
        return cls(f, g)

    @classmethod
    def identity(cls, D: Candidate) -> "StructureMap":
        return cls({x: x for x in D.points}, {s: s for s in D.poset})

    def g_bar(self, d: DimValue) -> DimValue:
        return DimValue.of(self.g[d.element]) if d.is_element else d


@dataclass
class MapReport:
    ok: bool
    kind: str
    witness: object = None
    reason: str = ""

    def to_dict(self):
        return {"ok": self.ok, "kind": self.kind, "reason": self.reason,
                "witness": list(self.witness) if isinstance(self.witness, tuple) else self.witness}


def _check_total(D1, D2, m):
    for x in D1.points:
        if x not in m.f:
            raise ShapeError(f"f is not defined at {x!r}")
        if m.f[x] not in D2.points:
            raise UnknownPoint(m.f[x])
    for s in D1.poset:
        if s not in m.g:
            raise ShapeError(f"g is not defined at {s!r}")
        if m.g[s] not in D2.poset:
            raise UnknownElement(m.g[s])


def _check_bijective(D1, D2, m):
    if len(set(m.f[x] for x in D1.points)) != len(D1.points) or len(D1.points) != len(D2.points):
        raise ShapeError("f is not a bijection")
    if len(set(m.g[s] for s in D1.poset)) != len(D1.poset) or len(D1.poset) != len(D2.poset):
        raise ShapeError("g is not a bijection")


def verify_map(D1: Candidate, D2: Candidate, m: StructureMap, kind: str = "morphism",
               order_iso: bool = True) -> MapReport:
    """Check that ``(f, g)`` is a map of the given kind.

    For the two bijective kinds ``g`` must also reflect the order when
    ``order_iso`` is set; a bijection that merely preserves it can move
    infima and so break dimension transport.
    """
    kind = _kind(kind)
    _check_total(D1, D2, m)
    if kind != "morphism":
        _check_bijective(D1, D2, m)
    P1, P2 = D1.poset, D2.poset
    for s, p in P1.relation():
        if not P2.le(m.g[s], m.g[p]):
            return MapReport(False, kind, (s, p), "g does not preserve the order")
    if kind != "morphism" and order_iso:
        for s in P1:
            for p in P1:
                if P2.le(m.g[s], m.g[p]) and not P1.le(s, p):
                    return MapReport(False, kind, (s, p), "g does not reflect the order")
    for x in D1.points:
        for s in P1:
            a, b = D1.mu(x, s), D2.mu(m.f[x], m.g[s])
            if kind == "morphism":
                bad = a > b
            elif kind == "isomorphism":
                bad = a != b
            else:
                bad = a.is_finite != b.is_finite
            if bad:
                return MapReport(False, kind, (x, s), "value condition fails")
            if kind == "semi_isomorphism" and a.is_inf != b.is_inf:
                raise LawViolation("semi-isomorphism does not preserve +inf", (x, s))
    return MapReport(True, kind)


def dim_transport_check(D1: DimensionStructure, D2: DimensionStructure, m: StructureMap,
                        kind: str = "morphism") -> MapReport:
    """How dimensions move along a verified map.

    Bijective kinds must carry ``dim x`` to ``dim f(x)`` (isomorphisms also
    the value there).  A morphism only owes ``g(dim x) <= dim f(x)`` at
    points with positive value at the dimension and comparable images.
    """
    kind = _kind(kind)
    P2 = D2.poset
    for x in D1.points:
        d1 = D1.dim(x)
        gd = P2.canonical(m.g_bar(d1))
        d2 = D2.dim(m.f[x])
        if kind == "morphism":
            if D1.mu_extended(x, d1).is_zero or not P2.sbar_comparable(gd, d2):
                continue
            if not P2.sbar_le(gd, d2):
                return MapReport(False, kind, (x, str(gd), str(d2)), "g(dim x) above dim f(x)")
            continue
        if not P2.sbar_eq(gd, d2):
            return MapReport(False, kind, (x, str(gd), str(d2)), "dimension not transported")
        if kind == "isomorphism" and D1.mu_extended(x, d1) != D2.mu_extended(m.f[x], d2):
            return MapReport(False, kind, (x, str(d1)), "value at the dimension not transported")
    return MapReport(True, kind)


def sign_collapse(D: DimensionStructure) -> DimensionStructure:
    """Replace every value by its sign (0, 1 or +inf)."""
    out = DimensionStructure(D.poset, D.points,
                             {x: {s: ext_sign(v) for s, v in D.row(x).items()} for x in D.points})
    ident = StructureMap.identity(D)
    for check in (verify_map(D, out, ident, "semi_isomorphism"),
                  dim_transport_check(D, out, ident, "semi_isomorphism")):
        if not check.ok:
            raise LawViolation("sign collapse is not a semi-isomorphism", check.witness)
    return out


# -- pushforward along a surjection ------------------------------------------------

def _fibers(D1, X2, f):
    fibers = {y: [] for y in X2}
    for x in D1.points:
        if x not in f:
            raise ShapeError(f"f is not defined at {x!r}")
        if f[x] not in fibers:
            raise UnknownPoint(f[x])
        fibers[f[x]].append(x)
    empty = [y for y, xs in fibers.items() if not xs]
    if empty:
        raise NotSurjective(f"no point maps to {empty[0]!r}")
    return fibers


def fiber_sup(D1: DimensionStructure, X2, f: Mapping[str, str]) -> dict:
    """The table ``mu2(y, s) = sup {mu1(x, s) : f(x) = y}``."""
    fibers = _fibers(D1, list(X2), f)
    return {y: {s: ext_sup(D1.mu(x, s) for x in xs) for s in D1.poset} for y, xs in fibers.items()}


@dataclass
class PushReport:
    ok: bool
    witness: object = None
    reason: str = ""
    structure: DimensionStructure | None = None

    def to_dict(self):
        return {"ok": self.ok, "reason": self.reason,
                "witness": list(self.witness) if isinstance(self.witness, tuple) else self.witness}


def pushforward_check(D1: DimensionStructure, X2, f: Mapping[str, str], mu2, mode: str = "le") -> PushReport:
    """Decide whether ``mu2`` on ``X2`` is a valid image of ``D1`` along ``f``.

    ``mode="le"`` asks ``mu1(x, s) <= mu2(f(x), s)``; ``mode="sign"`` asks the
    signs to agree.  Both also ask that a fiber measured 0 everywhere maps
    to 0.  S must be a chain.
    """
    if mode not in ("le", "sign"):
        raise ValueError("mode must be 'le' or 'sign'")
    P = D1.poset
    if not P.is_chain():
        raise ShapeError("pushforward requires S to be a chain")
    X2 = list(X2)
    fibers = _fibers(D1, X2, f)
    cand = Candidate(P, X2, mu2)
    for x in D1.points:
        for s in P:
            a, b = D1.mu(x, s), cand.mu(f[x], s)
            bad = a > b if mode == "le" else ext_sign(a) != ext_sign(b)
            if bad:
                return PushReport(False, (x, s), "condition 1 fails")
    for y, xs in fibers.items():
        for s in P:
            if all(D1.mu(x, s).is_zero for x in xs) and not cand.mu(y, s).is_zero:
                return PushReport(False, (y, s), "condition 2 fails")
    report = check_axioms(cand)
    if not report.ok:
        raise LawViolation("accepted image fails the axioms", report.violations[0].to_dict())
    return PushReport(True, structure=DimensionStructure.from_candidate(cand))
