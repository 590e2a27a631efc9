"""Completing pre-dimension structures by adjoining missing infima."""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import classify
from .core import Candidate, DimensionStructure, PreDimensionStructure, check_axioms, check_pre_axioms
from .errors import (
    LawViolation,
    MissingInfimum,
    NotASubstructure,
    PostValidationError,
    PreconditionError,
    PreInvalid,
    VerificationError,
)
from .extval import ext_sup
from .poset import DimValue, FinitePoset

__all__ = [
    "ExtensionResult",
    "extend",
    "pre_principal",
    "check_principality_preserved",
    "embed_into",
    "check_pre_axioms",
]


@dataclass
class ExtensionResult:
    extended: DimensionStructure
    new_elements: dict = field(default_factory=dict)
    embedding_of_S: dict = field(default_factory=dict)
    owner: dict = field(default_factory=dict)

    def hat(self, x: str) -> str | None:
        """The adjoined element completing the class of ``x``, if any."""
        return self.owner.get(x)


def _as_pre(c) -> Candidate:
    if isinstance(c, PreDimensionStructure):
        return c
    report = check_pre_axioms(c)
    if not report.pre_ok:
        raise PreInvalid("not a pre-dimension structure", report)
    return c


def _fresh(Sx, taken: set) -> str:
    # canonical name from the class, primed on collision
    out = "inf{" + ",".join(sorted(Sx)) + "}"
    while out in taken:
        out += "'"
    taken.add(out)
    return out


def extend(pre) -> ExtensionResult:
    """Adjoin one element per distinct finite-set class that lacks an infimum.

    The new element sits below exactly the members of its class, above every
    common lower bound of the class, and measures the supremum over the
    class.  The output is re-validated.
    """
    c = _as_pre(pre)
    P = c.poset
    classes = {}
    for x in c.points:
        Sx = c.finite_set(x)
        if Sx and P.inf(Sx) is None:
            classes.setdefault(Sx, []).append(x)
    taken = set(P.elements)
    new = {}
    owner = {}
    for Sx in sorted(classes, key=sorted):
        members = classes[Sx]
        name = _fresh(Sx, taken)
        new[name] = Sx
        for x in members:
            owner[x] = name
    if P.is_lattice() and new:
        raise LawViolation("a finite lattice was missing an infimum", sorted(new))

    elems = list(P.elements) + list(new)
    lower = {t: frozenset.intersection(*(P.down(p) for p in Sx)) for t, Sx in new.items()}
    up = {}
    for t in P:
        cone = set(P.up(t))
        cone |= {h for h in new if t in lower[h]}
        up[t] = frozenset(cone)
    for h, Sx in new.items():
        cone = {h} | set(Sx)
        cone |= {k for k, Sk in new.items() if Sk <= Sx}
        up[h] = frozenset(cone)
    _check_order(elems, up)
    Q = FinitePoset(elems, up)

    table = {}
    for y in c.points:
        row = {s: c.mu(y, s) for s in P}
        for h, Sx in new.items():
            row[h] = ext_sup(c.mu(y, s) for s in Sx)
        table[y] = row
    cand = Candidate(Q, c.points, table)
    report = check_axioms(cand)
    if not report.ok:
        raise PostValidationError("extension fails the axioms", report)
    D = DimensionStructure.from_candidate(cand)
    for x, h in owner.items():
        if D.raw_dim(x) != DimValue.of(h):
            raise LawViolation("adjoined element is not the infimum of its class", (x, h, str(D.raw_dim(x))))
    return ExtensionResult(D, new, {s: s for s in P}, owner)


def _check_order(elems, up):
    for a in elems:
        if a not in up[a]:
            raise PostValidationError(f"relation not reflexive at {a!r}")
        for b in up[a]:
            if b != a and a in up[b]:
                raise PostValidationError(f"relation not antisymmetric at {a!r}, {b!r}")
            if not up[b] <= up[a]:
                raise PostValidationError(f"relation not transitive through {b!r}")


def pre_principal(c) -> tuple:
    """Principality read off the finite sets directly; ``(ok, witness)``.

    Where ``inf S_x`` exists this is the usual test (0 strictly above it);
    where it does not, every member of ``S_x`` must measure 0.
    """
    P = c.poset
    for x in c.points:
        Sx = c.finite_set(x)
        d = P.inf(Sx)
        if d is None:
            for s in sorted(Sx):
                if not c.mu(x, s).is_zero:
                    return False, (x, s)
            continue
        for s in P:
            if P.sbar_lt(d, DimValue.of(s)) and not c.mu(x, s).is_zero:
                return False, (x, s)
    return True, None


def check_principality_preserved(pre, result: ExtensionResult) -> bool:
    ok, _ = pre_principal(pre)
    return (not ok) or classify(result.extended).principal


@dataclass
class EmbedReport:
    f: dict
    ok: bool = True

    def to_dict(self):
        return {"ok": self.ok, "f": dict(sorted(self.f.items()))}


def embed_into(pre, result: ExtensionResult, target: DimensionStructure) -> EmbedReport:
    """Map the extended poset into ``target`` fixing the old elements.

    Each adjoined element goes to the infimum of its class computed in the
    target.  Injectivity, strict monotonicity, agreement of values on the
    old elements and the supremum bound at the images are all verified.
    """
    c = _as_pre(pre)
    ok, w = pre_principal(c)
    if not ok:
        raise PreconditionError("the pre-structure must be principal", w)
    P, T = c.poset, target.poset
    if set(c.points) != set(target.points):
        raise NotASubstructure("target has different points")
    for s in P:
        if s not in T:
            raise NotASubstructure(f"target lacks element {s!r}")
    for s in P:
        for t in P:
            if P.le(s, t) != T.le(s, t):
                raise NotASubstructure(f"order between {s!r} and {t!r} differs in the target")
    for x in c.points:
        for s in P:
            if c.mu(x, s) != target.mu(x, s):
                raise NotASubstructure(f"value at ({x!r}, {s!r}) differs in the target")

    f = {s: s for s in P}
    for h, Sx in result.new_elements.items():
        d = T.inf(Sx)
        if d is None or not d.is_element:
            raise MissingInfimum(f"target has no infimum for the class of {h!r}")
        f[h] = d.element
    Q = result.extended.poset
    if len(set(f.values())) != len(f):
        seen = {}
        for k, v in f.items():
            if v in seen:
                raise VerificationError("embedding is not injective", (seen[v], k))
            seen[v] = k
    for s, t in Q.strict_pairs():
        if not T.lt(f[s], f[t]):
            raise VerificationError("embedding does not preserve the order", (s, t))
    for h, Sx in result.new_elements.items():
        for x in c.points:
            if result.owner.get(x) != h:
                continue
            bound = ext_sup(result.extended.mu(x, s) for s in Sx)
            if target.mu(x, f[h]) < bound:
                raise VerificationError("value at the image is below the class supremum", (x, h))
    return EmbedReport(f)
