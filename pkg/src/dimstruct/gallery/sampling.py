"""Finite samples of the gallery families as core structures, and their
cross-validation against the analytic dimensions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..core import Candidate, DimensionStructure, check_axioms
from ..errors import LawViolation, WindowTooSmall
from ..poset import DimValue, build_poset, chain, tuple_id
from .growth import EvenOddSeq, GrowthSeq, evenodd_dim, evenodd_measure, growth_dim, growth_measure
from .lebesgue import IntervalSet, RectSet, leb_dim, leb_mu, pleb_dim_pair, pleb_mu
from .ranked import RankedSet, ranked_dim, ranked_mu
from .scale import ScaleVector, scale_dim, scale_rho
from .tower import TowerNumber, tower_decompose, tower_mu

FAMILIES = ("ranked", "growth", "evenodd", "scale", "leb", "pleb", "tower")


def _name(key) -> str:
    if isinstance(key, tuple):
        return tuple_id(*(str(k) for k in key))
    return str(key)


def _key(family, w):
    if family == "evenodd":
        return tuple(Fraction(v) for v in w)
    if family == "growth":
        return Fraction(w)
    if family == "pleb":
        return tuple(int(v) for v in w)
    return int(w)


def window_poset(family: str, window):
    """Poset of probe positions; chains except for the two-parameter families."""
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    keys = sorted({_key(family, w) for w in window})
    if not keys:
        raise ValueError("window must be nonempty")
    if family in ("evenodd", "pleb"):
        pairs = [(_name(a), _name(b)) for a in keys for b in keys
                 if a != b and all(u <= v for u, v in zip(a, b))]
        return build_poset([_name(k) for k in keys], pairs), keys
    return chain([_name(k) for k in keys]), keys


def _measure(family, item, key):
    if family == "ranked":
        return ranked_mu(item, key)
    if family == "growth":
        return growth_measure(item, key)
    if family == "evenodd":
        return evenodd_measure(item, key)
    if family == "scale":
        return scale_rho(item[0], item[1], key)
    if family == "leb":
        return leb_mu(item, key)
    if family == "pleb":
        return pleb_mu(item, key)
    return tower_mu(item, key)


def sample_finite(family: str, window, sample) -> DimensionStructure:
    """Core structure whose table holds the analytic values on the window."""
    P, keys = window_poset(family, window)
    points = [f"x{i}" for i in range(len(sample))]
    table = {x: {_name(k): _measure(family, item, k) for k in keys} for x, item in zip(points, sample)}
    cand = Candidate(P, points, table)
    report = check_axioms(cand)
    if not report.ok:
        raise LawViolation("sampled family fails the axioms", report.violations[0].to_dict())
    return DimensionStructure.from_candidate(cand)


def analytic_dim(family: str, item):
    """``(kind, key, attained)``: kind is bottom/element/top; ``attained`` says
    the value at the dimension is finite."""
    if family == "ranked":
        return "element", int(ranked_dim(item).element), True
    if family == "growth":
        g = growth_dim(item, "alpha_only")
        if g.value is None:
            return "top", None, False
        return "element", g.value, not g.mu.is_inf
    if family == "evenodd":
        d = evenodd_dim(item)
        return "element", d, not evenodd_measure(item, d).is_inf
    if family == "scale":
        return "element", int(scale_dim(*item).element), True
    if family == "leb":
        d = leb_dim(item)
        return ("bottom", None, True) if d.is_bottom else ("element", int(d.element), True)
    if family == "pleb":
        d = pleb_dim_pair(item)
        return ("bottom", None, True) if d is None else ("element", d, True)
    return "element", tower_decompose(item).height, True


@dataclass
class CrossReport:
    family: str
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["status"] != "mismatch" for r in self.rows)

    @property
    def outside(self) -> list:
        return [r for r in self.rows if r["status"] == "outside"]

    def to_dict(self):
        return {"family": self.family, "ok": self.ok, "rows": self.rows}


def cross_validate(family: str, window, sample, strict: bool = False) -> CrossReport:
    """Compare analytic and core dimensions point by point.

    Statuses: ``agree``; ``successor`` when the infimum is not attained on a
    chain and the core dimension is the next probe up; ``unattained`` for
    the same situation off chains; ``outside`` when the analytic dimension
    is not a probe (raised as :class:`WindowTooSmall` when ``strict``);
    ``mismatch`` otherwise.
    """
    D = sample_finite(family, window, sample)
    P = D.poset
    out = CrossReport(family)
    for x, item in zip(D.points, sample):
        kind, key, attained = analytic_dim(family, item)
        core = D.raw_dim(x)
        row = {"point": x, "analytic": _name(key) if kind == "element" else kind, "core": str(core)}
        name = _name(key) if kind == "element" else None
        if name is None or name not in P:
            row["status"] = "outside"
            if strict:
                raise WindowTooSmall(f"analytic dimension of {x} is not in the window", row)
        elif attained:
            row["status"] = "agree" if core == DimValue.of(name) else "mismatch"
        elif P.is_chain():
            nxt = P.least(P.strict_up(name))
            want = DimValue.of(nxt) if nxt is not None else DimValue("top")
            row["status"] = "successor" if core == want else "mismatch"
        else:
            row["status"] = "unattained"
        out.rows.append(row)
    return out


__all__ = [
    "FAMILIES",
    "window_poset",
    "sample_finite",
    "analytic_dim",
    "CrossReport",
    "cross_validate",
    "RankedSet",
    "GrowthSeq",
    "EvenOddSeq",
    "ScaleVector",
    "IntervalSet",
    "RectSet",
    "TowerNumber",
]
