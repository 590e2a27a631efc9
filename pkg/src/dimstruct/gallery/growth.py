"""Growth-rate structures on sequences tending to infinity.

Sequences are restricted to ``c * f_m(n) * n^beta * (log n)^gamma`` with
``f_0 = 1`` and ``f_{m+1} = exp(f_m)``.  For these, every liminf and limsup
against ``f_k(n) * n^alpha`` is settled by comparing ``(m, beta, gamma)``
with ``(k, alpha, 0)`` lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import UnsupportedForm
from ..extval import INF, ZERO, ExtVal, ext_min, ext_mul

KINDS = ("liminf", "limsup")


@dataclass(frozen=True)
class GrowthSeq:
    tower: int = 0
    pow: Fraction = Fraction(1)
    logexp: int = 0
    coeff: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.tower, int) or self.tower < 0:
            raise UnsupportedForm("tower height must be a nonnegative integer")
        if not isinstance(self.logexp, int):
            raise UnsupportedForm("log exponent must be an integer")
        object.__setattr__(self, "pow", Fraction(self.pow))
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff <= 0:
            raise UnsupportedForm("coefficient must be positive")
        if self.key <= (0, 0, 0):
            raise UnsupportedForm("sequence does not tend to infinity")

    @property
    def key(self) -> tuple:
        return (self.tower, self.pow, self.logexp)


def _probe(probe) -> tuple:
    if isinstance(probe, tuple):
        k, a = probe
    else:
        k, a = 0, probe
    if not isinstance(k, int) or k < 0:
        raise UnsupportedForm("probe tower must be a nonnegative integer")
    return k, Fraction(a)


def growth_measure(x: GrowthSeq, probe, kind: str = "liminf") -> ExtVal:
    """Limit of ``x_n / (f_k(n) * n^alpha)``; ``probe`` is ``(k, alpha)`` or ``alpha``."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    k, a = _probe(probe)
    ref = (k, a, 0)
    if x.key > ref:
        return INF
    if x.key < ref:
        return ZERO
    return ExtVal(x.coeff)


@dataclass(frozen=True)
class GrowthDim:
    """Symbolic dimension; ``value`` is ``beta`` or ``(m, beta)``, or ``None`` for +inf."""

    value: object
    mu: ExtVal


def growth_dim(x: GrowthSeq, family: str = "alpha_only") -> GrowthDim:
    if family == "alpha_only":
        if x.tower > 0:
            return GrowthDim(None, ZERO)
        return GrowthDim(x.pow, growth_measure(x, x.pow))
    if family == "tower_alpha":
        return GrowthDim((x.tower, x.pow), growth_measure(x, (x.tower, x.pow)))
    raise ValueError("family must be 'alpha_only' or 'tower_alpha'")


@dataclass(frozen=True)
class EvenOddSeq:
    """Independent growth laws along even and odd indices."""

    even: GrowthSeq
    odd: GrowthSeq


def evenodd_measure(x: EvenOddSeq, probe, mode: str = "product") -> ExtVal:
    """liminf along evens at ``alpha`` combined with limsup along odds at ``beta``."""
    a, b = (Fraction(v) for v in probe)
    if a <= 0 or b <= 0:
        raise ValueError("probe coordinates must be positive")
    u = growth_measure(x.even, a, "liminf")
    v = growth_measure(x.odd, b, "limsup")
    if u.is_inf or v.is_inf:
        return INF
    if mode == "product":
        return ext_mul(u, v)
    if mode == "min":
        return ext_min((u, v))
    raise ValueError("mode must be 'product' or 'min'")


def evenodd_dim(x: EvenOddSeq) -> tuple:
    """Infimum of the finite region under the product order."""
    if x.even.tower or x.odd.tower:
        raise UnsupportedForm("power probes cannot bound a tower sequence")
    return (x.even.pow, x.odd.pow)


def evenodd_nonprincipal_witness(x: EvenOddSeq, probes_a, probes_b, mode: str = "product"):
    """First grid probe strictly above the dimension with nonzero value."""
    d = evenodd_dim(x)
    for a in sorted(Fraction(p) for p in probes_a):
        for b in sorted(Fraction(p) for p in probes_b):
            if (a, b) != d and a >= d[0] and b >= d[1]:
                if not evenodd_measure(x, (a, b), mode).is_zero:
                    return (a, b)
    return None
