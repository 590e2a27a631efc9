"""Exponential-tower expansion of nonnegative reals.

``g_0(y) = y / (y + 1)`` and ``g_n(y) = exp(g_{n-1}(y))``.  The ranges
``[g_n(0), g_n(+inf))`` tile ``[0, +inf)``; the height of ``z`` is the level
whose range holds it and the measure there is ``g_n^{-1}(z)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from ..errors import NegativeInput, PrecisionError
from ..extval import INF, ZERO, ExtVal

WORK_BITS = 256
DEFAULT_PRECISION = Fraction(1, 10**9)


def _mpf(value) -> mpmath.mpf:
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    if isinstance(value, float):
        return mpmath.mpf(repr(value))
    return mpmath.mpf(value)


@dataclass(frozen=True)
class TowerNumber:
    value: object
    precision: Fraction = field(default=DEFAULT_PRECISION)

    def __post_init__(self):
        object.__setattr__(self, "precision", Fraction(self.precision))
        if self.precision <= 0:
            raise ValueError("precision must be positive")
        with mpmath.workprec(WORK_BITS):
            if _mpf(self.value) < 0:
                raise NegativeInput(f"{self.value!r} is negative")


def tower_g(n: int, y) -> mpmath.mpf:
    """``g_n(y)`` at working precision; ``y`` may be ``mpmath.inf``."""
    with mpmath.workprec(WORK_BITS):
        y = _mpf(y)
        t = mpmath.mpf(1) if mpmath.isinf(y) else y / (y + 1)
        for _ in range(n):
            t = mpmath.exp(t)
        return +t


def _fraction(v: mpmath.mpf) -> Fraction:
    man, exp = mpmath.mpf(v).man_exp
    return Fraction(int(man)) * Fraction(2) ** int(exp)


@dataclass(frozen=True)
class TowerDecomposition:
    height: int
    mu: ExtVal
    exact: object = None

    def to_dict(self):
        from ..extval import format_ext
        return {"height": self.height, "mu": format_ext(self.mu)}


def tower_decompose(z) -> TowerDecomposition:
    """Height by iterated logarithms, then ``y = t / (1 - t)``.

    The returned measure is the first of ``y.limit_denominator(10**k)``,
    ``k = 0, 1, ...``, within half the configured precision of ``y`` and
    whose image under ``g_height`` is that close to ``z``.
    """
    if not isinstance(z, TowerNumber):
        z = TowerNumber(z)
    with mpmath.workprec(WORK_BITS):
        x = _mpf(z.value)
        t, h = x, 0
        while t >= 1:
            t = mpmath.log(t)
            h += 1
        if t < 0:
            raise PrecisionError(f"inverse iteration left [0, 1) at {t}")
        if t == 0:
            return TowerDecomposition(h, ZERO, mpmath.mpf(0))
        y = t / (1 - t)
        tol = _mpf(z.precision) / 2
        yq = _fraction(y)
        for k in range(WORK_BITS // 4):
            q = yq.limit_denominator(10**k)
            if abs(tower_g(h, q) - x) <= tol and abs(_mpf(q) - y) <= tol:
                break
        else:
            raise PrecisionError("could not reach the requested precision")
        return TowerDecomposition(h, ExtVal(q), y)


def tower_mu(z, k: int) -> ExtVal:
    """Measure at level ``k``: infinite below the height, zero above it."""
    dec = tower_decompose(z)
    if k < dec.height:
        return INF
    if k > dec.height:
        return ZERO
    return dec.mu
