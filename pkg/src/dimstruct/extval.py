"""Exact values in the extended half-line [0, +inf].

Every measurement in a dimension structure lives here.  Values are exact
rationals (``fractions.Fraction``) plus a distinguished infinity, so all
comparisons made by the axiom checkers are bit-exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

__all__ = [
    "ExtVal",
    "ZERO",
    "ONE",
    "INF",
    "ext",
    "ext_add",
    "ext_mul",
    "ext_sign",
    "ext_sup",
    "ext_min",
    "parse_ext",
    "format_ext",
]

Number = Union[int, Fraction, str, "ExtVal"]


@total_ordering
class ExtVal:
    """A value in [0, +inf]: zero, a positive rational, or infinity.

    Instances are immutable and hashable.  A zero rational is always stored
    as the zero value, never as a positive rational with q == 0.
    """

    __slots__ = ("_q", "_inf")

    def __init__(self, q: Fraction | int = 0, inf: bool = False):
        if inf:
            object.__setattr__(self, "_q", None)
            object.__setattr__(self, "_inf", True)
            return
        q = Fraction(q)
        if q < 0:
            raise ValueError(f"negative value {q} is outside [0, +inf]")
        object.__setattr__(self, "_q", q)
        object.__setattr__(self, "_inf", False)

    def __setattr__(self, name, value):
        raise AttributeError("ExtVal is immutable")

    @property
    def is_inf(self) -> bool:
        return self._inf

    @property
    def is_zero(self) -> bool:
        return not self._inf and self._q == 0

    @property
    def is_finite(self) -> bool:
        return not self._inf

    @property
    def is_positive_finite(self) -> bool:
        """True for 0 < value < +inf (the values that make an s-point)."""
        return not self._inf and self._q > 0

    @property
    def tag(self) -> str:
        if self._inf:
            return "Inf"
        return "Zero" if self._q == 0 else "Fin"

    @property
    def q(self) -> Fraction:
        if self._inf:
            raise ValueError("+inf has no rational value")
        return self._q

    def _key(self):
        return (1, Fraction(0)) if self._inf else (0, self._q)

    def __eq__(self, other):
        if not isinstance(other, ExtVal):
            try:
                other = ext(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if not isinstance(other, ExtVal):
            other = ext(other)
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __add__(self, other):
        return ext_add(self, ext(other))

    __radd__ = __add__

    def __mul__(self, other):
        return ext_mul(self, ext(other))

    __rmul__ = __mul__

    def __repr__(self):
        return f"ExtVal({format_ext(self)!r})"

    def __str__(self):
        return format_ext(self)


ZERO = ExtVal(0)
ONE = ExtVal(1)
INF = ExtVal(inf=True)


def ext(value: Number) -> ExtVal:
    """Coerce an int, Fraction, textual form or ExtVal into an ExtVal."""
    if isinstance(value, ExtVal):
        return value
    if isinstance(value, str):
        return parse_ext(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not measurements")
    if isinstance(value, (int, Fraction)):
        return ExtVal(value)
    if isinstance(value, float):
        if value == float("inf"):
            return INF
        raise TypeError("floats are not accepted; use Fraction or a string")
    raise TypeError(f"cannot interpret {value!r} as an extended value")


def ext_add(a: ExtVal, b: ExtVal) -> ExtVal:
    if a.is_inf or b.is_inf:
        return INF
    return ExtVal(a.q + b.q)


def ext_mul(a: ExtVal, b: ExtVal) -> ExtVal:
    # 0 * (+inf) = 0
    if a.is_zero or b.is_zero:
        return ZERO
    if a.is_inf or b.is_inf:
        return INF
    return ExtVal(a.q * b.q)


def ext_sign(a: ExtVal) -> ExtVal:
    if a.is_inf:
        return INF
    return ZERO if a.is_zero else ONE


def ext_sup(values: Iterable[ExtVal]) -> ExtVal:
    """Least upper bound; the empty collection gives zero."""
    best = ZERO
    for v in values:
        if v > best:
            best = v
            if best.is_inf:
                break
    return best


def ext_min(values: Iterable[ExtVal]) -> ExtVal:
    """Minimum of a nonempty collection."""
    values = list(values)
    if not values:
        raise ValueError("minimum of an empty collection")
    return min(values)


def parse_ext(text: str) -> ExtVal:
    """Parse ``"0"``, ``"inf"``, ``"p/q"`` or ``"n"``."""
    s = text.strip()
    if s in ("inf", "+inf"):
        return INF
    if not s:
        raise ValueError("empty value string")
    try:
        if "/" in s:
            num, den = s.split("/")
            q = Fraction(int(num), int(den))
        else:
            q = Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed value {text!r}") from exc
    if q < 0:
        raise ValueError(f"negative value {text!r}")
    return ExtVal(q)


def format_ext(v: ExtVal) -> str:
    if v.is_inf:
        return "inf"
    if v.is_zero:
        return "0"
    return f"{v.q.numerator}/{v.q.denominator}"
