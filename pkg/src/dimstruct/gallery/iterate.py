"""Stabilization of a decreasing self-map, as a structure over an initial segment of N."""

from __future__ import annotations

from typing import Callable, Mapping

from ..core import DimensionStructure
from ..errors import NotDecreasing
from ..extval import INF, ONE, ZERO
from ..poset import FinitePoset, build_poset, chain


def _orbit(f, x, length):
    out, cur = [], x
    for _ in range(length):
        cur = f(cur)
        out.append(cur)
    return out


def iterate_structure(X, order, f: Callable | Mapping, window: int | None = None) -> DimensionStructure:
    """``mu_n(x)`` is 0 once ``f_n(x) = f_{n+1}(x)``, 1 if that happens one
    step later, and infinite otherwise; ``f_0 = f``.

    ``order`` is a :class:`FinitePoset` on ``X`` or a list of pairs ``(a, b)``
    meaning ``a <= b``.  Points are named ``str(x)``.
    """
    X = list(X)
    fn = f.__getitem__ if isinstance(f, Mapping) else f
    names = {x: str(x) for x in X}
    if isinstance(order, FinitePoset):
        P = order
    else:
        P = build_poset(names.values(), [(names[a], names[b]) for a, b in order])
    for x in X:
        y = fn(x)
        if y not in names:
            raise NotDecreasing(f"f({x!r}) = {y!r} leaves the set", (x, y))
        if not P.le(names[y], names[x]):
            raise NotDecreasing(f"f({x!r}) = {y!r} is not below {x!r}", (x, y))
    W = len(X) if window is None else window
    S = chain([str(n) for n in range(W)])
    table = {}
    for x in X:
        orb = _orbit(fn, x, W + 2)
        row = {}
        for n in range(W):
            if orb[n] == orb[n + 1]:
                row[str(n)] = ZERO
            elif orb[n + 1] == orb[n + 2]:
                row[str(n)] = ONE
            else:
                row[str(n)] = INF
        table[names[x]] = row
    return DimensionStructure(S, [names[x] for x in X], table)
