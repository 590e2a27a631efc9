"""Independent brute-force references used by the tests.

Nothing here imports the package's poset or axiom code: orders are closed
with Floyd-Warshall, infima are found by enumerating lower bounds in S-bar,
and the axioms are read literally.
"""

from fractions import Fraction

BOT, TOP = "-inf", "+inf"


def closure(elements, pairs):
    le = {(a, a) for a in elements} | {tuple(p) for p in pairs}
    for k in elements:
        for i in elements:
            if (i, k) not in le:
                continue
            for j in elements:
                if (k, j) in le:
                    le.add((i, j))
    return le


def sbar_le(le, a, b):
    if a == b or a == BOT or b == TOP:
        return True
    if a == TOP or b == BOT:
        return False
    return (a, b) in le


def _extreme(elements, le, subset, lower):
    cands = list(elements) + [BOT, TOP]
    if lower:
        bounds = [c for c in cands if all(sbar_le(le, c, s) for s in subset)]
        best = [g for g in bounds if all(sbar_le(le, b, g) for b in bounds)]
    else:
        bounds = [c for c in cands if all(sbar_le(le, s, c) for s in subset)]
        best = [g for g in bounds if all(sbar_le(le, g, b) for b in bounds)]
    return best[0] if best else None


def alias(elements, le, v):
    """Identify the adjoined extremes with an existing maximum or minimum."""
    if v == TOP:
        top = [m for m in elements if all((e, m) in le for e in elements)]
        return top[0] if top else TOP
    if v == BOT:
        bot = [m for m in elements if all((m, e) in le for e in elements)]
        return bot[0] if bot else BOT
    return v


def inf(elements, le, subset):
    v = _extreme(elements, le, subset, True)
    return None if v is None else alias(elements, le, v)


def sup(elements, le, subset):
    v = _extreme(elements, le, subset, False)
    return None if v is None else alias(elements, le, v)


def val(v):
    """``None`` for +inf, otherwise a Fraction."""
    s = str(v)
    if s == "inf":
        return None
    return Fraction(s)


def is_inf(v):
    return val(v) is None


def is_zero(v):
    return val(v) == 0


def violations(elements, le, points, mu):
    """Set of ``(axiom, point)`` pairs breaking the three axioms as stated."""
    out = set()
    for x in points:
        row = mu[x]
        for s in elements:
            for p in elements:
                if s != p and (s, p) in le and not is_inf(row[s]) and not is_zero(row[p]):
                    out.add(("ax1", x))
                pos = not is_inf(row[s]) and not is_zero(row[s])
                if pos and not is_inf(row[p]) and (s, p) not in le and (p, s) not in le:
                    out.add(("ax2", x))
        zeros = [s for s in elements if is_zero(row[s])]
        if _extreme(elements, le, zeros, True) is None:
            out.add(("ax3", x))
    return out


def dim(elements, le, row):
    """``inf {s : mu_s < inf}`` in S-bar, aliased."""
    return inf(elements, le, [s for s in elements if not is_inf(row[s])])


def structure_data(D):
    """Plain (elements, le, points, mu) read from a package structure."""
    elements = list(D.poset.elements)
    le = closure(elements, [(a, b) for a in elements for b in elements if D.poset.le(a, b)])
    mu = {x: {s: str(D.mu(x, s)) for s in elements} for x in D.points}
    return elements, le, list(D.points), mu


def dim_str(d):
    """Package DimValue in the oracle's naming."""
    if d.is_bottom:
        return BOT
    if d.is_top:
        return TOP
    return d.element


def raw_dim(elements, le, row):
    """Like :func:`dim` but with the adjoined extremes kept apart."""
    return _extreme(elements, le, [s for s in elements if not is_inf(row[s])], True)


def principal(elements, le, points, mu):
    """Every value strictly above the dimension is 0."""
    for x in points:
        d = dim(elements, le, mu[x])
        for s in elements:
            if s != d and sbar_le(le, d, s) and not is_zero(mu[x][s]):
                return False
    return True
