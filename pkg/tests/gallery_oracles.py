"""Independent models for the gallery families, sharing nothing with the package."""

import itertools
from fractions import Fraction

import mpmath

# -- derived sets of ordinal intervals ---------------------------------------------
# (0, w^r] has the point w^r and every Cantor normal form
# w^e1*c1 + ... + w^ek*ck with r > e1 > ... > ek; such a point survives
# n derivations exactly when ek >= n.  Coefficients are cut at K, so a
# derived set is infinite when its count grows with K.


def _cnf_points(r, K):
    pts = [((r, 1),)]
    for size in range(1, r + 1):
        for exps in itertools.combinations(range(r - 1, -1, -1), size):
            for coeffs in itertools.product(range(1, K + 1), repeat=size):
                pts.append(tuple(zip(exps, coeffs)))
    return pts


def derived_count(signature, n, K):
    return sum(c * sum(1 for p in _cnf_points(r, K) if p[-1][0] >= n) for r, c in signature.items())


def derived_size(signature, n):
    """``None`` for infinite, else the number of points of the n-th derived set."""
    a, b = derived_count(signature, n, 2), derived_count(signature, n, 3)
    return None if b > a else a


def ranked_dim(signature, top):
    for n in range(top + 1):
        size = derived_size(signature, n)
        if size is not None:
            return n, size
    return None


# -- growth rates by numeric sampling ----------------------------------------------

def _log_tower(m, n):
    v = mpmath.mpf(0)
    for _ in range(m):
        v = mpmath.exp(v) if v else mpmath.mpf(n)
    return v


def log_ratio(term, probe, n):
    """``log(x_n / (f_k(n) n^alpha))`` for ``term = (m, beta, gamma, c)``."""
    m, beta, gamma, c = term
    k, alpha = probe
    n = mpmath.mpf(n)
    with mpmath.workdps(50):
        # tower parts first, so the small terms survive next to e^(10^6)
        towers = _log_tower(m, n) - _log_tower(k, n)
        rest = mpmath.log(mpmath.mpf(c.numerator) / c.denominator) \
            + mpmath.mpf((beta - alpha).numerator) / (beta - alpha).denominator * mpmath.log(n) + gamma * mpmath.log(mpmath.log(n))
        return towers + rest


def growth_limit(term, probe, tol):
    """Limit of the ratio read from n = 10^3 and 10^6: ``"inf"``, ``"0"`` or a float."""
    r3, r6 = log_ratio(term, probe, 10**3), log_ratio(term, probe, 10**6)
    drift = r6 - r3
    if drift > tol:
        return "inf"
    if drift < -tol:
        return "0"
    return float(mpmath.exp(r6))


# -- measures of unions by elementary segments -------------------------------------

def union_length(intervals, lo, hi):
    cuts = sorted({Fraction(v) for a, b in intervals for v in (a, b)} | {Fraction(lo), Fraction(hi)})
    total = Fraction(0)
    for u, v in zip(cuts, cuts[1:]):
        if lo <= u and v <= hi and any(a <= u and v <= b for a, b in intervals):
            total += v - u
    return total


def union_area(rects, box):
    x0, x1, y0, y1 = box
    xs = sorted({Fraction(v) for r in rects for v in r[:2]} | {Fraction(x0), Fraction(x1)})
    ys = sorted({Fraction(v) for r in rects for v in r[2:]} | {Fraction(y0), Fraction(y1)})
    total = Fraction(0)
    for u0, u1 in zip(xs, xs[1:]):
        if not (x0 <= u0 and u1 <= x1):
            continue
        for v0, v1 in zip(ys, ys[1:]):
            if y0 <= v0 and v1 <= y1 and any(a <= u0 and u1 <= b and c <= v0 and v1 <= d for a, b, c, d in rects):
                total += (u1 - u0) * (v1 - v0)
    return total


# -- the tower ----------------------------------------------------------------------

def g(n, y):
    with mpmath.workdps(60):
        t = mpmath.mpf(y.numerator) / y.denominator
        t = t / (t + 1)
        for _ in range(n):
            t = mpmath.exp(t)
        return t
