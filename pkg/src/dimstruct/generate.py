"""Seeded random posets and structures for fuzzing, plus greedy shrinking."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .core import Candidate, DimensionStructure, check_axioms
from .errors import DimStructError
from .extval import INF, ZERO, ExtVal
from .poset import FinitePoset, build_poset, chain

__all__ = [
    "random_poset",
    "random_lattice",
    "bowtie_poset",
    "random_structure",
    "random_point_order",
    "generate_random",
    "shrink",
    "MODES",
]

MODES = ("valid_principal", "valid_general", "raw", "pre")


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_poset(seed, n: int, prefix: str = "s", chain_prob: float = 0.3) -> FinitePoset:
    """A random poset on ``n`` elements; a chain with probability ``chain_prob``."""
    rng = _rng(seed)
    names = [f"{prefix}{i}" for i in range(n)]
    if rng.random() < chain_prob:
        order = names[:]
        rng.shuffle(order)
        return chain(order)
    order = names[:]
    rng.shuffle(order)
    density = rng.random()
    pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return build_poset(names, pairs)


def bowtie_poset(seed, n: int, prefix: str = "s") -> FinitePoset:
    """Random poset on ``n >= 4`` elements containing ``a, b < p, q`` with
    ``a, b`` and ``p, q`` incomparable, so ``{p, q}`` has no infimum unless
    something sits between."""
    rng = _rng(seed)
    names = [f"{prefix}{i}" for i in range(n)]
    order = names[:]
    rng.shuffle(order)
    a, b, p, q = order[0], order[1], order[-2], order[-1]
    fixed = {frozenset((a, b)), frozenset((p, q))}
    density = rng.random() * 0.5
    pairs = [(a, p), (a, q), (b, p), (b, q)]
    for i in range(n):
        for j in range(i + 1, n):
            if frozenset((order[i], order[j])) not in fixed and rng.random() < density:
                pairs.append((order[i], order[j]))
    return build_poset(names, pairs)


def _subset_lattice(rng, prefix):
    k = rng.randint(1, 3)
    family = {frozenset(), frozenset(range(k))}
    for _ in range(rng.randint(0, 4)):
        family.add(frozenset(i for i in range(k) if rng.random() < 0.5))
    changed = True
    while changed:
        changed = False
        for a in list(family):
            for b in list(family):
                for c in (a | b, a & b):
                    if c not in family:
                        family.add(c)
                        changed = True
    members = sorted(family, key=lambda s: (len(s), sorted(s)))
    names = {m: f"{prefix}{i}" for i, m in enumerate(members)}
    pairs = [(names[a], names[b]) for a in members for b in members if a < b]
    return build_poset([names[m] for m in members], pairs)


def random_lattice(seed, max_n: int = 6, prefix: str = "s") -> FinitePoset:
    """A random finite lattice (hence complete) with at most ``max_n`` elements."""
    rng = _rng(seed)
    for _ in range(50):
        P = random_poset(rng, rng.randint(1, max_n), prefix)
        if P.is_complete():
            return P
    for _ in range(50):
        P = _subset_lattice(rng, prefix)
        if len(P) <= max_n:
            return P
    return chain([f"{prefix}{i}" for i in range(rng.randint(1, max_n))])


def _fin(rng) -> ExtVal:
    return ExtVal(Fraction(rng.randint(1, 6), rng.randint(1, 3)))


def _principal_row(rng, P: FinitePoset) -> dict:
    targets = list(P.elements) + ["top", "bottom"]
    t = rng.choice(targets)
    if t == "top":
        return {s: INF for s in P}
    if t == "bottom":
        return {s: ZERO for s in P}
    up = P.up(t)
    row = {s: (ZERO if s in up else INF) for s in P}
    r = rng.random()
    if r < 0.45:
        row[t] = _fin(rng)
    elif r < 0.7:
        row[t] = INF
    # repair: the zero set (now the strict up-set) needs an infimum in S-bar
    if not row[t].is_zero and P.inf(up - {t}) is None:
        row[t] = ZERO
    return row


def _general_row(rng, P: FinitePoset) -> dict:
    if rng.random() < 0.5:
        return _principal_row(rng, P)
    # zero set = up-closure of a random subset; an s-point forces a principal row
    seeds = [s for s in P if rng.random() < 0.35]
    zeros = set()
    for s in seeds:
        zeros |= P.up(s)
    if P.inf(zeros) is None:
        return _principal_row(rng, P)
    return {s: (ZERO if s in zeros else INF) for s in P}


def _pre_row(rng, P: FinitePoset) -> dict:
    # (ax1)/(ax2) by construction; the zero set need not have an infimum
    r = rng.random()
    if r < 0.35:
        return _principal_row(rng, P)
    zeros = set()
    pairs = [(s, t) for s in P for t in P if s < t and not P.comparable(s, t)]
    if r < 0.7 and pairs:
        s, t = rng.choice(pairs)
        zeros = set(P.up(s) | P.up(t))
    else:
        for s in P:
            if rng.random() < 0.4:
                zeros |= P.up(s)
    return {s: (ZERO if s in zeros else INF) for s in P}


def _raw_row(rng, P: FinitePoset) -> dict:
    return {s: rng.choice((ZERO, INF, _fin(rng))) for s in P}


def random_structure(seed, max_s: int = 6, max_x: int = 6, mode: str = "valid_principal",
                     poset: FinitePoset | None = None, point_prefix: str = "x",
                     element_prefix: str = "s"):
    """Random candidate; valid modes return a :class:`DimensionStructure`.

    ``raw`` gives an unconstrained table and ``pre`` a principal
    pre-dimension structure whose finite sets may lack infima.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    rng = _rng(seed)
    if poset is not None:
        P = poset
    elif mode == "pre" and max_s >= 4 and rng.random() < 0.6:
        P = bowtie_poset(rng, rng.randint(4, max_s), element_prefix)
    else:
        P = random_poset(rng, rng.randint(1, max_s), element_prefix)
    points = [f"{point_prefix}{i}" for i in range(rng.randint(1, max_x))]
    make = {"valid_principal": _principal_row, "valid_general": _general_row,
            "raw": _raw_row, "pre": _pre_row}[mode]
    mu = {x: make(rng, P) for x in points}
    if mode in ("raw", "pre"):
        return Candidate(P, points, mu)
    return DimensionStructure(P, points, mu)


def generate_random(seed, limits=(6, 6), mode: str = "valid_principal"):
    """Deterministic in ``seed``; ``limits = (max |S|, max |X|)``."""
    max_s, max_x = limits
    if max_s < 1 or max_x < 1:
        raise ValueError("limits must be at least 1")
    return random_structure(seed, max_s, max_x, mode)


def random_point_order(seed, points, chain_prob: float = 0.3) -> FinitePoset:
    rng = _rng(seed)
    names = list(points)
    order = names[:]
    rng.shuffle(order)
    if rng.random() < chain_prob:
        return build_poset(names, list(zip(order, order[1:])))
    density = rng.random() * 0.6
    pairs = [(order[i], order[j]) for i in range(len(order)) for j in range(i + 1, len(order))
             if rng.random() < density]
    return build_poset(names, pairs)


def shrink(candidate: Candidate, failing: Callable[[Candidate], bool]) -> Candidate:
    """Greedy deletion of points, then poset elements, while ``failing`` holds."""
    current = candidate
    progress = True
    while progress:
        progress = False
        for x in list(current.points):
            if len(current.points) == 1:
                break
            nxt = _restrict(current, [p for p in current.points if p != x], current.poset.elements)
            if nxt is not None and failing(nxt):
                current, progress = nxt, True
        for s in list(current.poset.elements):
            if len(current.poset) == 1:
                break
            nxt = _restrict(current, current.points, [e for e in current.poset.elements if e != s])
            if nxt is not None and failing(nxt):
                current, progress = nxt, True
    return current


def _restrict(c: Candidate, points, elements):
    P = c.poset.restrict(elements)
    table = {x: {s: c.mu(x, s) for s in P} for x in points}
    try:
        cand = Candidate(P, points, table)
        if isinstance(c, DimensionStructure):
            if not check_axioms(cand).ok:
                return None
            return DimensionStructure.from_candidate(cand)
        return cand
    except DimStructError:
        return None
