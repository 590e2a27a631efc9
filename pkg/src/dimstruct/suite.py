"""Seeded fuzz campaign over generated structures and the proposition suite."""

from __future__ import annotations

import random

from .core import check_axioms
from .generate import random_point_order, random_structure, shrink
from .io import emit_structure, jsonable
from .propositions import PropResult, proposition_suite


def instance_seeds(seed: int, count: int) -> list:
    rng = random.Random(seed)
    return [rng.getrandbits(32) for _ in range(count)]


def _instance(s: int):
    rng = random.Random(s)
    mode = "valid_principal" if rng.random() < 0.5 else "valid_general"
    D = random_structure(rng, 6, 6, mode)
    order = random_point_order(rng, D.points) if rng.random() < 0.5 else None
    return D, order, mode


def run_suite(seed: int, count: int, do_shrink: bool = False) -> dict:
    """Summary dict; identical for identical ``(seed, count, do_shrink)``."""
    props = {}
    failures = []
    chains = 0
    for i, s in enumerate(instance_seeds(seed, count)):
        D, order, mode = _instance(s)
        chains += D.poset.is_chain()
        report = check_axioms(D)
        if report.ok:
            results = proposition_suite(D, order)
        else:
            results = [PropResult("axioms", False, report.to_dict())]
        for r in results:
            tally = props.setdefault(r.prop, {"passed": 0, "failed": 0})
            tally["passed" if r.passed else "failed"] += 1
            if r.passed:
                continue
            entry = {"index": i, "seed": s, "mode": mode, "prop": r.prop, "witness": jsonable(r.witness)}
            if do_shrink and r.prop != "axioms":
                small = shrink(D, lambda c, p=r.prop: _still_fails(c, order, p))
                entry["shrunk"] = emit_structure(small)
            failures.append(entry)
    return {
        "seed": seed,
        "count": count,
        "chains": chains,
        "props": dict(sorted(props.items())),
        "failures": failures,
        "ok": not failures,
    }


def _still_fails(c, order, prop) -> bool:
    sub = order.restrict(c.points) if order is not None else None
    return any(r.prop == prop and not r.passed for r in proposition_suite(c, sub))
