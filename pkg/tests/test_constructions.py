import itertools
import random
from fractions import Fraction

import pytest

from dimstruct.constructions import (
    Partition, dim_partition, direct_product, i_direct_product, l_direct_product, measure_sum,
    normalization, quotient, structure_sum, substructure, sup_combine,
)
from dimstruct.classify import classify
from dimstruct.core import DimensionStructure, check_axioms
from dimstruct.errors import CombinerLawError, DisjointnessError, PreconditionError, ValidationError
from dimstruct.extval import ExtVal
from dimstruct.generate import random_lattice, random_structure
from dimstruct.poset import build_poset, chain, tuple_id

import oracles

NEED = 200


def _pair(seed, max_s=4, max_x=3, mode="valid_general"):
    rng = random.Random(seed)
    D1 = random_structure(rng, max_s, max_x, mode, element_prefix="s", point_prefix="x")
    D2 = random_structure(rng, max_s, max_x, mode, element_prefix="t", point_prefix="y")
    return D1, D2


def _product_le(factors_le, factors_els, lexi=False):
    els = [tuple_id(*t) for t in itertools.product(*factors_els)]
    le = set()
    for a in itertools.product(*factors_els):
        for b in itertools.product(*factors_els):
            if lexi:
                (a1, a2), (b1, b2) = a, b
                ok = ((a1, b1) in factors_le[0] and a1 != b1) or (a1 == b1 and (a2, b2) in factors_le[1])
            else:
                ok = all((u, v) in le_i for u, v, le_i in zip(a, b, factors_le))
            if ok:
                le.add((tuple_id(*a), tuple_id(*b)))
    return els, le


def _pairing(raws):
    if oracles.TOP in raws:
        return oracles.TOP
    if oracles.BOT in raws:
        return oracles.BOT
    return tuple_id(*raws)


def _check_product(out, factors, lexi=False):
    data = [oracles.structure_data(D) for D in factors]
    els, le = _product_le([d[1] for d in data], [d[0] for d in data], lexi)
    o_els, o_le, o_pts, o_mu = oracles.structure_data(out)
    assert set(o_els) == set(els) and o_le == le
    assert not oracles.violations(els, le, o_pts, o_mu)
    for coords in itertools.product(*[d[2] for d in data]):
        z = tuple_id(*coords)
        raws = [oracles.raw_dim(d[0], d[1], d[3][c]) for d, c in zip(data, coords)]
        yield z, raws, oracles.raw_dim(els, le, o_mu[z]), (els, le, o_pts, o_mu)


def test_direct_product_pairing():
    done = 0
    for seed in range(NEED):
        D1, D2 = _pair(seed)
        out = direct_product(D1, D2)
        for z, raws, got, _ in _check_product(out, [D1, D2]):
            assert got == _pairing(raws), (seed, z)
        done += 1
    assert done >= NEED


def test_direct_product_values_multiply():
    D1, D2 = _pair(3)
    out = direct_product(D1, D2)
    for x, y in itertools.product(D1.points, D2.points):
        for s, t in itertools.product(D1.poset, D2.poset):
            a, b = D1.mu(x, s), D2.mu(y, t)
            want = ExtVal(inf=True) if (a.is_inf or b.is_inf) else ExtVal(a.q * b.q)
            assert out.mu(tuple_id(x, y), tuple_id(s, t)) == want


def test_combiner_law_enforced():
    D1, D2 = _pair(1)
    with pytest.raises(CombinerLawError):
        direct_product(D1, D2, combiner=lambda a, b: ExtVal(1))
    out = direct_product(D1, D2, combiner=lambda a, b: ExtVal(0) if a.is_zero or b.is_zero else ExtVal(a.q + b.q))
    assert check_axioms(out).ok


def test_i_direct_product_pairing():
    done = 0
    for seed in range(NEED):
        rng = random.Random(seed)
        fam = [random_structure(rng, 3, 2, "valid_general", element_prefix=p, point_prefix=p.upper())
               for p in "abc"[: rng.randint(1, 3)]]
        out = i_direct_product(fam)
        for z, raws, got, _ in _check_product(out, fam):
            assert got == _pairing(raws), (seed, z)
        done += 1
    assert done >= NEED


def _small(seed):
    # first factor for the l-direct product: every point is a point of its own dimension
    rng = random.Random(seed)
    P = random_structure(rng, 4, 1).poset
    pts = [f"x{i}" for i in range(rng.randint(1, 3))]
    rows = {}
    for x in pts:
        d = rng.choice(P.elements)
        rows[x] = {s: ("0" if P.lt(d, s) else "inf") for s in P}
        rows[x][d] = str(Fraction(rng.randint(1, 5), rng.randint(1, 3)))
    return DimensionStructure(P, pts, rows)


def test_l_direct_product_pairing_and_principality():
    done = failed_ax3 = checked = 0
    seed = 0
    while done < NEED and seed < 5000:
        seed += 1
        try:
            D1 = _small(seed)
        except ValidationError:
            continue
        D2 = random_structure(seed, 4, 3, "valid_principal" if seed % 2 else "valid_general",
                              element_prefix="t", point_prefix="y")
        try:
            out = l_direct_product(D1, D2)
        except ValidationError:
            failed_ax3 += 1
            continue
        for z, raws, got, data in _check_product(out, [D1, D2], lexi=True):
            if raws[1] not in (oracles.BOT, oracles.TOP):
                assert got == tuple_id(*raws), (seed, z)
        r1 = classify(D1)
        if r1.principal and r1.p_small and classify(D2).principal:
            els, le, pts, mu = data
            keep = [tuple_id(x1, x2) for x1 in D1.points for x2 in D2.points
                    if oracles.raw_dim(*oracles.structure_data(D2)[:2], oracles.structure_data(D2)[3][x2])
                    not in (oracles.BOT, oracles.TOP)]
            assert oracles.principal(els, le, keep, mu), seed
            checked += 1
        done += 1
    assert done >= NEED and checked >= NEED // 2


def test_l_direct_principality_needs_element_dims(load):
    D1, D2 = load("lprincipal_first"), load("lprincipal_second")
    assert classify(D1).principal and classify(D1).p_small and classify(D2).principal
    out = l_direct_product(D1, D2)
    data = oracles.structure_data(out)
    assert oracles.dim(*data[:2], data[3]["(x0|y0)"]) == oracles.BOT
    assert not oracles.principal(*data)


def test_l_direct_counterexample(load):
    with pytest.raises(ValidationError) as err:
        l_direct_product(load("lproduct_first"), load("lproduct_second"))
    v = err.value.report.violations[0]
    assert (v.axiom, v.point) == ("ax3", "(x0|x1)")


def test_l_direct_requires_small_first_factor():
    D = DimensionStructure(chain(["0"]), ["x"], {"x": {"0": "0"}})
    with pytest.raises(PreconditionError):
        l_direct_product(D, D)


def _random_partition(rng, points):
    k = rng.randint(1, len(points))
    blocks = {}
    for x in points:
        blocks.setdefault(f"B{rng.randrange(k)}", []).append(x)
    return blocks


def test_quotient_domination():
    done = 0
    for seed in range(NEED * 2):
        rng = random.Random(seed)
        D = random_structure(rng, 5, 5, "valid_general", poset=random_lattice(rng, 5))
        blocks = _random_partition(rng, list(D.points))
        out = quotient(D, blocks)
        els, le, pts, mu = oracles.structure_data(D)
        _, ole, opts, omu = oracles.structure_data(out)
        assert not oracles.violations(els, ole, opts, omu)
        for k, members in blocks.items():
            for s in els:
                vals = [mu[x][s] for x in members]
                want = "inf" if any(oracles.is_inf(v) for v in vals) else str(ExtVal(max(oracles.val(v) for v in vals)))
                assert omu[k][s] == want
            lo = oracles.sup(els, le, [oracles.dim(els, le, mu[x]) for x in members])
            assert oracles.sbar_le(le, lo, oracles.dim(els, le, omu[k])), (seed, k)
        done += 1
    assert done >= NEED


def test_quotient_counterexample(load):
    with pytest.raises(ValidationError):
        quotient(load("quotient_counterexample"), {"B": ["x0", "x1"]})


def test_partition_errors():
    with pytest.raises(DisjointnessError):
        Partition({"a": ["x"], "b": ["x"]})
    with pytest.raises(ValueError):
        Partition({"a": []})


def test_dim_partition_blocks_share_dim_and_value():
    for seed in range(50):
        D = random_structure(seed, 5, 6)
        for _, members in dim_partition(D).blocks:
            assert len({(D.dim(x), D.mu_D(x).value) for x in members}) == 1


def _successor(els, le, s):
    above = [t for t in els if (s, t) in le and t != s]
    least = [t for t in above if all((t, u) in le for u in above)]
    return least[0] if least else None


def test_measure_sum_laws():
    done = chains = 0
    for seed in range(NEED * 2):
        rng = random.Random(seed)
        P = random_lattice(rng, 5)
        n = rng.randint(2, 3)
        base = random_structure(rng, 5, 4, poset=P)
        fam = [base] + [random_structure(rng, 5, 4, "valid_principal", poset=P) for _ in range(n - 1)]
        pts = base.points
        fam = [DimensionStructure(P, pts, {x: F.row(F.points[i % len(F.points)]) for i, x in enumerate(pts)})
               for F in fam]
        out = measure_sum(fam)
        els, le, _, omu = oracles.structure_data(out)
        assert not oracles.violations(els, le, pts, omu)
        for x in pts:
            dims = [oracles.dim(els, le, oracles.structure_data(F)[3][x]) for F in fam]
            lo = oracles.sup(els, le, dims)
            d = oracles.dim(els, le, omu[x])
            assert oracles.sbar_le(le, lo, d)
            if P.is_chain() and lo != d:
                assert d == _successor(els, le, lo), (seed, x)
        chains += P.is_chain()
        done += 1
    assert done >= NEED and chains > 20


def test_measure_sum_incomplete_counterexample(load):
    A, B = load("msum_first"), load("msum_second")
    with pytest.raises(PreconditionError):
        measure_sum([A, B])
    with pytest.raises(ValidationError):
        measure_sum([A, B], check_hypotheses=False)


def test_sup_combine_valid_on_lattices():
    for seed in range(100):
        rng = random.Random(seed)
        P = random_lattice(rng, 5)
        A = random_structure(rng, 5, 3, poset=P)
        B = DimensionStructure(P, A.points, {x: random_structure(rng, 5, 1, poset=P).row("x0") for x in A.points})
        out = sup_combine([A, B])
        for x in A.points:
            for s in P:
                assert out.mu(x, s) == max(A.mu(x, s), B.mu(x, s))


def test_sum_relocation_and_validity():
    done = 0
    for seed in range(NEED * 3):
        rng = random.Random(seed)
        idx = chain([f"p{i}" for i in range(rng.randint(1, 3))])
        fam = {p: random_structure(rng, 3, 2, element_prefix=f"{p}s", point_prefix=f"{p}x",
                                   poset=chain([f"{p}s{i}" for i in range(rng.randint(1, 3))]))
               for p in idx}
        out = structure_sum(idx, fam)
        els, le, pts, mu = oracles.structure_data(out)
        assert not oracles.violations(els, le, pts, mu)
        for p in idx:
            for x in fam[p].points:
                inner = oracles.raw_dim(*oracles.structure_data(fam[p])[:2], oracles.structure_data(fam[p])[3][x])
                got = oracles.dim(els, le, mu[x])
                if inner not in (oracles.BOT, oracles.TOP):
                    assert got == inner
        done += 1
    assert done >= NEED


def test_sum_counterexample(load):
    idx = build_poset(["p", "q"], [("p", "q")])
    with pytest.raises(ValidationError):
        structure_sum(idx, {"p": load("sum_block_p"), "q": load("sum_block_q")})


def test_substructure_and_normalization():
    for seed in range(200):
        rng = random.Random(seed)
        D = random_structure(rng, 5, 4, "valid_principal", poset=chain([f"s{i}" for i in range(rng.randint(1, 5))]))
        keep = [s for s in D.poset if rng.random() < 0.7] or [D.poset.elements[0]]
        sub = substructure(D, D.points, keep)
        assert check_axioms(sub).ok
        N = normalization(D)
        assert all(N.is_dim_point(x) for x in N.points)
        if N.points:
            assert classify(N).fully_normal


def test_substructure_can_raise_dimension():
    D = DimensionStructure(chain(["1", "2", "3", "4"]), ["x"], {"x": {"1": "inf", "2": "inf", "3": "1", "4": "0"}})
    assert str(D.dim("x")) == "3"
    assert str(substructure(D, ["x"], ["1", "2", "4"]).dim("x")) == "4"
