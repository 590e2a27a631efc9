"""Command-line interface.

Every command prints JSON on standard output.  Exit status 0 means success,
1 a mathematical violation (the witness is printed), 2 a usage or input
error (the message goes to standard error).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import gallery as gal
from .classify import as_point_order, check_synchronization, classify
from .constructions import (
    Partition,
    direct_product,
    i_direct_product,
    l_direct_product,
    measure_sum,
    normalization,
    quotient,
    structure_sum,
    substructure,
    sup_combine,
)
from .core import DimensionStructure, check_axioms, check_pre_axioms
from .errors import (
    CombinerLawError,
    DimStructError,
    LawViolation,
    MissingInfimum,
    NotDecreasing,
    ValidationError,
    VerificationError,
)
from .extension import embed_into, extend
from .io import (
    StructureFile,
    dumps,
    emit_structure,
    format_value,
    jsonable,
    parse_json,
    parse_map_file,
    parse_structure_file,
)
from .morphisms import dim_transport_check, verify_map
from .poset import BOTTOM, TOP, DimValue, build_poset
from .suite import run_suite

MATH_ERRORS = (ValidationError, LawViolation, VerificationError, MissingInfimum, CombinerLawError, NotDecreasing)
OPS = ("sub", "normalize", "quotient", "sum", "msum", "supc", "product", "iproduct", "lproduct")
_QUIET_KEYS = {"witness", "witnesses", "violations", "witness1", "witness1_weak", "witness2"}


class UsageError(Exception):
    pass


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _structure_file(path) -> StructureFile:
    return parse_structure_file(_read(path))


def _structure(path) -> DimensionStructure:
    return _structure_file(path).validated()


def _write(path, text):
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _strip(doc):
    if isinstance(doc, dict):
        return {k: _strip(v) for k, v in doc.items() if k not in _QUIET_KEYS}
    if isinstance(doc, list):
        return [_strip(v) for v in doc]
    return doc


class _Out:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def emit(self, doc):
        doc = jsonable(doc)
        if self.quiet:
            doc = _strip(doc)
        sys.stdout.write(dumps(doc))


def _dim_value(P, token: str) -> DimValue:
    if token == "-inf":
        return BOTTOM
    if token == "+inf":
        return TOP
    if token not in P:
        raise UsageError(f"unknown element {token!r}")
    return DimValue.of(token)


def _names(text: str) -> list:
    return [t for t in text.split(",") if t]


# -- commands ---------------------------------------------------------------------


def cmd_check(a, out):
    sf = _structure_file(a.file)
    if sf.kind == "pre":
        report = check_pre_axioms(sf.candidate)
        ok = report.pre_ok
    else:
        report = check_axioms(sf.candidate)
        ok = report.ok
    doc = report.to_dict()
    doc["ok"] = ok
    doc["kind"] = sf.kind
    out.emit(doc)
    return 0 if ok else 1


def cmd_classify(a, out):
    out.emit(classify(_structure(a.file)).to_dict())
    return 0


def cmd_dim(a, out):
    D = _structure(a.file)
    d = D.dim(a.point)
    out.emit({"point": a.point, "dim": str(d), "raw_dim": str(D.raw_dim(a.point)),
              "mu": format_value(D.mu_extended(a.point, d))})
    return 0


def cmd_mu(a, out):
    D = _structure(a.file)
    v = D.mu_extended(a.point, _dim_value(D.poset, a.at))
    out.emit({"point": a.point, "at": a.at, "value": format_value(v)})
    return 0


def cmd_order(a, out):
    pts = _names(a.points)
    if len(pts) != 2:
        raise UsageError("--points takes exactly two points")
    D = _structure(a.file)
    x, y = pts
    out.emit({"x": x, "y": y, "verdict": D.leq_D(x, y).value, "le": D.le_D(x, y)})
    return 0


def cmd_sync(a, out):
    sf = _structure_file(a.file)
    if sf.point_order is None:
        raise UsageError("the structure file has no point_order")
    D = sf.validated()
    alpha = a.alpha if a.alpha == "finite" else int(a.alpha)
    rep = check_synchronization(D, as_point_order(D, sf.point_order), alpha)
    out.emit(rep.to_dict())
    return 0 if rep.synchronized else 1


def _partition(path):
    doc = parse_json(_read(path), "partition")
    blocks = doc.get("blocks")
    if blocks is None:
        raise UsageError("partition file needs a 'blocks' member")
    return Partition(blocks)


def cmd_combine(a, out):
    files = a.files
    need = {"sub": 1, "normalize": 1, "quotient": 1, "product": 2, "lproduct": 2}
    if a.op in need and len(files) != need[a.op]:
        raise UsageError(f"--op {a.op} takes {need[a.op]} file(s)")
    if not files and a.op not in need:
        raise UsageError(f"--op {a.op} needs at least one file")
    Ds = [_structure(f) for f in files] if a.op != "sum" else None
    if a.op == "sub":
        if a.points is None or a.elements is None:
            raise UsageError("--op sub needs --points and --elements")
        R = substructure(Ds[0], _names(a.points), _names(a.elements))
    elif a.op == "normalize":
        R = normalization(Ds[0])
    elif a.op == "quotient":
        if a.partition is None:
            raise UsageError("--op quotient needs --partition")
        R = quotient(Ds[0], _partition(a.partition))
    elif a.op == "sum":
        if a.index is None:
            raise UsageError("--op sum needs --index")
        doc = parse_json(_read(a.index), "index")
        elements = doc.get("elements", [])
        index = build_poset(elements, [tuple(p) for p in doc.get("le", [])])
        if len(elements) != len(files):
            raise UsageError("--op sum needs one file per index element")
        R = structure_sum(index, {p: _structure(f) for p, f in zip(elements, files)})
    elif a.op == "msum":
        R = measure_sum(Ds, check_hypotheses=not a.no_hypotheses)
    elif a.op == "supc":
        R = sup_combine(Ds, check_hypotheses=not a.no_hypotheses)
    elif a.op == "product":
        R = direct_product(*Ds)
    elif a.op == "iproduct":
        R = i_direct_product(Ds)
    else:
        R = l_direct_product(*Ds)
    text = emit_structure(R)
    if a.output:
        _write(a.output, text)
        out.emit({"ok": True, "op": a.op, "output": a.output})
    else:
        sys.stdout.write(text)
    return 0


def _extension_report(res):
    return {"new_elements": {h: sorted(Sx) for h, Sx in sorted(res.new_elements.items())},
            "owner": dict(sorted(res.owner.items()))}


def cmd_extend(a, out):
    res = extend(_structure_file(a.file).candidate)
    _write(a.output, emit_structure(res.extended))
    rep = _extension_report(res)
    if a.report:
        _write(a.report, dumps(rep))
    out.emit(rep)
    return 0


def cmd_embed(a, out):
    pre = _structure_file(a.pre).candidate
    res = extend(pre)
    given = _structure_file(a.extended).candidate
    if not given.same_data(res.extended):
        raise UsageError("the extended file is not the extension of the pre-structure")
    rep = embed_into(pre, res, _structure(a.target))
    out.emit(rep.to_dict())
    return 0


def cmd_map_verify(a, out):
    D1, D2 = _structure(a.source), _structure(a.target)
    m = parse_map_file(_read(a.map))
    rep = verify_map(D1, D2, m, a.kind)
    doc = {"map": rep.to_dict()}
    if rep.ok:
        tr = dim_transport_check(D1, D2, m, a.kind)
        doc["transport"] = tr.to_dict()
        doc["ok"] = tr.ok
    else:
        doc["ok"] = False
    out.emit(doc)
    return 0 if doc["ok"] else 1


def cmd_suite(a, out):
    if a.count < 0:
        raise UsageError("--count must be nonnegative")
    rep = run_suite(a.seed, a.count, a.shrink)
    out.emit(rep)
    return 0 if rep["ok"] else 1


# -- gallery ---------------------------------------------------------------------


def _kv(text: str) -> dict:
    out = {}
    for part in _names(text):
        k, _, v = part.partition("=")
        out[k.strip()] = v.strip()
    return out


def _growth(text: str):
    kv = _kv(text)
    unknown = set(kv) - {"m", "beta", "gamma", "c"}
    if unknown:
        raise UsageError(f"unknown growth key {sorted(unknown)[0]!r}")
    return gal.GrowthSeq(int(kv.get("m", 0)), Fraction(kv.get("beta", 1)), int(kv.get("gamma", 0)),
                         Fraction(kv.get("c", 1)))


def _pairs_map(text: str) -> dict:
    out = {}
    for part in _names(text):
        k, _, v = part.partition(":")
        out[int(k)] = Fraction(v)
    return out


def _item(family: str, text: str):
    if family == "ranked":
        return gal.RankedSet({k: int(v) for k, v in _pairs_map(text).items()})
    if family == "growth":
        return _growth(text)
    if family == "evenodd":
        even, _, odd = text.partition("|")
        return gal.EvenOddSeq(_growth(even), _growth(odd))
    if family == "scale":
        x, _, y = text.partition("|")
        return (gal.ScaleVector(_pairs_map(x)), gal.ScaleVector(_pairs_map(y)))
    if family == "leb":
        return gal.IntervalSet([tuple(Fraction(v) for v in p.split(":")) for p in _names(text)])
    if family == "pleb":
        return gal.RectSet([tuple(Fraction(v) for v in p.split(":")) for p in _names(text)])
    return gal.TowerNumber(text)


def _probe(family: str, text: str):
    if family == "evenodd":
        return tuple(Fraction(v) for v in text.split(":"))
    if family == "pleb":
        return tuple(int(v) for v in text.split(":"))
    if family == "growth":
        if ":" in text:
            k, a = text.split(":")
            return (int(k), Fraction(a))
        return Fraction(text)
    return int(text)


def _window(family: str, text: str) -> list:
    if ".." in text and family not in ("evenodd", "pleb", "growth"):
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [_probe(family, p) for p in _names(text)]


def _analytic(family: str, item):
    kind, key, attained = gal.analytic_dim(family, item)
    doc = {"dim": kind if kind != "element" else jsonable(key if not isinstance(key, tuple) else list(key)),
           "attained": attained}
    return doc


def _measure(family, item, probe):
    if family == "ranked":
        return gal.ranked_mu(item, probe)
    if family == "growth":
        return gal.growth_measure(item, probe)
    if family == "evenodd":
        return gal.evenodd_measure(item, probe)
    if family == "scale":
        return gal.scale_rho(item[0], item[1], probe)
    if family == "leb":
        return gal.leb_mu(item, probe)
    if family == "pleb":
        return gal.pleb_mu(item, probe)
    return gal.tower_mu(item, probe)


def cmd_gallery(a, out):
    fam = a.family
    if fam == "iterate":
        return _gallery_iterate(a, out)
    if not a.item:
        raise UsageError("gallery needs at least one --item")
    try:
        items = [_item(fam, t) for t in a.item]
        probes = [_probe(fam, p) for p in a.probe]
        window = _window(fam, a.window) if a.window else None
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed gallery argument: {exc}") from None
    if window is not None:
        if a.cross:
            rep = gal.cross_validate(fam, window, items)
            out.emit(rep.to_dict())
            return 0 if rep.ok else 1
        text = emit_structure(gal.sample_finite(fam, window, items))
        if a.output:
            _write(a.output, text)
            out.emit({"ok": True, "output": a.output})
        else:
            sys.stdout.write(text)
        return 0
    rows = []
    for t, item in zip(a.item, items):
        row = {"item": t}
        row.update(_analytic(fam, item))
        if fam == "tower":
            dec = gal.tower_decompose(item)
            row["mu"] = format_value(dec.mu)
        row["probes"] = {p: format_value(_measure(fam, item, v)) for p, v in zip(a.probe, probes)}
        rows.append(row)
    out.emit({"family": fam, "items": rows})
    return 0


def _gallery_iterate(a, out):
    if a.size is None or a.divisor is None:
        raise UsageError("iterate needs --size and --divisor")
    n, k = a.size, a.divisor
    if n < 1 or k < 1:
        raise UsageError("--size and --divisor must be positive")
    D = gal.iterate_structure(range(n), [(i, i + 1) for i in range(n - 1)], lambda v: v // k)
    text = emit_structure(D)
    if a.output:
        _write(a.output, text)
        out.emit({"ok": True, "output": a.output})
    else:
        sys.stdout.write(text)
    return 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dimstruct", description="Dimension structures on finite posets.")
    p.add_argument("--quiet", action="store_true", help="omit witnesses from the output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="axiom report")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("classify", help="property classes")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("dim", help="dimension of a point")
    s.add_argument("file")
    s.add_argument("--point", required=True)
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("mu", help="value at an element (or -inf/+inf)")
    s.add_argument("file")
    s.add_argument("--point", required=True)
    s.add_argument("--at", required=True)
    s.set_defaults(func=cmd_mu)

    s = sub.add_parser("order", help="compare two points under the induced order")
    s.add_argument("file")
    s.add_argument("--points", required=True)
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("sync", help="synchronization under the file's point order")
    s.add_argument("file")
    s.add_argument("--alpha", default="finite")
    s.set_defaults(func=cmd_sync)

    s = sub.add_parser("combine", help="build a new structure")
    s.add_argument("--op", required=True, choices=OPS)
    s.add_argument("files", nargs="*")
    s.add_argument("-o", "--output")
    s.add_argument("--index", help="index poset file for --op sum")
    s.add_argument("--partition", help="partition file for --op quotient")
    s.add_argument("--points", help="kept points for --op sub")
    s.add_argument("--elements", help="kept elements for --op sub")
    s.add_argument("--no-hypotheses", action="store_true",
                   help="skip the completeness preconditions of msum and supc")
    s.set_defaults(func=cmd_combine)

    s = sub.add_parser("extend", help="adjoin missing infima to a pre-structure")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--report")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("embed", help="embed an extension into a target structure")
    s.add_argument("pre")
    s.add_argument("extended")
    s.add_argument("target")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("map-verify", help="verify a map between two structures")
    s.add_argument("--kind", default="morphism")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("map")
    s.set_defaults(func=cmd_map_verify)

    s = sub.add_parser("suite", help="seeded fuzz run of the proposition suite")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--shrink", action="store_true")
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("gallery", help="example families")
    s.add_argument("family", choices=gal.FAMILIES + ("iterate",))
    s.add_argument("--item", action="append", default=[])
    s.add_argument("--probe", action="append", default=[])
    s.add_argument("--window")
    s.add_argument("--cross", action="store_true", help="cross-validate against the window sample")
    s.add_argument("--size", type=int)
    s.add_argument("--divisor", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gallery)
    return p


def run_command(argv) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    out = _Out(a.quiet)
    try:
        return a.func(a, out)
    except MATH_ERRORS as exc:
        doc = {"ok": False, "error": type(exc).__name__, "message": str(exc)}
        detail = getattr(exc, "report", None) or getattr(exc, "witness", None)
        if detail is not None:
            doc["witness"] = detail
        out.emit(doc)
        return 1
    except (UsageError, DimStructError, ValueError, KeyError, json.JSONDecodeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"dimstruct: error: {type(exc).__name__}: {msg}\n")
        return 2


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
