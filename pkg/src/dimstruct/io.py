"""JSON structure files and map files.

A structure file holds ``poset`` (``elements`` and ``le`` pairs), ``points``
and a total ``mu`` table of value strings (``"0"``, ``"inf"``, ``"p/q"`` or
``"n"``), plus optional ``point_order`` pairs and ``kind``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .core import Candidate, DimensionStructure, PreDimensionStructure, check_axioms, check_pre_axioms
from .errors import CycleError, ParseError, TotalityError, UnknownName, ValidationError
from .extval import ExtVal, format_ext, parse_ext
from .morphisms import StructureMap
from .poset import build_poset

KINDS = ("structure", "pre")


@dataclass
class StructureFile:
    candidate: Candidate
    point_order: list | None = None
    kind: str = "structure"

    def validated(self):
        """The candidate as a (pre-)structure according to ``kind``."""
        c = self.candidate
        if self.kind == "pre":
            report = check_pre_axioms(c)
            if not report.pre_ok:
                raise ValidationError("not a pre-dimension structure", report)
            return PreDimensionStructure.from_candidate(c)
        report = check_axioms(c)
        if not report.ok:
            raise ValidationError("not a dimension structure", report)
        return DimensionStructure.from_candidate(c)


def _fail(path: str, reason: str):
    raise ParseError(f"{path}: {reason}")


def _str_list(v, path):
    if not isinstance(v, list) or not all(isinstance(e, str) for e in v):
        _fail(path, "expected a list of strings")
    if len(set(v)) != len(v):
        _fail(path, "duplicate names")
    return v


def _pairs(v, path, names, what):
    if not isinstance(v, list):
        _fail(path, "expected a list of pairs")
    out = []
    for i, p in enumerate(v):
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(e, str) for e in p)):
            _fail(f"{path}[{i}]", "expected a pair of strings")
        for e in p:
            if e not in names:
                raise UnknownName(f"{path}[{i}]: unknown {what} {e!r}")
        out.append(tuple(p))
    return out


def _value(v, path) -> ExtVal:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        _fail(path, "expected a value string")
    try:
        return parse_ext(str(v))
    except ValueError as exc:
        _fail(path, str(exc))


def parse_json(text: str, what: str = "document") -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        _fail(what, "expected a JSON object")
    return doc


def parse_structure_file(text: str) -> StructureFile:
    doc = parse_json(text, "structure")
    for key in ("poset", "points", "mu"):
        if key not in doc:
            _fail(key, "missing member")
    unknown = set(doc) - {"poset", "points", "mu", "point_order", "kind"}
    if unknown:
        _fail(sorted(unknown)[0], "unknown member")
    pos = doc["poset"]
    if not isinstance(pos, dict) or "elements" not in pos:
        _fail("poset", "expected an object with 'elements'")
    elements = _str_list(pos["elements"], "poset.elements")
    le = _pairs(pos.get("le", []), "poset.le", set(elements), "element")
    try:
        P = build_poset(elements, le)
    except CycleError as exc:
        _fail("poset.le", str(exc))
    points = _str_list(doc["points"], "points")
    mu = doc["mu"]
    if not isinstance(mu, dict):
        _fail("mu", "expected an object")
    for x in mu:
        if x not in points:
            raise UnknownName(f"mu: unknown point {x!r}")
    table = {}
    for x in points:
        if x not in mu:
            raise TotalityError(f"mu: no row for point {x!r}")
        row = mu[x]
        if not isinstance(row, dict):
            _fail(f"mu.{x}", "expected an object")
        for s in row:
            if s not in P:
                raise UnknownName(f"mu.{x}: unknown element {s!r}")
        for s in elements:
            if s not in row:
                raise TotalityError(f"mu.{x}: no value at {s!r}")
        table[x] = {s: _value(row[s], f"mu.{x}.{s}") for s in elements}
    order = None
    if "point_order" in doc:
        order = _pairs(doc["point_order"], "point_order", set(points), "point")
    kind = doc.get("kind", "structure")
    if kind not in KINDS:
        _fail("kind", f"expected one of {KINDS}")
    return StructureFile(Candidate(P, points, table), order, kind)


def format_value(v: ExtVal) -> str:
    return format_ext(v)


def structure_document(c: Candidate, point_order=None, kind: str | None = None) -> dict:
    P = c.poset
    doc = {
        "poset": {"elements": sorted(P.elements), "le": sorted([a, b] for a, b in P.covers())},
        "points": sorted(c.points),
        "mu": {x: {s: format_value(c.mu(x, s)) for s in P} for x in c.points},
    }
    if point_order is not None:
        doc["point_order"] = sorted([a, b] for a, b in point_order)
    if kind is not None and kind != "structure":
        doc["kind"] = kind
    return doc


_STRINGS = re.compile(r'\[\s+("(?:[^"\\]|\\.)*"(?:,\s+"(?:[^"\\]|\\.)*")*)\s+\]')


def dumps(doc) -> str:
    """Indented, key-sorted JSON with flat string lists kept on one line."""
    text = json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)
    return _STRINGS.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text) + "\n"


def emit_structure(c: Candidate, point_order=None, kind: str | None = None) -> str:
    """Canonical text: sorted names, covering pairs only, reduced fractions."""
    if isinstance(c, StructureFile):
        c, point_order, kind = c.candidate, c.point_order, c.kind
    return dumps(structure_document(c, point_order, kind))


def load_structure(text: str):
    return parse_structure_file(text).validated()


def parse_map_file(text: str) -> StructureMap:
    doc = parse_json(text, "map")
    for key in ("f", "g"):
        if key not in doc:
            _fail(key, "missing member")
    pairs = {}
    for key in ("f", "g"):
        v = doc[key]
        if not isinstance(v, list) or not all(
                isinstance(p, list) and len(p) == 2 and all(isinstance(e, str) for e in p) for p in v):
            _fail(key, "expected a list of pairs of strings")
        pairs[key] = [tuple(p) for p in v]
    try:
        return StructureMap.from_pairs(pairs["f"], pairs["g"])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def emit_map(m: StructureMap) -> str:
    return dumps({"f": sorted([a, b] for a, b in m.f.items()), "g": sorted([a, b] for a, b in m.g.items())})


def fixture_path(name: str):
    """Path of a shipped data file; ``.json`` is appended when missing."""
    from importlib.resources import files

    if not name.endswith(".json"):
        name += ".json"
    return files("dimstruct") / "data" / name


def jsonable(v):
    """Witnesses and reports in plain JSON types, deterministically ordered."""
    from fractions import Fraction

    from .poset import DimValue

    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, ExtVal):
        return format_value(v)
    if isinstance(v, (DimValue, Fraction)):
        return str(v)
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (set, frozenset)):
        return sorted(jsonable(x) for x in v)
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if hasattr(v, "to_dict"):
        return jsonable(v.to_dict())
    return str(v)
