import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dimstruct.errors import ParseError, TotalityError, UnknownName
from dimstruct.extval import ExtVal
from dimstruct.generate import random_structure
from dimstruct.io import (
    dumps, emit_map, emit_structure, fixture_path, format_value, parse_map_file, parse_structure_file,
)
from dimstruct.morphisms import StructureMap

from importlib.resources import files

FIXTURES = sorted(p.name[:-5] for p in (files("dimstruct") / "data").iterdir()
                  if p.name.endswith(".json") and not p.name.endswith(".expected.json")
                  and "blocks" not in json.loads(p.read_text()) and "le" not in json.loads(p.read_text()))

DOC = {"poset": {"elements": ["a", "b"], "le": [["a", "b"]]}, "points": ["x"], "mu": {"x": {"a": "3/6", "b": "0"}}}


def test_every_structure_fixture_is_listed():
    assert {"sync_example", "ax3_failure", "nonprincipal", "extension_failure", "lprincipal_first"} <= set(FIXTURES)


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_round_trip(name):
    text = fixture_path(name).read_text()
    assert emit_structure(parse_structure_file(text)) == text


@pytest.mark.parametrize("seed", range(100))
def test_emit_parse_round_trip(seed):
    D = random_structure(seed, 6, 4, random.Random(seed).choice(["valid_general", "raw", "pre"]))
    text = emit_structure(D)
    back = parse_structure_file(text).candidate
    assert emit_structure(back) == text
    assert {x: back.row(x) for x in back.points} == {x: D.row(x) for x in D.points}


def test_values_are_reduced():
    sf = parse_structure_file(json.dumps(DOC))
    doc = json.loads(emit_structure(sf))
    assert doc["mu"]["x"] == {"a": "1/2", "b": "0"}
    assert format_value(ExtVal(4)) == "4/1"
    assert format_value(ExtVal(inf=True)) == "inf"


@given(st.integers(1, 50), st.integers(1, 50))
def test_fraction_text(p, q):
    v = ExtVal(Fraction(p, q))
    text = format_value(v)
    assert ExtVal(Fraction(text)) == v and Fraction(text).denominator == int(text.split("/")[1])


def test_integer_shorthand_on_input():
    doc = json.loads(json.dumps(DOC))
    doc["mu"]["x"]["a"] = "7"
    assert parse_structure_file(json.dumps(doc)).candidate.mu("x", "a") == ExtVal(7)


def _mut(f):
    doc = json.loads(json.dumps(DOC))
    f(doc)
    return json.dumps(doc)


def test_missing_value_is_totality_error():
    with pytest.raises(TotalityError):
        parse_structure_file(_mut(lambda d: d["mu"]["x"].pop("b")))
    with pytest.raises(TotalityError):
        parse_structure_file(_mut(lambda d: d["points"].append("y")))


def test_unknown_names():
    with pytest.raises(UnknownName):
        parse_structure_file(_mut(lambda d: d["mu"]["x"].update(c="0")))
    with pytest.raises(UnknownName):
        parse_structure_file(_mut(lambda d: d["poset"]["le"].append(["a", "z"])))
    with pytest.raises(UnknownName):
        parse_structure_file(_mut(lambda d: d["mu"].update(y={"a": "0", "b": "0"})))


@pytest.mark.parametrize("mutate, where", [
    (lambda d: d["mu"]["x"].update(a="-1"), "mu.x.a"),
    (lambda d: d["mu"]["x"].update(a="abc"), "mu.x.a"),
    (lambda d: d.update(extra=1), "extra"),
    (lambda d: d.update(kind="other"), "kind"),
    (lambda d: d["poset"]["le"].append(["b", "a"]), "poset.le"),
    (lambda d: d.pop("points"), "points"),
    (lambda d: d["poset"].update(elements=["a", "a"]), "poset.elements"),
])
def test_parse_errors_name_their_location(mutate, where):
    with pytest.raises(ParseError) as err:
        parse_structure_file(_mut(mutate))
    assert str(err.value).startswith(where)


def test_json_syntax_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_structure_file('{\n  "poset": [,\n}')
    assert "line 2 column" in str(err.value)


def test_map_file_round_trip():
    m = StructureMap({"x": "y"}, {"a": "b", "b": "b"})
    text = emit_map(m)
    back = parse_map_file(text)
    assert (dict(back.f), dict(back.g)) == (dict(m.f), dict(m.g))
    assert emit_map(back) == text
    with pytest.raises(ParseError):
        parse_map_file('{"f": [["x", "y"], ["x", "z"]], "g": []}')
    with pytest.raises(ParseError):
        parse_map_file('{"f": []}')


def test_dumps_keeps_flat_lists_inline():
    text = dumps({"b": ["x", "y"], "a": [["p", "q"]]})
    assert '"b": ["x", "y"]' in text and '["p", "q"]' in text
    assert text.index('"a"') < text.index('"b"')
