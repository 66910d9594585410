import json

import pytest
from hypothesis import given

from apartness.structfile import (FIXTURES, ParseError, ShapeError, UnknownLabel, digest, load_fixture,
                                  parse, parse_text, serialize, structure_of, to_document)

from conftest import apartness_sets


@pytest.mark.parametrize("name", FIXTURES)
def test_fixtures_round_trip(name):
    sf = load_fixture(name)
    back = parse_text(serialize(sf))
    assert to_document(back) == to_document(sf)
    assert digest(back) == digest(sf)


def test_fixture_sizes():
    sizes = {name: load_fixture(name).carrier.n for name in FIXTURES}
    assert sizes == {"example1": 5, "example2": 3, "example3": 3, "example4": 5,
                     "example5": 3, "example6": 5}


def test_digest_ignores_equality_spelling():
    a = parse_text(json.dumps({"carrier": ["x", "y"], "equality": "diagonal"}))
    b = parse_text(json.dumps({"carrier": ["x", "y"], "equality": [["x", "x"], ["y", "y"]]}))
    assert digest(a) == digest(b)


def test_digest_sees_apartness():
    a = parse_text(json.dumps({"carrier": ["x", "y"]}))
    b = parse_text(json.dumps({"carrier": ["x", "y"], "apartness": [["x", "y"], ["y", "x"]]}))
    assert digest(a) != digest(b)


@pytest.mark.parametrize("doc, err, where", [
    ({"carrier": []}, ShapeError, "carrier"),
    ({"carrier": ["a"], "apartness": [["a", "z"]]}, UnknownLabel, "apartness[0][1]"),
    ({"carrier": ["a"], "apartness": [["a"]]}, ShapeError, "apartness[0]"),
    ({"carrier": ["a", "b"], "operation": [["a", "a"]]}, ShapeError, "operation"),
    ({"carrier": ["a"], "maps": {"f": {"graph": {}}}}, ShapeError, "maps.f.graph"),
])
def test_parse_errors_locate_the_field(doc, err, where):
    with pytest.raises(err) as e:
        parse_text(json.dumps(doc))
    assert e.value.where == where


def test_unknown_field_and_bad_json():
    with pytest.raises(ParseError):
        parse_text(json.dumps({"carrier": ["a"], "colour": 1}))
    with pytest.raises(ParseError):
        parse_text("{not json")


def test_external_codomain(tmp_path):
    (tmp_path / "cod.json").write_text(json.dumps({"carrier": ["p", "q"]}))
    (tmp_path / "dom.json").write_text(json.dumps(
        {"carrier": ["a"], "maps": {"f": {"codomain": "cod.json", "graph": {"a": "q"}}}}))
    sf = parse(tmp_path / "dom.json")
    f = sf.map("f")
    assert f.graph == (1,) and f.codomain.labels == ("p", "q")


def test_missing_file():
    with pytest.raises(ParseError):
        parse("/nonexistent/x.json")


@given(apartness_sets())
def test_structure_round_trip(A):
    sf = structure_of(A, {"ap": A.ap})
    back = parse_text(serialize(sf))
    assert back.apartness_set() == A and back.relation("ap") == A.ap
