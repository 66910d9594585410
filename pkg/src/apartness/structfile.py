"""JSON structure files: parsing, serialisation and content digests.

A structure file is one JSON object::

    {"carrier": ["a", "b"],
     "equality": "diagonal" | [["a", "a"], ...],
     "apartness": [["a", "b"], ...],
     "relations": {"name": [[x, y], ...]},
     "subsets": {"name": [x, ...]},
     "operation": [["a", "b"], ["b", "a"]],
     "maps": {"name": {"codomain": "self" | "other.json", "graph": {"a": "b"}}}}

Only ``carrier`` is required. Axioms are not checked while parsing; call
:meth:`StructureFile.apartness_set` or :meth:`StructureFile.semigroup`.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np

from .carrier import ApartnessError, ApartnessSet, Carrier, Rel, SetoidMap, Subset

FIELDS = ("carrier", "equality", "apartness", "relations", "subsets", "operation", "maps")
FIXTURES = tuple(f"example{i}" for i in range(1, 7))


class ParseError(ApartnessError):
    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class UnknownLabel(ParseError):
    pass


class ShapeError(ParseError):
    pass


@dataclass(frozen=True)
class MapSpec:
    codomain: "StructureFile | None"      # None means the file itself
    graph: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class StructureFile:
    carrier: Carrier
    eq: Rel
    ap: Rel
    relations: dict[str, Rel] = field(default_factory=dict)
    subsets: dict[str, tuple[int, ...]] = field(default_factory=dict)
    operation: np.ndarray | None = None
    maps: dict[str, MapSpec] = field(default_factory=dict)
    source: str | None = None

    def apartness_set(self) -> ApartnessSet:
        return ApartnessSet(self.carrier, self.eq, self.ap)

    def semigroup(self):
        from .semigroup import ApartnessSemigroup
        if self.operation is None:
            raise ParseError("no operation table", "operation")
        return ApartnessSemigroup(self.apartness_set(), self.operation)

    def relation(self, name: str) -> Rel:
        try:
            return self.relations[name]
        except KeyError:
            raise ParseError(f"no relation named {name!r}", "relations") from None

    def subset(self, name: str) -> Subset:
        if name not in self.subsets:
            raise ParseError(f"no subset named {name!r}", "subsets")
        return Subset(self.apartness_set(), np.isin(np.arange(self.carrier.n), self.subsets[name]))

    def map(self, name: str) -> SetoidMap:
        if name not in self.maps:
            raise ParseError(f"no map named {name!r}", "maps")
        spec = self.maps[name]
        cod = self if spec.codomain is None else spec.codomain
        return SetoidMap(self.apartness_set(), cod.apartness_set(), spec.graph)

    def codomain(self, name: str) -> "StructureFile":
        spec = self.maps[name]
        return self if spec.codomain is None else spec.codomain


def _labels(carrier: Carrier, items, where: str) -> list[int]:
    out = []
    for k, x in enumerate(items):
        if not isinstance(x, str) or x not in carrier.labels:
            raise UnknownLabel(f"unknown label {x!r}", f"{where}[{k}]")
        out.append(carrier.index(x))
    return out


def _pairs(carrier: Carrier, pairs, where: str) -> Rel:
    if not isinstance(pairs, list):
        raise ShapeError("expected a list of pairs", where)
    idx = []
    for k, p in enumerate(pairs):
        if not isinstance(p, list) or len(p) != 2:
            raise ShapeError(f"expected a pair, got {p!r}", f"{where}[{k}]")
        idx.append(tuple(_labels(carrier, p, f"{where}[{k}]")))
    return Rel.from_index_pairs(carrier, idx)


def from_document(doc: Any, base_dir: Path | None = None, source: str | None = None) -> StructureFile:
    if not isinstance(doc, dict):
        raise ShapeError("top level must be an object")
    extra = sorted(set(doc) - set(FIELDS))
    if extra:
        raise ParseError(f"unknown fields {extra}")
    labels = doc.get("carrier")
    if not isinstance(labels, list) or not labels or not all(isinstance(x, str) for x in labels):
        raise ShapeError("carrier must be a non-empty list of strings", "carrier")
    try:
        c = Carrier(tuple(labels))
    except ApartnessError as e:
        raise ParseError(str(e), "carrier") from None
    eq_doc = doc.get("equality", "diagonal")
    eq = Rel.diagonal(c) if eq_doc == "diagonal" else _pairs(c, eq_doc, "equality")
    ap = _pairs(c, doc.get("apartness", []), "apartness")
    rels = {name: _pairs(c, p, f"relations.{name}") for name, p in doc.get("relations", {}).items()}
    subs = {name: tuple(sorted(_labels(c, m, f"subsets.{name}"))) for name, m in doc.get("subsets", {}).items()}
    op = None
    if "operation" in doc:
        rows = doc["operation"]
        if not isinstance(rows, list) or len(rows) != c.n or any(not isinstance(r, list) or len(r) != c.n for r in rows):
            raise ShapeError(f"operation must be a {c.n}x{c.n} table", "operation")
        op = np.array([_labels(c, r, f"operation[{i}]") for i, r in enumerate(rows)], dtype=np.intp)
        op.setflags(write=False)
    maps = {}
    for name, m in doc.get("maps", {}).items():
        where = f"maps.{name}"
        if not isinstance(m, dict) or "graph" not in m:
            raise ShapeError("a map needs a graph", where)
        cod_ref = m.get("codomain", "self")
        if cod_ref == "self":
            cod, cod_carrier = None, c
        else:
            path = (base_dir or Path.cwd()) / cod_ref
            cod = parse(path)
            cod_carrier = cod.carrier
        g = m["graph"]
        if not isinstance(g, dict):
            raise ShapeError("graph must map labels to labels", where + ".graph")
        missing = [x for x in c.labels if x not in g]
        if missing:
            raise ShapeError(f"graph misses {missing}", where + ".graph")
        _labels(c, list(g), where + ".graph")
        graph = tuple(_labels(cod_carrier, [g[x] for x in c.labels], where + ".graph"))
        maps[name] = MapSpec(cod, graph)
    return StructureFile(c, eq, ap, rels, subs, op, maps, source)


def parse(path) -> StructureFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ParseError(str(e), str(path)) from None
    return parse_text(text, base_dir=path.parent, source=str(path))


def parse_text(text: str, base_dir: Path | None = None, source: str | None = None) -> StructureFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}") from None
    return from_document(doc, base_dir, source)


def load_fixture(name: str) -> StructureFile:
    if name not in FIXTURES:
        raise ParseError(f"unknown fixture {name!r}; choose from {list(FIXTURES)}")
    res = resources.files("apartness.fixtures").joinpath(f"{name}.json")
    return parse_text(res.read_text(), source=name)


def _pair_list(carrier: Carrier, rel: Rel) -> list[list[str]]:
    return [list(p) for p in rel.pairs()]


def to_document(sf: StructureFile) -> dict:
    c = sf.carrier
    doc: dict[str, Any] = {"carrier": list(c.labels)}
    doc["equality"] = "diagonal" if sf.eq == Rel.diagonal(c) else _pair_list(c, sf.eq)
    doc["apartness"] = _pair_list(c, sf.ap)
    if sf.relations:
        doc["relations"] = {k: _pair_list(c, r) for k, r in sorted(sf.relations.items())}
    if sf.subsets:
        doc["subsets"] = {k: list(c.names(v)) for k, v in sorted(sf.subsets.items())}
    if sf.operation is not None:
        doc["operation"] = [list(c.names(row)) for row in sf.operation]
    if sf.maps:
        out = {}
        for k, m in sorted(sf.maps.items()):
            cod = c if m.codomain is None else m.codomain.carrier
            cod_doc = "self" if m.codomain is None else (m.codomain.source or "codomain.json")
            out[k] = {"codomain": cod_doc, "graph": {c.labels[i]: cod.labels[j] for i, j in enumerate(m.graph)}}
        doc["maps"] = out
    return doc


def serialize(sf: StructureFile) -> str:
    return json.dumps(to_document(sf), indent=2) + "\n"


def structure_of(A: ApartnessSet, relations: dict[str, Rel] | None = None, operation=None) -> StructureFile:
    op = None if operation is None else np.asarray(operation, dtype=np.intp)
    return StructureFile(A.carrier, A.eq, A.ap, dict(relations or {}), {}, op)


def digest(sf: StructureFile) -> str:
    """SHA-256 over a canonical form (explicit equality, sorted keys)."""
    doc = to_document(sf)
    doc["equality"] = _pair_list(sf.carrier, sf.eq)
    doc.pop("maps", None)
    if sf.maps:
        doc["maps"] = {k: list(m.graph) for k, m in sorted(sf.maps.items())}
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()
