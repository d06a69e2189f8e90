"""Bit-exact position file formats: parsers, serializers, move renderings.

Version-1 JSON schemas, one per ruleset, plus the compact grid literal
("PGGG/GPPG/...") for Transverse Wave.  Serialization is canonical: sorted
object keys, natural array order, no insignificant whitespace, so equal
positions serialize to equal bytes.  Variable indices are 1-based to match
the x1..xn convention; every other index is 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .rulesets import (
    CnfPosition,
    CrosswiseAnd,
    CrosswiseOr,
    FriendCirclePosition,
    Grid,
    HypergraphNimPosition,
    InfluenceNetwork,
    NimPosition,
    Superposition,
    UndirectedGraph,
    edge,
)

FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        super().__init__(message)
        self.row = row
        self.col = col


class ValidationError(ValueError):
    pass


@dataclass(frozen=True)
class PositionDocument:
    ruleset: str
    payload: Any
    version: int = FORMAT_VERSION


RULESET_IDS = (
    "transverse_wave",
    "crosswise_and",
    "crosswise_or",
    "nim",
    "demi_quantum_nim",
    "avoid_true",
    "node_kayles",
    "friend_circle",
    "demographic_influence",
    "hypergraph_nim",
)

_TYPE_TO_RULESET = {
    Grid: "transverse_wave",
    CrosswiseAnd: "crosswise_and",
    CrosswiseOr: "crosswise_or",
    NimPosition: "nim",
    Superposition: "demi_quantum_nim",
    CnfPosition: "avoid_true",
    UndirectedGraph: "node_kayles",
    FriendCirclePosition: "friend_circle",
    InfluenceNetwork: "demographic_influence",
    HypergraphNimPosition: "hypergraph_nim",
}


def ruleset_of(position) -> str:
    try:
        return _TYPE_TO_RULESET[type(position)]
    except KeyError:
        raise ValidationError(
            f"no ruleset document for {type(position).__name__}"
        ) from None


# ---------------------------------------------------------------------------
# field helpers

def _need(obj: dict, field: str, kind, where: str):
    if field not in obj:
        raise ValidationError(f"{where}: missing field {field!r}")
    value = obj[field]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise ValidationError(
            f"{where}: field {field!r} must be {kind.__name__}, got {value!r}"
        )
    return value


def _int_list(values, where: str) -> list[int]:
    if not isinstance(values, list):
        raise ValidationError(f"{where} must be an array, got {values!r}")
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(f"{where} must hold integers, got {v!r}")
    return values


def _parse_grid_rows(rows, where: str, cls):
    if not isinstance(rows, list) or not all(isinstance(r, str) for r in rows):
        raise ValidationError(f"{where}: rows must be an array of strings")
    try:
        return cls.from_rows(rows)
    except ValueError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def _parse_vertices(value, where: str) -> frozenset[int]:
    if isinstance(value, bool):
        raise ValidationError(f"{where}: vertices must be a count or id array")
    if isinstance(value, int):
        if value < 0:
            raise ValidationError(f"{where}: vertex count must be non-negative")
        return frozenset(range(value))
    ids = _int_list(value, f"{where}: vertices")
    return frozenset(ids)


def _parse_graph(obj: dict, where: str) -> UndirectedGraph:
    vertices = _parse_vertices(_need(obj, "vertices", (int, list), where), where)
    raw_edges = obj.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ValidationError(f"{where}: edges must be an array")
    edges = set()
    for item in raw_edges:
        pair = _int_list(item, f"{where}: edge")
        if len(pair) != 2:
            raise ValidationError(f"{where}: edge {item!r} must be a pair")
        try:
            edges.add(edge(*pair))
        except ValueError as exc:
            raise ValidationError(f"{where}: {exc}") from None
    try:
        return UndirectedGraph(vertices, frozenset(edges))
    except ValueError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def _vertices_json(vertices: frozenset[int]):
    ids = sorted(vertices)
    if ids == list(range(len(ids))):
        return len(ids)
    return ids


def _graph_json(g: UndirectedGraph) -> dict:
    return {
        "vertices": _vertices_json(g.vertices),
        "edges": [list(e) for e in sorted(g.edges)],
    }


# ---------------------------------------------------------------------------
# per-ruleset payload codecs

def _parse_payload(ruleset: str, obj: dict):
    where = ruleset
    if ruleset == "transverse_wave":
        return _parse_grid_rows(_need(obj, "rows", list, where), where, Grid)
    if ruleset == "crosswise_and":
        return _parse_grid_rows(_need(obj, "rows", list, where), where, CrosswiseAnd)
    if ruleset == "crosswise_or":
        return _parse_grid_rows(_need(obj, "rows", list, where), where, CrosswiseOr)
    if ruleset == "nim":
        heaps = _int_list(_need(obj, "heaps", list, where), f"{where}: heaps")
        try:
            return NimPosition(tuple(heaps))
        except ValueError as exc:
            raise ValidationError(f"{where}: {exc}") from None
    if ruleset == "demi_quantum_nim":
        raw = _need(obj, "realizations", list, where)
        rows = [tuple(_int_list(r, f"{where}: realization")) for r in raw]
        try:
            return Superposition(tuple(rows))
        except ValueError as exc:
            raise ValidationError(f"{where}: {exc}") from None
    if ruleset == "avoid_true":
        var_count = _need(obj, "vars", int, where)
        raw_clauses = _need(obj, "clauses", list, where)
        clauses = tuple(
            frozenset(_int_list(c, f"{where}: clause")) for c in raw_clauses
        )
        true_set = frozenset(
            _int_list(_need(obj, "true_set", list, where), f"{where}: true_set")
        )
        try:
            return CnfPosition(var_count, clauses, true_set)
        except ValueError as exc:
            raise ValidationError(f"{where}: {exc}") from None
    if ruleset == "node_kayles":
        return _parse_graph(obj, where)
    if ruleset == "friend_circle":
        graph = _parse_graph(obj, where)
        seeds = frozenset(
            _int_list(_need(obj, "seeds", list, where), f"{where}: seeds")
        )
        raw_weights = _need(obj, "weights", list, where)
        true_edges = set()
        seen = set()
        for item in raw_weights:
            if (
                not isinstance(item, list) or len(item) != 3
                or not all(isinstance(x, int) for x in item[:2])
                or item[2] not in ("t", "f")
            ):
                raise ValidationError(
                    f"{where}: weight {item!r} must be [u, v, \"t\"|\"f\"]"
                )
            e = edge(item[0], item[1])
            if e not in graph.edges:
                raise ValidationError(f"{where}: weight on missing edge {e}")
            if e in seen:
                raise ValidationError(f"{where}: duplicate weight for edge {e}")
            seen.add(e)
            if item[2] == "t":
                true_edges.add(e)
        if seen != set(graph.edges):
            raise ValidationError(f"{where}: weights must cover every edge")
        try:
            return FriendCirclePosition(graph, seeds, frozenset(true_edges))
        except ValueError as exc:
            raise ValidationError(f"{where}: {exc}") from None
    if ruleset == "demographic_influence":
        graph = _parse_graph(_need(obj, "graph", dict, where), f"{where}: graph")
        theta = tuple(_int_list(_need(obj, "theta", list, where), f"{where}: theta"))
        raw_demo = _need(obj, "demographics", list, where)
        demographics = tuple(
            frozenset(_int_list(d, f"{where}: demographic")) for d in raw_demo
        )
        try:
            return InfluenceNetwork(graph, theta, demographics)
        except ValueError as exc:
            raise ValidationError(f"{where}: {exc}") from None
    if ruleset == "hypergraph_nim":
        vertex_count = _need(obj, "vertices", int, where)
        raw_edges = _need(obj, "hyperedges", list, where)
        hyperedges = tuple(
            frozenset(_int_list(e, f"{where}: hyperedge")) for e in raw_edges
        )
        pebbles = tuple(
            _int_list(_need(obj, "pebbles", list, where), f"{where}: pebbles")
        )
        current = _need(obj, "current", int, where)
        try:
            return HypergraphNimPosition(vertex_count, hyperedges, pebbles, current)
        except ValueError as exc:
            raise ValidationError(f"{where}: {exc}") from None
    raise ValidationError(f"unsupported ruleset {ruleset!r}")


def _payload_json(position) -> dict:
    if isinstance(position, Grid):
        return {"rows": list(position.row_strings())}
    if isinstance(position, (CrosswiseAnd, CrosswiseOr)):
        return {"rows": list(position.row_strings())}
    if isinstance(position, NimPosition):
        return {"heaps": list(position.heaps)}
    if isinstance(position, Superposition):
        return {"realizations": [list(r) for r in position.realizations]}
    if isinstance(position, CnfPosition):
        return {
            "vars": position.var_count,
            "clauses": [sorted(c) for c in position.clauses],
            "true_set": sorted(position.true_set),
        }
    if isinstance(position, UndirectedGraph):
        return _graph_json(position)
    if isinstance(position, FriendCirclePosition):
        doc = _graph_json(position.graph)
        doc["seeds"] = sorted(position.seeds)
        doc["weights"] = [
            [u, v, "t" if (u, v) in position.true_edges else "f"]
            for u, v in sorted(position.graph.edges)
        ]
        return doc
    if isinstance(position, InfluenceNetwork):
        return {
            "graph": _graph_json(position.graph),
            "theta": list(position.theta),
            "demographics": [sorted(d) for d in position.demographics],
        }
    if isinstance(position, HypergraphNimPosition):
        return {
            "vertices": position.vertex_count,
            "hyperedges": [sorted(e) for e in position.hyperedges],
            "pebbles": list(position.pebbles),
            "current": position.current,
        }
    raise ValidationError(f"cannot serialize {type(position).__name__}")


# ---------------------------------------------------------------------------
# documents

def _parse_grid_literal(text: str) -> Grid:
    rows = text.split("/")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            bad_col = width + 1 if len(row) > width else len(row) + 1
            raise ParseError(
                f"parse error at row {i + 1}, column {bad_col}: "
                f"row has {len(row)} cells, expected {width}",
                row=i + 1, col=bad_col,
            )
        for j, ch in enumerate(row):
            if ch not in "GP":
                raise ParseError(
                    f"parse error at row {i + 1}, column {j + 1}: "
                    f"illegal cell {ch!r}",
                    row=i + 1, col=j + 1,
                )
    return Grid.from_rows(rows)


def parse_position(text: str) -> PositionDocument:
    """Parse a JSON document or a compact grid literal into a position."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    if stripped[0] not in "{[":
        return PositionDocument("transverse_wave", _parse_grid_literal(stripped))
    try:
        obj = json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            row=exc.lineno, col=exc.colno,
        ) from None
    if not isinstance(obj, dict):
        raise ValidationError("document must be a JSON object")
    ruleset = _need(obj, "ruleset", str, "document")
    if ruleset not in RULESET_IDS:
        raise ValidationError(f"unsupported ruleset {ruleset!r}")
    version = obj.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ValidationError(f"unsupported format version {version!r}")
    return PositionDocument(ruleset, _parse_payload(ruleset, obj), FORMAT_VERSION)


def document_for(position) -> PositionDocument:
    return PositionDocument(ruleset_of(position), position)


def document_json(doc: PositionDocument) -> dict:
    body = _payload_json(doc.payload)
    body["ruleset"] = doc.ruleset
    body["version"] = doc.version
    return body


def serialize_position(doc: PositionDocument) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(document_json(doc), sort_keys=True, separators=(",", ":"))


def serialize(position) -> str:
    return serialize_position(document_for(position))


# ---------------------------------------------------------------------------
# move renderings

def move_to_json(ruleset: str, move):
    if ruleset in ("nim", "demi_quantum_nim"):
        return list(move)
    if ruleset == "demographic_influence":
        return list(move)
    return move


def move_from_json(ruleset: str, value):
    """Validate and decode a JSON-shaped move for the given ruleset."""
    if ruleset in ("transverse_wave", "crosswise_and", "crosswise_or"):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"{ruleset}: move must be a column index")
        return value
    if ruleset in ("nim", "demi_quantum_nim"):
        return tuple(_int_list(value, f"{ruleset}: move vector"))
    if ruleset == "demographic_influence":
        pair = _int_list(value, f"{ruleset}: move")
        if len(pair) != 2:
            raise ValidationError(f"{ruleset}: move must be [demographic, amount]")
        return tuple(pair)
    if ruleset in ("avoid_true", "node_kayles", "friend_circle", "hypergraph_nim"):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"{ruleset}: move must be an integer id")
        return value
    raise ValidationError(f"unsupported ruleset {ruleset!r}")
