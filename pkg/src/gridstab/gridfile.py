"""JSON grid files.

::

    {
      "nodes": [{"id": 0, "kind": "generator", "shunt_b": 0.0, "shunt_g": 0.0}, ...],
      "edges": [{"a": 0, "b": 1, "susceptance": -1.0, "conductance": 0.0}, ...]
    }

An inductive line of strength ``k`` has ``susceptance = -k``.  ``shunt_g``
and ``conductance`` default to 0.  Node ids may be any distinct integers;
if a load precedes a generator the nodes are re-indexed generators-first
and a warning is issued.
"""

import json
import warnings

from .errors import InputError, ParseError
from .grid import Edge, GridSpec, Node, NodeKind


def _num(obj, key, default=None):
    if key not in obj:
        if default is None:
            raise ParseError(f"missing field {key!r} in {obj}")
        return default
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)):
        raise ParseError(f"field {key!r} must be a number, got {val!r}")
    return float(val)


def grid_from_dict(doc):
    if not isinstance(doc, dict) or "nodes" not in doc or "edges" not in doc:
        raise ParseError("grid document needs top-level 'nodes' and 'edges'")
    raw_nodes = []
    for nd in doc["nodes"]:
        try:
            kind = NodeKind(nd["kind"])
            nid = nd["id"]
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"bad node entry {nd!r}") from exc
        if not isinstance(nid, int) or isinstance(nid, bool):
            raise ParseError(f"node id must be an integer, got {nid!r}")
        shunt = complex(_num(nd, "shunt_g", 0.0), _num(nd, "shunt_b", 0.0))
        raw_nodes.append((nid, kind, shunt))
    ids = [nid for nid, _, _ in raw_nodes]
    if len(set(ids)) != len(ids):
        raise ParseError("duplicate node ids")

    # stable: file order is kept within generators and within loads
    ordered = sorted(raw_nodes, key=lambda t: t[1] is NodeKind.LOAD)
    if ordered != raw_nodes:
        warnings.warn("loads listed before generators; nodes re-indexed generators-first",
                      stacklevel=2)
    index = {t[0]: i for i, t in enumerate(ordered)}
    nodes = tuple(Node(i, kind, shunt) for i, (_, kind, shunt) in enumerate(ordered))

    edges = []
    for e in doc["edges"]:
        try:
            a, b = index[e["a"]], index[e["b"]]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad edge entry {e!r}") from exc
        edges.append(Edge(a, b, complex(_num(e, "conductance", 0.0), _num(e, "susceptance"))))
    try:
        return GridSpec(nodes, tuple(edges))
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def grid_to_dict(g):
    return {
        "nodes": [
            {"id": nd.id, "kind": nd.kind.value, "shunt_b": nd.shunt.imag, "shunt_g": nd.shunt.real}
            for nd in g.nodes
        ],
        "edges": [
            {"a": e.a, "b": e.b, "susceptance": e.admittance.imag, "conductance": e.admittance.real}
            for e in g.edges
        ],
    }


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return grid_from_dict(doc)


def dumps(g):
    return json.dumps(grid_to_dict(g), indent=2) + "\n"


def load(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def dump(g, path):
    with open(path, "w") as fh:
        fh.write(dumps(g))
