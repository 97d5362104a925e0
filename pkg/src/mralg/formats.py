"""JSON structure files and Graphviz export.

Structure files carry ``"version": 1`` and a ``kind``:

* ``signed`` / ``interval``: ``{"n": K}``
* ``filter``: ``{"n": K, "f": [1, 3]}`` (filter generator as element names)
* ``table``: ``size``, ``one``, ``join``, optional ``caret`` and ``delta``
  (``-1`` where Delta is undefined) and optional ``labels``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .boolean import Universe
from .collapse import QuotientLattice
from .table import FiniteStructure, StructureError, filter_structure, interval_structure, \
    signed_structure

VERSION = 1
KINDS = ("signed", "interval", "filter", "table")


class FormatError(ValueError):
    pass


def signed_doc(n: int) -> dict:
    Universe(n)
    return {"version": VERSION, "kind": "signed", "n": n}


def interval_doc(n: int) -> dict:
    Universe(n)
    return {"version": VERSION, "kind": "interval", "n": n}


def filter_doc(n: int, f: list[int]) -> dict:
    Universe(n).from_names(f)
    return {"version": VERSION, "kind": "filter", "n": n, "f": sorted(f)}


def table_doc(s: FiniteStructure) -> dict:
    doc = {"version": VERSION, "kind": "table", "size": s.size, "one": s.one,
           "join": [list(r) for r in s.join]}
    if s.caret is not None:
        doc["caret"] = [list(r) for r in s.caret]
    if s.delta is not None:
        doc["delta"] = [list(r) for r in s.delta]
    if s.labels is not None:
        doc["labels"] = list(s.labels)
    return doc


def _int(doc, key):
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(f"field {key!r} must be an integer")
    return v


def structure_from_doc(doc) -> FiniteStructure:
    if not isinstance(doc, dict):
        raise FormatError("structure file must hold a JSON object")
    if doc.get("version") != VERSION:
        raise FormatError(f"unsupported version {doc.get('version')!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise FormatError(f"unknown kind {kind!r}")
    try:
        if kind == "table":
            return FiniteStructure(_int(doc, "size"), _int(doc, "one"), _matrix(doc, "join"),
                                   _matrix(doc, "caret", optional=True),
                                   _matrix(doc, "delta", optional=True), doc.get("labels"))
        n = _int(doc, "n")
        if kind == "signed":
            return signed_structure(n)
        if kind == "interval":
            return interval_structure(n)
        f = doc.get("f")
        if not isinstance(f, list):
            raise FormatError("filter generator 'f' must be a list of element names")
        return filter_structure(n, Universe(n).from_names(f))
    except (StructureError, ValueError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(str(e)) from None


def _matrix(doc, key, optional=False):
    m = doc.get(key)
    if m is None and optional:
        return None
    if not isinstance(m, list) or not all(isinstance(r, list) for r in m) or not all(
            isinstance(v, int) and not isinstance(v, bool) for r in m for v in r):
        raise FormatError(f"field {key!r} must be a matrix of integers")
    return m


def read_doc(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})") from None


def load_structure(path) -> FiniteStructure:
    return structure_from_doc(read_doc(path))


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def write_doc(doc, path):
    Path(path).write_text(dumps(doc))


def hasse_edges(n: int, leq) -> list[tuple[int, int]]:
    """Covering pairs ``(x, y)`` with ``x < y``: the transitive reduction of ``leq``."""
    edges = []
    for x in range(n):
        for y in range(n):
            if x != y and leq(x, y) and not any(
                    z != x and z != y and leq(x, z) and leq(z, y) for z in range(n)):
                edges.append((x, y))
    return edges


def _dot(name, labels, edges) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(labels):
        lines.append(f"  n{i} [label={json.dumps(lab)}];")
    for x, y in edges:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(s: FiniteStructure) -> str:
    edges = hasse_edges(s.size, lambda x, y: s.leq[x][y])
    return _dot("structure", [s.label(x) for x in s.elements], edges)


def export_quotient_dot(q: QuotientLattice) -> str:
    s = q.structure
    labels = ["[[" + s.label(c.representative) + "]]" for c in q.classes]
    return _dot("quotient", labels, hasse_edges(q.size, q.leq))
