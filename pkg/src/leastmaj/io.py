"""JSON documents for set functions, biset functions and point sets.

Elements are 1-based in every document.  Numbers may be JSON numbers or
``"p/q"`` strings; floats are read exactly from their decimal text.

Set function::

    {"n": 2, "kind": "submodular", "values": [0, -1, 2, 0]}

``values`` is either a list in bitmask order (bit i is element i+1) or an
object mapping comma-separated element lists (``""`` for the empty set) to
values.

Biset function::

    {"n": 2, "entries": [{"S": [1], "T": [2], "value": 1}, ...]}

Point set::

    {"n": 2, "points": [[0, 0], [1, "1/2"]]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .exact import point, q, to_json
from .ground import mask_of, members
from .setfn import SUBMODULAR, BisetFunction, SetFunction


class SchemaError(ValueError):
    """A document does not match its schema."""


def _num(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float, str, Fraction)):
        raise SchemaError(f"{where}: expected a number or 'p/q' string, got {value!r}")
    try:
        return q(value)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _int_field(doc, key):
    if key not in doc:
        raise SchemaError(f"missing field {key!r}")
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f"field {key!r} must be an integer")
    return v


def _elements(lst, n, where) -> int:
    if not isinstance(lst, list):
        raise SchemaError(f"{where}: expected a list of elements")
    for e in lst:
        if isinstance(e, bool) or not isinstance(e, int) or not 1 <= e <= n:
            raise SchemaError(f"{where}: element {e!r} outside 1..{n}")
    if len(set(lst)) != len(lst):
        raise SchemaError(f"{where}: repeated element")
    return mask_of(e - 1 for e in lst)


def loads(text: str) -> Any:
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc


def load(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def set_function_from_doc(doc) -> SetFunction:
    if not isinstance(doc, dict):
        raise SchemaError("set function document must be an object")
    n = _int_field(doc, "n")
    kind = doc.get("kind", SUBMODULAR)
    vals = doc.get("values")
    if isinstance(vals, list):
        table = [_num(v, f"values[{i}]") for i, v in enumerate(vals)]
    elif isinstance(vals, dict):
        table = [None] * (1 << n) if 0 < n <= 16 else None
        if table is None:
            raise SchemaError(f"unsupported ground set size {n}")
        table[0] = 0
        for key, v in vals.items():
            parts = [p for p in str(key).replace(" ", "").strip("{}").split(",") if p]
            try:
                elems = [int(p) for p in parts]
            except ValueError as exc:
                raise SchemaError(f"bad subset key {key!r}") from exc
            table[_elements(elems, n, f"values[{key!r}]")] = _num(v, f"values[{key!r}]")
        missing = [i for i, v in enumerate(table) if v is None]
        if missing:
            raise SchemaError(f"{len(missing)} subsets have no value")
    else:
        raise SchemaError("field 'values' must be a list or an object")
    try:
        return SetFunction(n, tuple(table), kind)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def set_function_to_doc(f: SetFunction) -> dict:
    return {"n": f.n, "kind": f.kind, "values": [to_json(v) for v in f.values]}


def biset_function_from_doc(doc) -> BisetFunction:
    if not isinstance(doc, dict):
        raise SchemaError("biset function document must be an object")
    n = _int_field(doc, "n")
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise SchemaError("field 'entries' must be a list")
    triples = []
    for k, e in enumerate(entries):
        if not isinstance(e, dict) or not {"S", "T", "value"} <= set(e):
            raise SchemaError(f"entries[{k}] needs S, T and value")
        s = _elements(e["S"], n, f"entries[{k}].S")
        t = _elements(e["T"], n, f"entries[{k}].T")
        if s & t:
            raise SchemaError(f"entries[{k}]: S and T overlap")
        triples.append((s, t, _num(e["value"], f"entries[{k}].value")))
    if not any(s == 0 and t == 0 for s, t, _ in triples):
        triples.append((0, 0, 0))
    try:
        return BisetFunction.from_entries(n, triples)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def biset_function_to_doc(h: BisetFunction) -> dict:
    entries = [
        {"S": [i + 1 for i in members(s)], "T": [i + 1 for i in members(t)], "value": to_json(v)}
        for s, t, v in h.entries()
    ]
    return {"n": h.n, "entries": entries}


def points_from_doc(doc) -> tuple[int, list[tuple]]:
    if not isinstance(doc, dict):
        raise SchemaError("point set document must be an object")
    n = _int_field(doc, "n")
    pts = doc.get("points")
    if not isinstance(pts, list) or not pts:
        raise SchemaError("field 'points' must be a non-empty list")
    out = []
    for k, p in enumerate(pts):
        if not isinstance(p, list) or len(p) != n:
            raise SchemaError(f"points[{k}] must be a list of {n} numbers")
        out.append(tuple(_num(v, f"points[{k}]") for v in p))
    return n, out


def points_to_doc(n: int, pts) -> dict:
    return {"n": n, "points": [[to_json(v) for v in point(p)] for p in pts]}


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)
