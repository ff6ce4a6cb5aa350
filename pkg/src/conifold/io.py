"""JSON file formats for configurations, fibred scenarios and reports.

Every document is UTF-8 JSON with a top-level ``schema_version``. Integer
matrix entries are decimal strings so arbitrary precision survives any JSON
reader. Output is canonical (sorted keys, fixed separators), so equal
documents serialize to equal bytes.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .fibered import BaseArc, CriticalValue, Crossing, EllipticFibration, PathStep
from .relations import CycleConfiguration
from .zlinalg import IntegerMatrix

__all__ = [
    "SCHEMA_VERSION",
    "FormatError",
    "dumps",
    "loads",
    "digest",
    "matrix_to_json",
    "matrix_from_json",
    "configuration_to_json",
    "configuration_from_json",
    "write_configuration",
    "read_configuration",
    "fibered_from_json",
    "render_text",
    "parse_text",
]

SCHEMA_VERSION = 1


class FormatError(ValueError):
    """Malformed input; ``location`` is a JSON path or ``line:col``."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}:{exc.lineno}:{exc.colno}", exc.msg) from None


def digest(doc: Any) -> str:
    return hashlib.sha256(dumps(doc).encode()).hexdigest()


def _expect(cond: bool, where: str, msg: str):
    if not cond:
        raise FormatError(where, msg)


def _int(value, where: str) -> int:
    if isinstance(value, bool):
        raise FormatError(where, "expected an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        s = value.strip()
        if s.lstrip("+-").isdigit():
            return int(s)
    raise FormatError(where, f"expected a decimal integer string, got {value!r}")


def matrix_to_json(M: IntegerMatrix) -> dict:
    return {"rows": M.rows, "cols": M.cols,
            "entries": [[str(x) for x in row] for row in M.to_rows()]}


def matrix_from_json(d, where: str = "$") -> IntegerMatrix:
    _expect(isinstance(d, dict), where, "expected an object with rows, cols, entries")
    for key in ("rows", "cols", "entries"):
        _expect(key in d, where, f"missing field {key!r}")
    rows = _int(d["rows"], f"{where}.rows")
    cols = _int(d["cols"], f"{where}.cols")
    entries = d["entries"]
    _expect(isinstance(entries, list) and len(entries) == rows, f"{where}.entries",
            f"expected {rows} rows")
    out = []
    for i, row in enumerate(entries):
        _expect(isinstance(row, list) and len(row) == cols, f"{where}.entries[{i}]",
                f"expected {cols} entries")
        out.append([_int(x, f"{where}.entries[{i}][{j}]") for j, x in enumerate(row)])
    if rows == 0 or cols == 0:
        return IntegerMatrix.zeros(rows, cols)
    return IntegerMatrix.from_rows(out)


def _adjacency(n: int, pairs) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in pairs:
        adj[i].append(j)
        adj[j].append(i)
    return [sorted(a) for a in adj]


def configuration_to_json(config: CycleConfiguration) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "cycle-configuration",
        "labels": list(config.labels),
        "classes": matrix_to_json(config.classes),
        "pairing": None if config.pairing is None else matrix_to_json(config.pairing),
        "disjoint": _adjacency(len(config), config.disjoint),
        "provenance": config.provenance,
    }


def _check_header(doc, kind: str):
    _expect(isinstance(doc, dict), "$", "expected a JSON object")
    _expect("schema_version" in doc, "$", "missing schema_version")
    _expect(doc["schema_version"] == SCHEMA_VERSION, "$.schema_version",
            f"unsupported version {doc['schema_version']!r} (expected {SCHEMA_VERSION})")
    _expect(doc.get("kind") == kind, "$.kind", f"expected kind {kind!r}")


def configuration_from_json(doc) -> CycleConfiguration:
    _check_header(doc, "cycle-configuration")
    labels = doc.get("labels")
    _expect(isinstance(labels, list) and all(isinstance(s, str) for s in labels),
            "$.labels", "expected a list of strings")
    n = len(labels)
    _expect("classes" in doc, "$", "missing field 'classes'")
    classes = matrix_from_json(doc["classes"], "$.classes")
    pairing = None
    if doc.get("pairing") is not None:
        pairing = matrix_from_json(doc["pairing"], "$.pairing")
    adj = doc.get("disjoint", [])
    _expect(isinstance(adj, list) and len(adj) == n, "$.disjoint",
            f"expected an adjacency list with {n} entries")
    pairs = set()
    for i, nbrs in enumerate(adj):
        _expect(isinstance(nbrs, list), f"$.disjoint[{i}]", "expected a list")
        for k, j in enumerate(nbrs):
            j = _int(j, f"$.disjoint[{i}][{k}]")
            _expect(0 <= j < n and j != i, f"$.disjoint[{i}][{k}]", f"bad index {j}")
            _expect(i in adj[j], f"$.disjoint[{i}][{k}]",
                    f"adjacency not symmetric: {j} does not list {i}")
            pairs.add((min(i, j), max(i, j)))
    prov = doc.get("provenance", {})
    _expect(isinstance(prov, dict), "$.provenance", "expected an object")
    try:
        return CycleConfiguration(tuple(labels), classes, pairing, frozenset(pairs), prov)
    except ValueError as exc:
        raise FormatError("$", str(exc)) from None


def write_configuration(config: CycleConfiguration, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(configuration_to_json(config)))


def read_configuration(path) -> CycleConfiguration:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(str(path), exc.strerror or str(exc)) from None
    return configuration_from_json(loads(text, str(path)))


def _steps(raw, where: str) -> tuple:
    _expect(isinstance(raw, list), where, "expected a list of steps")
    out = []
    for i, s in enumerate(raw):
        w = f"{where}[{i}]"
        _expect(isinstance(s, dict) and "fibration" in s and "name" in s, w,
                "a step needs fibration and name")
        try:
            out.append(PathStep(_int(s["fibration"], f"{w}.fibration"), str(s["name"]),
                                _int(s.get("direction", 1), f"{w}.direction")))
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(w, str(exc)) from None
    return tuple(out)


def fibered_from_json(doc) -> tuple[EllipticFibration, EllipticFibration, list[BaseArc]]:
    """Two fibrations and a list of arcs with their crossings.

    Crossings are listed once, as ``{"id", "arcs": [a1, a2], "sign", "path1",
    "path2"}``, and recorded on both arcs with opposite signs.
    """
    _check_header(doc, "fibered-scenario")
    fibs = doc.get("fibrations")
    _expect(isinstance(fibs, list) and len(fibs) == 2, "$.fibrations",
            "expected exactly two fibrations")
    built = []
    for k, f in enumerate(fibs):
        w = f"$.fibrations[{k}]"
        _expect(isinstance(f, dict) and isinstance(f.get("critical_values"), list), w,
                "expected name and critical_values")
        cvs = []
        for i, cv in enumerate(f["critical_values"]):
            wc = f"{w}.critical_values[{i}]"
            _expect(isinstance(cv, dict), wc, "expected an object")
            try:
                pt = cv["point"]
                cvs.append(CriticalValue(
                    str(cv["name"]), complex(float(pt[0]), float(pt[1])),
                    tuple(_int(x, f"{wc}.class") for x in cv["class"]),
                    bool(cv.get("trivial", False))))
            except (KeyError, TypeError, IndexError) as exc:
                raise FormatError(wc, f"missing or malformed field ({exc})") from None
            except ValueError as exc:
                if isinstance(exc, FormatError):
                    raise
                raise FormatError(wc, str(exc)) from None
        try:
            built.append(EllipticFibration(str(f.get("name", f"F{k + 1}")), tuple(cvs)))
        except ValueError as exc:
            raise FormatError(w, str(exc)) from None
    arcs: dict[str, BaseArc] = {}
    for i, a in enumerate(doc.get("arcs", [])):
        w = f"$.arcs[{i}]"
        _expect(isinstance(a, dict) and {"name", "start", "end"} <= set(a), w,
                "an arc needs name, start, end")
        _expect(a["name"] not in arcs, w, f"duplicate arc {a['name']!r}")
        arcs[a["name"]] = BaseArc(a["name"], a["start"], a["end"], (),
                                  _steps(a.get("monodromy_path", []), f"{w}.monodromy_path"))
    for i, c in enumerate(doc.get("crossings", [])):
        w = f"$.crossings[{i}]"
        _expect(isinstance(c, dict) and {"id", "arcs", "sign"} <= set(c), w,
                "a crossing needs id, arcs, sign")
        _expect(isinstance(c["arcs"], list) and len(c["arcs"]) == 2, f"{w}.arcs",
                "expected two arc names")
        n1, n2 = c["arcs"]
        _expect(n1 in arcs and n2 in arcs, f"{w}.arcs", "unknown arc")
        sign = _int(c["sign"], f"{w}.sign")
        _expect(sign in (1, -1), f"{w}.sign", "sign must be +1 or -1")
        try:
            arcs[n1] = arcs[n1].with_crossing(
                Crossing(str(c["id"]), n2, sign, _steps(c.get("path1", []), f"{w}.path1")))
            arcs[n2] = arcs[n2].with_crossing(
                Crossing(str(c["id"]), n1, -sign, _steps(c.get("path2", []), f"{w}.path2")))
        except FormatError:
            raise
        except ValueError as exc:
            raise FormatError(w, str(exc)) from None
    return built[0], built[1], list(arcs.values())


# text rendering: one "path = json" line per leaf
def _flatten(obj, prefix: str, out: list):
    if isinstance(obj, dict) and obj:
        for k in sorted(obj):
            _expect(isinstance(k, str) and not any(ch in k for ch in ".[]= "), prefix,
                    f"key {k!r} cannot be rendered as text")
            _flatten(obj[k], f"{prefix}.{k}" if prefix else k, out)
    elif isinstance(obj, list) and obj:
        for i, v in enumerate(obj):
            _flatten(v, f"{prefix}[{i}]", out)
    else:
        out.append(f"{prefix} = {json.dumps(obj, sort_keys=True, ensure_ascii=False)}")


def render_text(doc: dict) -> str:
    lines: list[str] = []
    _flatten(doc, "", lines)
    return "\n".join(lines) + "\n"


def _parse_path(path: str) -> list:
    parts: list = []
    for seg in path.split("."):
        name, _, rest = seg.partition("[")
        if name:
            parts.append(name)
        if rest:
            for idx in ("[" + rest).split("[")[1:]:
                parts.append(int(idx.rstrip("]")))
    return parts


def parse_text(text: str) -> dict:
    """Inverse of :func:`render_text`."""
    root: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        path, sep, value = line.partition(" = ")
        _expect(bool(sep), f"line {lineno}", "expected 'path = value'")
        parts = _parse_path(path)
        node: Any = root
        for key, nxt in zip(parts, parts[1:]):
            empty = [] if isinstance(nxt, int) else {}
            if isinstance(key, int):
                while len(node) <= key:
                    node.append(None)
                if node[key] is None:
                    node[key] = empty
                node = node[key]
            else:
                node = node.setdefault(key, empty)
        last = parts[-1]
        val = json.loads(value)
        if isinstance(last, int):
            while len(node) <= last:
                node.append(None)
            node[last] = val
        else:
            node[last] = val
    return root
