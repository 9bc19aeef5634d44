"""JSON poset documents, DOT export and grid rendering."""

import csv
import io
import json

from .counting import OVER_BUDGET, SequenceGrid
from .errors import CycleError, ParseError, RangeError
from .poset import covers, poset_from_relation

FORMAT_VERSION = "1"

__all__ = [
    "FORMAT_VERSION",
    "poset_document",
    "write_poset",
    "read_poset",
    "export_dot",
    "render_grid",
    "grid_to_json",
]


def poset_document(p, meta=None):
    return {
        "version": FORMAT_VERSION,
        "size": p.size,
        "labels": list(p.labels) if p.labels is not None else None,
        "covers": [[x, y] for x, y in sorted(covers(p))],
        "meta": dict(meta or {}),
    }


def write_poset(p, meta=None, indent=None):
    return json.dumps(poset_document(p, meta), indent=indent, ensure_ascii=False)


def read_poset(doc):
    """Poset from a document (dict, JSON text or bytes); returns ``(poset, meta)``."""
    if isinstance(doc, (bytes, bytearray)):
        doc = doc.decode("utf-8")
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    expected = {"version", "size", "labels", "covers", "meta"}
    if set(doc) != expected:
        raise ParseError(f"fields must be exactly {sorted(expected)}", field="document")
    if doc["version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported version {doc['version']!r}", field="version")
    size = doc["size"]
    if not isinstance(size, int) or isinstance(size, bool) or size < 0:
        raise ParseError("must be a nonnegative integer", field="size")
    labels = doc["labels"]
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != size or not all(isinstance(s, str) for s in labels):
            raise ParseError("must be null or a list of size strings", field="labels")
    pairs = []
    for i, c in enumerate(doc["covers"] if isinstance(doc["covers"], list) else [None]):
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in c)):
            raise ParseError(f"entry {i} is not a pair of integers", field="covers")
        pairs.append(tuple(c))
    if not isinstance(doc["meta"], dict):
        raise ParseError("must be an object", field="meta")
    try:
        p = poset_from_relation(size, pairs, labels=labels)
    except RangeError as exc:
        raise ParseError(str(exc), field="covers") from exc
    except CycleError:
        raise
    return p, doc["meta"]


def _dot_quote(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(p, name="hasse"):
    """Hasse diagram as a ``digraph``; edges run from lower to upper element."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in range(p.size):
        lines.append(f"  {x} [label={_dot_quote(p.label(x))}];")
    for x, ups in enumerate(p.upper_covers()):
        for y in sorted(ups):
            lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cell_text(v):
    return OVER_BUDGET if v == OVER_BUDGET else str(v)


def render_grid(g: SequenceGrid, format="table"):
    if format == "table":
        return _render_table(g)
    if format == "bfile":
        return _render_bfile(g)
    if format == "csv":
        return _render_csv(g)
    if format == "json":
        return json.dumps(grid_to_json(g), indent=1) + "\n"
    raise ValueError(f"unknown grid format {format!r}")


def _render_table(g):
    out = [f"{g.index_name}={','.join(str(c) for c in g.columns)}"]
    group = None
    for (grp, k), row in zip(g.rows, g.cells):
        if grp != group:
            out.append(f"{g.group_name}={grp}:")
            group = grp
        out.append(f"k={k}  " + ", ".join(_cell_text(v) for v in row))
    return "\n".join(out) + "\n"


def _render_bfile(g):
    out = []
    for (grp, k), row in zip(g.rows, g.cells):
        if len(g.rows) > 1:
            out.append(f"# {g.group_name}={grp} k={k}")
        for idx, v in zip(g.columns, row):
            out.append(f"{idx} {_cell_text(v)}")
    return "\n".join(out) + ("\n" if out else "")


def _render_csv(g):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([g.group_name, "k"] + [f"{g.index_name}={c}" for c in g.columns])
    for (grp, k), row in zip(g.rows, g.cells):
        w.writerow([grp, k] + [_cell_text(v) for v in row])
    return buf.getvalue()


def grid_to_json(g):
    return {
        "axis": g.axis,
        "columns": list(g.columns),
        "rows": [
            {g.group_name: grp, "k": k, "values": [_cell_text(v) for v in row]}
            for (grp, k), row in zip(g.rows, g.cells)
        ],
    }
