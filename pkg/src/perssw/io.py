"""Reading and writing complexes, point clouds, barcodes and reports.

Filtered complexes use a line format, one cell per line::

    # comment
    <scale> <v0> <v1> ... <vk>

with ascending vertex ids and lines sorted by scale.  Barcodes and reports
are JSON documents carrying a ``schema_version``.
"""

from __future__ import annotations

import json
import math
import os
import re
from pathlib import Path

import numpy as np

from .complex import Cochain, ComplexError, FilteredComplex, faces

SCHEMA_VERSION = 1


class FormatError(ValueError):
    """Malformed input file; the message carries the offending line number."""


def _lines(path):
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line and not line.startswith("#"):
                yield lineno, line


def format_scale(r: float) -> str:
    return repr(float(r))


def dumps_complex(fc: FilteredComplex) -> str:
    out = [f"# filtered complex: {len(fc)} cells, dimension {fc.max_dimension}"]
    out.extend(" ".join([format_scale(r), *map(str, s)]) for s, r in fc)
    return "\n".join(out) + "\n"


def save_complex(fc: FilteredComplex, path) -> None:
    Path(path).write_text(dumps_complex(fc), encoding="utf-8")


def load_complex(path) -> FilteredComplex:
    """Parse and validate a filtered-complex file.

    Raises :class:`FormatError` naming the line of a malformed entry, an
    out-of-order scale, a missing face or a face entering after its coface.
    """
    cells: dict[tuple, float] = {}
    where: dict[tuple, int] = {}
    last = -math.inf
    for lineno, line in _lines(path):
        fields = line.split()
        try:
            r = float(fields[0])
            s = tuple(int(v) for v in fields[1:])
        except (ValueError, IndexError):
            raise FormatError(f"line {lineno}: cannot parse {line!r}") from None
        if not s:
            raise FormatError(f"line {lineno}: no vertices")
        if not math.isfinite(r) or r < 0:
            raise FormatError(f"line {lineno}: invalid scale {fields[0]}")
        if any(v < 0 for v in s) or any(a >= b for a, b in zip(s, s[1:])):
            raise FormatError(f"line {lineno}: vertices {s} are not strictly ascending non-negative ids")
        if r < last:
            raise FormatError(f"line {lineno}: scale {r} is smaller than the previous line's {last}")
        if s in cells:
            raise FormatError(f"line {lineno}: duplicate simplex {s} (first on line {where[s]})")
        last = r
        cells[s] = r
        where[s] = lineno
    for s, r in cells.items():
        for f in faces(s):
            rf = cells.get(f)
            if rf is None:
                raise FormatError(f"line {where[s]}: simplex {s} is missing its face {f}")
            if rf > r:
                raise FormatError(
                    f"line {where[s]}: simplex {s} at scale {r} enters before its face {f} "
                    f"(line {where[f]}, scale {rf})"
                )
    try:
        return FilteredComplex(cells.items())
    except ComplexError as exc:  # pragma: no cover - checks above are stricter
        raise FormatError(str(exc)) from None


def load_points(path) -> np.ndarray:
    """Point cloud from CSV or whitespace-separated text, one point per line."""
    rows = []
    width = None
    for lineno, line in _lines(path):
        fields = line.replace(",", " ").split()
        try:
            row = [float(x) for x in fields]
        except ValueError:
            raise FormatError(f"line {lineno}: cannot parse {line!r}") from None
        if not all(math.isfinite(x) for x in row):
            raise FormatError(f"line {lineno}: non-finite coordinate")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise FormatError(f"line {lineno}: expected {width} coordinates, got {len(row)}")
        rows.append(row)
    if not rows:
        return np.zeros((0, 1))
    return np.array(rows, dtype=np.float64)


def _num(x: float):
    return "inf" if x == math.inf else float(x)


def cochain_record(c: Cochain) -> dict:
    return {
        "degree": c.degree,
        "scale": _num(c.scale),
        "support": [list(s) for s in c.sorted_support()],
    }


def barcode_records(classes) -> list[dict]:
    return [
        {
            "index": c.index,
            "degree": c.degree,
            "birth": _num(c.birth),
            "death": _num(c.death),
            "anchor": _num(c.anchor),
            "representative": [list(s) for s in c.representative.sorted_support()],
        }
        for c in classes
    ]


def barcodes_document(classes, max_degree: int) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": "barcodes", "max_degree": max_degree,
            "bars": barcode_records(classes)}


def report_document(report) -> dict:
    s, t = report.interval
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "stiefel_whitney",
        "type_n": report.n,
        "interval": [_num(s), _num(t)],
        "valid": report.valid,
        "failure": report.failure,
        "wu": [
            {"k": k, "unique": w.unique, "bars": list(w.bars), "cochain": cochain_record(w.representative)}
            for k, w in sorted(report.wu.items())
        ],
        "sw": [
            {
                "k": k,
                "nontrivial": report.nontrivial[k],
                "bars": list(report.constituents.get(k, ())),
                "cochain": cochain_record(w),
            }
            for k, w in sorted(report.sw.items())
        ],
        "endpoint_checks": [
            {"bar": c.bar, "degree": c.degree, "k": c.k, "endpoint": _num(c.endpoint), "passed": c.passed}
            for c in report.endpoint_checks
        ],
        "betti_changes": {str(k): v for k, v in sorted(report.betti_changes.items())},
    }


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]")


def dump_json(doc, path=None) -> str:
    """Indented JSON with integer lists (simplices) kept on one line."""
    text = json.dumps(doc, indent=1)
    text = _INT_LIST.sub(lambda m: "[" + ", ".join(m.group(1).replace(",", " ").split()) + "]", text)
    text += "\n"
    if path is not None and os.fspath(path) != "-":
        Path(path).write_text(text, encoding="utf-8")
    return text
