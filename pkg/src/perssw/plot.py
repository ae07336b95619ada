"""Barcode plots with Stiefel-Whitney constituents highlighted."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib
from matplotlib.figure import Figure

from .io import SCHEMA_VERSION, dump_json

HIGHLIGHT = "#d62728"
PLAIN = "#7f7f7f"


def _highlights(report) -> dict[int, list[int]]:
    """bar index -> SW degrees it contributes to."""
    out: dict[int, list[int]] = {}
    if report is None or not report.valid:
        return out
    for k, bars in sorted(report.constituents.items()):
        if report.nontrivial.get(k):
            for b in bars:
                out.setdefault(b, []).append(k)
    return out


def sidecar_document(classes, report) -> dict:
    marks = _highlights(report)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "barcode_plot",
        "interval": None if report is None else list(report.interval),
        "valid": None if report is None else report.valid,
        "bars": [
            {
                "index": c.index,
                "degree": c.degree,
                "birth": c.birth,
                "death": "inf" if math.isinf(c.death) else c.death,
                "highlight": bool(marks.get(c.index)),
                "sw_degrees": marks.get(c.index, []),
            }
            for c in classes
        ],
    }


def emit_barcode_plot(classes, report, path, min_length: float = 0.0):
    """Write an SVG barcode plot to ``path`` and a JSON sidecar next to it.

    Bars shorter than ``min_length`` are omitted from the drawing (never
    from the sidecar).  Returns the sidecar path.
    """
    path = Path(path)
    classes = list(classes)
    marks = _highlights(report)
    degrees = sorted({c.degree for c in classes})

    finite = [c.death for c in classes if not math.isinf(c.death)] + [c.birth for c in classes]
    if report is not None:
        finite.append(report.interval[1])
    right = max(finite, default=1.0) or 1.0
    right *= 1.05

    fig = Figure(figsize=(6.4, 1.2 + 1.6 * max(len(degrees), 1)))
    axes = fig.subplots(max(len(degrees), 1), 1, squeeze=False)[:, 0]
    for ax, deg in zip(axes, degrees or [None]):
        ax.set_xlim(0, right)
        if deg is None:
            ax.set_yticks([])
            continue
        bars = [c for c in classes if c.degree == deg and c.death - c.birth >= min_length]
        for row, c in enumerate(bars):
            end = right if math.isinf(c.death) else c.death
            color = HIGHLIGHT if c.index in marks else PLAIN
            ax.hlines(row, c.birth, end, colors=color, linewidth=2.5 if c.index in marks else 1.2)
        if report is not None:
            s, t = report.interval
            if s < t:
                ax.axvspan(s, t, color="#1f77b4", alpha=0.15, linewidth=0)
            else:
                ax.axvline(t, color="#1f77b4", alpha=0.5)
        ax.set_ylabel(f"H^{deg}")
        ax.set_yticks([])
        ax.set_ylim(-1, max(len(bars), 1))
    axes[-1].set_xlabel("filtration scale")
    if report is not None:
        state = "valid" if report.valid else "invalid"
        fig.suptitle(f"Stiefel-Whitney classes of type {report.n} ({state})")
    fig.tight_layout()
    with matplotlib.rc_context({"svg.hashsalt": "perssw", "svg.fonttype": "path"}):
        fig.savefig(path, format="svg", metadata={"Date": None})
    sidecar = path.with_suffix(path.suffix + ".json")
    dump_json(sidecar_document(classes, report), sidecar)
    return sidecar
