"""File reports: per-vertex and per-edge CSV tables plus a rendered figure."""

from __future__ import annotations

import csv
import re
from pathlib import Path

from .hypergraph import Hypergraph


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "-", text).strip("-") or "hypergraph"


def write_report(h: Hypergraph, algebra: str, kind: str,
                 out_dir: str) -> dict[str, str]:
    """Write vertices.csv, edges.csv, and a PNG figure under out_dir.

    Returns the written paths keyed by "vertices", "edges", "figure".
    """
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    base = _slug(f"{algebra}_{kind}")

    vertices_path = directory / f"{base}_vertices.csv"
    with open(vertices_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["vertex", "label", "degree"])
        for v in range(h.vertex_count):
            writer.writerow([v, h.labels[v], h.degree(v)])

    edges_path = directory / f"{base}_edges.csv"
    with open(edges_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["edge", "size", "members", "labels"])
        for i, edge in enumerate(h.edges):
            writer.writerow([
                i,
                len(edge),
                " ".join(str(v) for v in edge),
                " ".join(h.labels[v] for v in edge),
            ])

    figure_path = directory / f"{base}.png"
    from .plots import save_hypergraph_figure

    save_hypergraph_figure(h, str(figure_path), title=f"{algebra} / {kind}")
    return {
        "vertices": str(vertices_path),
        "edges": str(edges_path),
        "figure": str(figure_path),
    }
