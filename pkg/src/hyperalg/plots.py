"""Matplotlib rendering of hypergraphs.

Vertices sit on a circle; every edge becomes a translucent convex blob
around its members (a hull of small disks, so singletons and pairs stay
visible).  A second panel plots the degree of each vertex.  The Agg
backend is forced so rendering works headless.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Polygon

from .hypergraph import Hypergraph

_EDGE_PAD = 0.16
_DISK_SAMPLES = 24


def _vertex_positions(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(math.pi / 2 - 2 * math.pi * k / n),
         math.sin(math.pi / 2 - 2 * math.pi * k / n))
        for k in range(n)
    ]


def _convex_hull(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _edge_outline(members: list[tuple[float, float]],
                  pad: float) -> list[tuple[float, float]]:
    samples = [
        (x + pad * math.cos(2 * math.pi * k / _DISK_SAMPLES),
         y + pad * math.sin(2 * math.pi * k / _DISK_SAMPLES))
        for x, y in members
        for k in range(_DISK_SAMPLES)
    ]
    return _convex_hull(samples)


def draw_hypergraph(h: Hypergraph, title: str = ""):
    """Figure with the edge-blob layout on the left, degrees on the right."""
    n = h.vertex_count
    positions = _vertex_positions(n)
    fig, (ax, bars) = plt.subplots(
        1, 2, figsize=(11, 5.5), gridspec_kw={"width_ratios": (3, 2)})

    cmap = plt.get_cmap("tab20")
    for i, edge in enumerate(h.edges):
        color = cmap(i % cmap.N)
        outline = _edge_outline([positions[v] for v in edge], _EDGE_PAD)
        ax.add_patch(Polygon(outline, closed=True, facecolor=color,
                             edgecolor=color, alpha=0.30, linewidth=1.2))
    ax.scatter([p[0] for p in positions], [p[1] for p in positions],
               s=36, color="black", zorder=3)
    for v, (x, y) in enumerate(positions):
        reach = math.hypot(x, y)
        if reach:
            lx, ly = x * (1 + 0.22 / reach), y * (1 + 0.22 / reach)
        else:
            lx, ly = 0.0, 0.24
        ax.text(lx, ly, h.labels[v], ha="center", va="center", fontsize=9)
    ax.set_xlim(-1.6, 1.6)
    ax.set_ylim(-1.6, 1.6)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)

    degrees = h.degree_sequence()
    bars.bar(range(n), degrees, color="steelblue")
    bars.set_xticks(range(n))
    bars.set_xticklabels(h.labels, rotation=90, fontsize=8)
    bars.set_ylabel("degree")
    bars.set_title(f"{len(h.edges)} edges")
    fig.tight_layout()
    return fig


def save_hypergraph_figure(h: Hypergraph, path: str, title: str = "") -> None:
    fig = draw_hypergraph(h, title)
    try:
        fig.savefig(path, dpi=150)
    finally:
        plt.close(fig)
