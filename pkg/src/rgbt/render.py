"""Matplotlib rendering of embedded hosts and their tilings.

Coordinates come from a Tutte barycentric layout: one face is pinned to a
regular polygon and every other vertex sits at the average of its neighbors,
which keeps the drawing faithful to the combinatorial embedding.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .coloring import EdgeColoring
from .planar import Face, Host, SemiMpg

_MPL_COLOR = {"r": "#d62728", "g": "#2ca02c", "b": "#1f77b4", "k": "#555555",
              "Y": "#e6b800"}


def tutte_layout(host: Host, outer: Face | None = None) -> dict[int, tuple[float, float]]:
    """Barycentric coordinates with `outer` (default: an outer facet or the
    largest face) pinned to a regular polygon."""
    if outer is None:
        if isinstance(host, SemiMpg) and host.outer_facets:
            outer = max(host.outer_facets, key=len)
        else:
            outer = host.faces[-1]
    k = len(outer)
    pos: dict[int, tuple[float, float]] = {}
    for i, v in enumerate(outer):
        ang = 2 * np.pi * i / k + np.pi / 2
        pos[v] = (float(np.cos(ang)), float(np.sin(ang)))
    inner = [v for v in range(host.n) if v not in pos]
    if inner:
        index = {v: i for i, v in enumerate(inner)}
        a = np.zeros((len(inner), len(inner)))
        bx = np.zeros(len(inner))
        by = np.zeros(len(inner))
        for v in inner:
            i = index[v]
            deg = len(host.rotation[v])
            a[i, i] = deg
            for w in host.rotation[v]:
                if w in index:
                    a[i, index[w]] -= 1
                else:
                    bx[i] += pos[w][0]
                    by[i] += pos[w][1]
        xs = np.linalg.solve(a, bx)
        ys = np.linalg.solve(a, by)
        for v in inner:
            pos[v] = (float(xs[index[v]]), float(ys[index[v]]))
    return pos


def draw_host(
    host: Host,
    coloring: EdgeColoring | None = None,
    names: dict[int, str] | None = None,
    ax=None,
    title: str = "",
):
    """Draw the embedded graph; yellow double-lines render as paired strokes."""
    if ax is None:
        _, ax = plt.subplots(figsize=(5, 5))
    pos = tutte_layout(host)
    for u, v in host.edges():
        c = coloring[(u, v)] if coloring is not None and (u, v) in coloring else "k"
        x = [pos[u][0], pos[v][0]]
        y = [pos[u][1], pos[v][1]]
        if c == "Y":
            dx, dy = pos[v][0] - pos[u][0], pos[v][1] - pos[u][1]
            norm = max((dx * dx + dy * dy) ** 0.5, 1e-9)
            ox, oy = -dy / norm * 0.02, dx / norm * 0.02
            ax.plot([x[0] + ox, x[1] + ox], [y[0] + oy, y[1] + oy],
                    color=_MPL_COLOR["Y"], lw=1.8)
            ax.plot([x[0] - ox, x[1] - ox], [y[0] - oy, y[1] - oy],
                    color=_MPL_COLOR["Y"], lw=1.8)
        else:
            ax.plot(x, y, color=_MPL_COLOR.get(c, "#999999"), lw=1.8)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    ax.scatter(xs, ys, s=160, zorder=3, facecolor="white", edgecolor="black")
    for v, (x, y) in pos.items():
        label = names.get(v, str(v)) if names else str(v)
        ax.annotate(label, (x, y), ha="center", va="center", fontsize=7, zorder=4)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    return ax


def save_host_figure(
    path: str | Path,
    host: Host,
    coloring: EdgeColoring | None = None,
    names: dict[int, str] | None = None,
    title: str = "",
) -> Path:
    fig, ax = plt.subplots(figsize=(5, 5))
    draw_host(host, coloring, names, ax=ax, title=title)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=130, bbox_inches="tight")
    plt.close(fig)
    return path
