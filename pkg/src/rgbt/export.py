"""DOT text export for hosts and tilings."""

from __future__ import annotations

from .coloring import EdgeColoring
from .planar import Host, SemiMpg

_DOT_COLOR = {
    "r": "red",
    "g": "green3",
    "b": "blue",
    "k": "black",
    # doubled line for the abandoned double-line edges
    "Y": "gold:gold",
}


def export_dot(
    host: Host,
    coloring: EdgeColoring | None = None,
    names: dict[int, str] | None = None,
) -> str:
    """Graphviz text with one edge per line, stable node ordering."""
    lines = ["graph rgbt {", "  node [shape=circle fontsize=10];"]
    for v in range(host.n):
        label = names.get(v, str(v)) if names else str(v)
        lines.append(f'  n{v} [label="{label}"];')
    boundary = set(host.boundary_edges()) if isinstance(host, SemiMpg) else set()
    for u, v in host.edges():
        attrs = []
        if coloring is not None and (u, v) in coloring:
            c = coloring[(u, v)]
            attrs.append(f'color="{_DOT_COLOR.get(c, "gray")}"')
            if c == "Y":
                attrs.append("penwidth=2")
        if (u, v) in boundary:
            attrs.append("style=dashed")
        suffix = f" [{' '.join(attrs)}]" if attrs else ""
        lines.append(f"  n{u} -- n{v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
