"""
DOT and SVG renderings of coloured windows.
"""

import io
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "hamilton-tools"

import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

WindowEdge = Tuple[Tuple[int, ...], Tuple[int, ...], Hashable]

_PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]
_SHEET = 0.18


def _label(v: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def colour_map(colours: Iterable[Hashable]) -> Dict[Hashable, str]:
    return {c: _PALETTE[k % len(_PALETTE)] for k, c in enumerate(sorted(set(colours), key=str))}


def window_graph(edges: Iterable[WindowEdge]) -> nx.Graph:
    g = nx.Graph()
    for u, v, col in edges:
        g.add_edge(u, v, colour=col)
    return g


def to_dot(edges: Sequence[WindowEdge], name: str = "window") -> str:
    """Undirected DOT graph with the colour class on every edge."""
    palette = colour_map(col for _, _, col in edges)
    lines = [f"graph {name} {{", "  node [shape=point];"]
    for u, v, col in sorted(edges, key=lambda e: (e[0], e[1])):
        lines.append(f'  "{_label(u)}" -- "{_label(v)}" [colour="{col}", color="{palette[col]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def layout(vertices: Iterable[Tuple[int, ...]]) -> Dict[Tuple[int, ...], Tuple[float, float]]:
    """Coordinates 1 and 2 span the plane; further coordinates shift small parallel sheets."""
    pos = {}
    for v in vertices:
        extra = sum((k + 1) * x for k, x in enumerate(v[2:]))
        x = v[0] if v else 0
        y = v[1] if len(v) > 1 else 0
        pos[v] = (x + _SHEET * extra, y + _SHEET * extra)
    return pos


def to_svg(edges: Sequence[WindowEdge], title: str = "") -> str:
    g = window_graph(edges)
    pos = layout(g.nodes)
    palette = colour_map(col for _, _, col in edges)
    fig, ax = plt.subplots(figsize=(6, 6))
    try:
        ordered: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = sorted(g.edges)
        nx.draw_networkx_nodes(g, pos, nodelist=sorted(g.nodes), node_size=8, node_color="#333333", ax=ax)
        nx.draw_networkx_edges(
            g, pos, edgelist=ordered, edge_color=[palette[g.edges[e]["colour"]] for e in ordered], width=1.6, ax=ax
        )
        ax.set_title(title)
        ax.set_aspect("equal")
        ax.axis("off")
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
        return buf.getvalue()
    finally:
        plt.close(fig)
