"""
Brute-force checks of colourings on finite windows.

Everything here is recomputed from scratch with networkx and never trusts the
engines' own bookkeeping.
"""

from collections import Counter
from typing import Any, Dict, Hashable, Iterable, List, Mapping, Optional, Protocol, Sequence, Set, Tuple, Union

import networkx as nx
from mcp.server.fastmcp.utilities.logging import get_logger
from pydantic import BaseModel, ConfigDict, Field

from ..abelian import CoordinateBox, GroupElement
from ..colouring import Colouring, ComponentTrace, EdgeColouring, EdgeRef
from ..colouring.edges import Colour, Edge, Vertex
from ..covering.grid import GridBox
from ..errors import BudgetExceeded, HamiltonError, NotTwoRegular

logger = get_logger(__name__)

Window = Union[GridBox, CoordinateBox, Iterable[Vertex]]


class WindowComponent(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str
    vertices: Tuple[Any, ...]
    edges: int
    touches_boundary: bool


class WindowReport(BaseModel):
    window: str
    colours: List[Any] = Field(default_factory=list)
    degrees: Dict[str, Dict[int, int]] = Field(default_factory=dict)
    components: Dict[str, List[WindowComponent]] = Field(default_factory=dict)
    boundary_edges: Dict[str, int] = Field(default_factory=dict)
    violations: List[str] = Field(default_factory=list)
    inconclusive: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {
            "window": self.window,
            "colours": [str(c) for c in self.colours],
            "violations": len(self.violations),
            "inconclusive": len(self.inconclusive),
            "ok": self.ok,
        }

    def lines(self) -> List[str]:
        out = [f"window {self.window}"]
        for key in sorted(self.components):
            comps = self.components[key]
            paths = sum(1 for comp in comps if comp.kind == "path")
            cycles = sum(1 for comp in comps if comp.kind == "cycle")
            out.append(f"colour {key}: {paths} paths, {cycles} cycles, {self.boundary_edges.get(key, 0)} boundary edges")
        out.extend(f"violation {v}" for v in self.violations)
        out.extend(f"inconclusive {v}" for v in self.inconclusive)
        out.append("ok" if self.ok else "FAILED")
        return out


def window_vertices(c: EdgeColouring, W: Window) -> List[Vertex]:
    if isinstance(W, CoordinateBox):
        return list(W.vertices())
    if isinstance(W, GridBox):
        assert isinstance(c, Colouring)
        return list(W.vertices(c.S))
    return list(dict.fromkeys(W))


def window_name(W: Window) -> str:
    if isinstance(W, CoordinateBox):
        return W.render()
    if isinstance(W, GridBox):
        return f"grid({W.n},{W.m}) at {W.center}"
    return "vertex set"


def colour_graph(c: EdgeColouring, vertices: Sequence[Vertex], colour: Colour) -> Tuple[nx.Graph, int]:
    """The ``colour`` subgraph induced on ``vertices`` and the number of edges leaving it."""
    inside = set(vertices)
    g = nx.Graph()
    g.add_nodes_from(vertices)
    leaving = 0
    for v in vertices:
        for e in c.incident_edges(v, colour):
            w = c.other_end(e, v)
            if w in inside:
                g.add_edge(v, w, edge=e)
            else:
                leaving += 1
    return g, leaving


def brute_force_components(c: EdgeColouring, W: Window, colour: Colour) -> List[WindowComponent]:
    vertices = window_vertices(c, W)
    inside = set(vertices)
    g, _ = colour_graph(c, vertices, colour)
    out = []
    for comp in sorted(nx.connected_components(g), key=lambda cc: min(cc)):
        sub = g.subgraph(comp)
        is_cycle = sub.number_of_nodes() > 2 and all(d == 2 for _, d in sub.degree())
        boundary = any(
            c.other_end(e, v) not in inside for v in comp for e in c.incident_edges(v, colour)
        )
        out.append(
            WindowComponent(
                kind="cycle" if is_cycle else "path",
                vertices=tuple(sorted(comp)),
                edges=sub.number_of_edges(),
                touches_boundary=boundary,
            )
        )
    return out


def _near(c: EdgeColouring, v: Vertex, inside: Set[Vertex], margin: int) -> bool:
    """True if some vertex within ``margin`` steps of ``v`` lies outside ``inside``."""
    frontier = {v}
    seen = {v}
    for _ in range(margin):
        step = set()
        for u in frontier:
            for col in c.colours():
                for e in c.incident_edges(u, col):
                    w = c.other_end(e, u)
                    if w not in inside:
                        return True
                    if w not in seen:
                        seen.add(w)
                        step.add(w)
        frontier = step
    return False


def window_report(c: EdgeColouring, W: Window, colours: Optional[Sequence[Colour]] = None) -> WindowReport:
    """Degree histograms and components of every colour class on ``W``."""
    vertices = window_vertices(c, W)
    inside = set(vertices)
    colours = list(colours if colours is not None else c.colours())
    report = WindowReport(window=window_name(W), colours=colours)
    for col in colours:
        key = str(col)
        g, leaving = colour_graph(c, vertices, col)
        report.degrees[key] = dict(sorted(Counter(d for _, d in g.degree()).items()))
        report.components[key] = brute_force_components(c, vertices, col)
        report.boundary_edges[key] = leaving
        for comp in report.components[key]:
            if comp.touches_boundary and any(_near(c, v, inside, 2) for v in comp.vertices if c.touching(v)):
                report.inconclusive.append(f"colour {col} component at {comp.vertices[0]} has exceptional edges near the boundary")
        for v in vertices:
            k = len(c.incident_edges(v, col))
            if k != 2:
                report.violations.append(f"vertex {v} has {k} edges of colour {col}")
    return report


def _components_are_rays(c: EdgeColouring, vertices: Iterable[Vertex], label: str, report: WindowReport, budget_factor: int) -> None:
    for col in c.colours():
        found: List[ComponentTrace] = []
        for v in sorted(vertices):
            if any(t.contains(v) for t in found):
                continue
            try:
                trace = c.trace(v, col, budget_factor=budget_factor)
            except (BudgetExceeded, NotTwoRegular) as exc:
                report.violations.append(f"{label}: colour {col} at {v}: {exc}")
                continue
            found.append(trace)
            if trace.is_cycle:
                report.violations.append(f"{label}: colour {col} component of {v} is a finite cycle of length {len(trace.edges)}")


def verify_colouring(
    c: EdgeColouring, window: Optional[Window] = None, budget_factor: int = 4, listed: Optional[int] = None
) -> WindowReport:
    """Almost-standard re-check: minimal overlay, 2-regular colours at every exceptional
    endpoint, and only double-rays through the exceptional region.

    ``listed`` is the number of overlay entries the source text declared; any entry the
    canonical overlay dropped was a standard colour stored as an exception.
    """
    report = window_report(c, window) if window is not None else WindowReport(window="exceptional region", colours=list(c.colours()))
    if listed is not None and listed != len(c):
        report.violations.append(f"overlay lists {listed} entries but only {len(c)} differ from the standard colouring")
    region = c.exceptional_vertices()
    for v in sorted(region):
        for col in c.colours():
            k = len(c.incident_edges(v, col))
            if k != 2:
                report.violations.append(f"vertex {v} has {k} edges of colour {col}")
    if not report.violations:
        _components_are_rays(c, region, "almost-standard", report, budget_factor)
    return report


def _edges_inside(c: Colouring, X: Set[GroupElement]) -> Iterable[EdgeRef]:
    for x in sorted(X):
        for k in c.S.indices():
            e = EdgeRef(x, k)
            if c.endpoints(e)[1] in X:
                yield e


def verify_covering(c: Colouring, c_hat: Colouring, X: Iterable[GroupElement], i: int, budget_factor: int = 4) -> WindowReport:
    """Check the covering conclusions for ``c_hat`` against its input ``c``."""
    X = {c.spec.normalize(x) for x in X}
    report = WindowReport(window="covering", colours=list(c_hat.colours()))
    for e in _edges_inside(c, X):
        if c.colour_of(e) != c_hat.colour_of(e):
            report.violations.append(f"(a) edge {e} inside X changed colour")
    common: Optional[ComponentTrace] = None
    for x in sorted(X):
        if common is not None and common.contains(x):
            continue
        try:
            trace = c_hat.trace(x, i, budget_factor=budget_factor)
        except HamiltonError as exc:
            report.violations.append(f"(b) colour {i} at {x}: {exc}")
            continue
        if not trace.is_double_ray:
            report.violations.append(f"(b) colour {i} component of {x} is not a double-ray")
        elif common is None:
            common = trace
        else:
            report.violations.append(f"(b) {x} is on a different colour {i} component")
    changed: Set[GroupElement] = set()
    for e in set(c.exceptional) | set(c_hat.exceptional):
        if c.colour_of(e) != c_hat.colour_of(e):
            changed.update(c_hat.endpoints(e))
    for v in sorted(c_hat.exceptional_vertices()):
        for col in c_hat.colours():
            k = len(c_hat.incident_edges(v, col))
            if k != 2:
                report.violations.append(f"(d) vertex {v} has {k} edges of colour {col}")
    if not report.violations:
        _components_are_rays(c_hat, changed, "(c)", report, budget_factor)
    logger.debug("covering check: %d changed vertices, %d violations", len(changed), len(report.violations))
    return report


class DecompositionView(Protocol):
    """What ``verify_decomposition_window`` needs from a running session."""

    def window_edges(self, W: Any) -> List[Tuple[Edge, Optional[Colour]]]: ...

    def window_vertex_list(self, W: Any) -> List[Vertex]: ...

    def edge_endpoints(self, e: Edge) -> Tuple[Vertex, Vertex]: ...

    def current_paths(self) -> Mapping[Colour, Sequence[Vertex]]: ...

    def colour_labels(self) -> Sequence[Colour]: ...


def verify_decomposition_window(session: DecompositionView, W: Any) -> WindowReport:
    """Each window edge has exactly one colour, every colour class is a union of paths
    on the window, and the current paths are edge-disjoint and agree with the colouring."""
    edges = session.window_edges(W)
    vertices = session.window_vertex_list(W)
    colours = list(session.colour_labels())
    name = window_name(W) if isinstance(W, (CoordinateBox, GridBox)) else str(W)
    report = WindowReport(window=name, colours=colours)
    seen: Dict[Edge, Optional[Colour]] = {}
    graphs: Dict[Hashable, nx.Graph] = {col: nx.Graph() for col in colours}
    for e, col in edges:
        if e in seen:
            report.violations.append(f"edge {e} listed twice")
            continue
        seen[e] = col
        if col not in graphs:
            report.violations.append(f"edge {e} has no valid colour ({col})")
            continue
        graphs[col].add_edge(*session.edge_endpoints(e))
    for col, g in graphs.items():
        key = str(col)
        g.add_nodes_from(vertices)
        report.degrees[key] = dict(sorted(Counter(d for _, d in g.degree()).items()))
        if any(d > 2 for _, d in g.degree()):
            report.violations.append(f"colour {col} has a vertex of degree > 2")
        cycles = nx.cycle_basis(g)
        if cycles:
            report.violations.append(f"colour {col} closes a cycle of length {len(cycles[0])} inside the window")
    used: Dict[frozenset, Colour] = {}
    window = set(vertices)
    for col, path in session.current_paths().items():
        for u, v in zip(path, path[1:]):
            if u not in window or v not in window:
                continue
            key = frozenset((u, v))
            if key in used and used[key] != col:
                report.violations.append(f"paths of colours {used[key]} and {col} share the edge {u}-{v}")
            used[key] = col
            if not graphs.get(col, nx.Graph()).has_edge(u, v):
                report.violations.append(f"path of colour {col} uses {u}-{v}, which is not coloured {col}")
        if window <= set(path):
            continue
        report.inconclusive.append(f"path of colour {col} does not yet cover the window")
    return report
