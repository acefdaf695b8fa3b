"""
Edge colourings stored as a finite overlay on a standard colouring.

A subclass describes the graph: how edges meet vertices, which colour each edge has
in the standard colouring, and how every standard colour class splits into lines.
This base class does the rest: lookups, colour switching and component walks that end
either by closing up or by certifying two exceptional-free standard tails.
"""

from abc import ABC, abstractmethod
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import (
    Any,
    Dict,
    Hashable,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
    TypeVar,
)

from mcp.server.fastmcp.utilities.logging import get_logger

from ..errors import BudgetExceeded, InvariantViolation, NotStandardSquare, NotTwoRegular
from .edges import Colour, Edge, SquareLayout, Vertex

logger = get_logger(__name__)

Self = TypeVar("Self", bound="EdgeColouring")


class TraceKind(str, Enum):
    CYCLE = "cycle"
    DOUBLE_RAY = "double_ray"


@dataclass(frozen=True)
class TailCertificate:
    """Every vertex ``line(anchor_pos + direction*d)``, ``d >= 0``, is free of exceptional edges."""

    colour: Colour
    line: Hashable
    anchor: Vertex
    anchor_pos: int
    direction: int

    def offset(self, c: "EdgeColouring", v: Vertex) -> Optional[int]:
        key, pos = c.line_of(v, self.colour)
        if key != self.line:
            return None
        d = (pos - self.anchor_pos) * self.direction
        return d if d >= 0 else None

    def vertex_at(self, c: "EdgeColouring", d: int) -> Vertex:
        return c.point_on_line(self.colour, self.line, self.anchor_pos + self.direction * d)

    def check(self, c: "EdgeColouring") -> bool:
        """Re-derive the certificate from scratch against every exceptional endpoint."""
        for e in c.exceptional:
            for x in c.endpoints(e):
                key, pos = c.line_of(x, self.colour)
                if key == self.line and (pos - self.anchor_pos) * self.direction >= 0:
                    return False
        return True


@dataclass(frozen=True)
class ComponentTrace:
    kind: TraceKind
    colour: Colour
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    tails: Tuple[TailCertificate, ...] = ()
    origin: int = 0
    colouring: Any = field(default=None, repr=False, compare=False)
    _index: Dict[Vertex, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        body = self.vertices[:-1] if self.is_cycle else self.vertices
        self._index.update({v: k for k, v in enumerate(body)})

    @property
    def is_cycle(self) -> bool:
        return self.kind is TraceKind.CYCLE

    @property
    def is_double_ray(self) -> bool:
        return self.kind is TraceKind.DOUBLE_RAY

    def vertex_set(self) -> Set[Vertex]:
        """All vertices of a cycle; the finite middle of a double-ray."""
        return set(self._index)

    def position_of(self, v: Vertex) -> Optional[int]:
        k = self._index.get(v)
        if k is not None:
            return k - self.origin
        if self.is_cycle:
            return None
        back, front = self.tails
        d = front.offset(self.colouring, v)
        if d is not None:
            return len(self.vertices) - 1 - self.origin + d
        d = back.offset(self.colouring, v)
        if d is not None:
            return -self.origin - d
        return None

    def contains(self, v: Vertex) -> bool:
        return self.position_of(v) is not None

    def vertex_at(self, p: int) -> Vertex:
        if self.is_cycle:
            return self.vertices[p % (len(self.vertices) - 1)]
        k = p + self.origin
        if 0 <= k < len(self.vertices):
            return self.vertices[k]
        back, front = self.tails
        if k >= len(self.vertices):
            return front.vertex_at(self.colouring, k - (len(self.vertices) - 1))
        return back.vertex_at(self.colouring, -k)

    def subpath(self, vertices: Iterable[Vertex]) -> Tuple[Vertex, ...]:
        """Shortest stretch of a double-ray containing ``vertices``."""
        if self.is_cycle:
            raise ValueError("subpath is defined on double-rays only")
        positions = []
        for v in vertices:
            p = self.position_of(v)
            if p is None:
                raise ValueError(f"{v} is not on this component")
            positions.append(p)
        if not positions:
            return ()
        return tuple(self.vertex_at(p) for p in range(min(positions), max(positions) + 1))


class EdgeColouring(ABC):
    """Standard colouring plus a finite map of edges whose colour differs from it."""

    def __init__(self, overlay: Optional[Mapping[Edge, Colour]] = None):
        self._overlay: Dict[Edge, Colour] = {}
        for e, col in (overlay or {}).items():
            if col != self.standard_colour(e):
                self._overlay[e] = col
        self._touching: Optional[Dict[Vertex, List[Edge]]] = None
        self._lines: Dict[Colour, Dict[Hashable, List[int]]] = {}

    # -- graph description ---------------------------------------------------

    @abstractmethod
    def standard_colour(self, e: Edge) -> Colour:
        pass

    @abstractmethod
    def endpoints(self, e: Edge) -> Tuple[Vertex, Vertex]:
        pass

    @abstractmethod
    def standard_edges(self, v: Vertex, colour: Colour) -> Tuple[Edge, Edge]:
        """The standard ``colour`` edges at ``v``: forward first, backward second."""

    @abstractmethod
    def line_of(self, v: Vertex, colour: Colour) -> Tuple[Hashable, int]:
        """The standard ``colour`` line through ``v`` and the position of ``v`` on it."""

    @abstractmethod
    def point_on_line(self, colour: Colour, line: Hashable, pos: int) -> Vertex:
        pass

    @abstractmethod
    def colours(self) -> Sequence[Colour]:
        pass

    @abstractmethod
    def _spawn(self: Self, overlay: Dict[Edge, Colour]) -> Self:
        """A colouring of the same graph with an already canonical overlay."""

    @abstractmethod
    def region_diameter(self) -> int:
        """Size of the smallest box holding every exceptional endpoint."""

    @abstractmethod
    def distance_to_region(self, v: Vertex) -> int:
        pass

    # -- lookups ---------------------------------------------------------------

    @property
    def exceptional(self) -> Mapping[Edge, Colour]:
        return MappingProxyType(self._overlay)

    def __len__(self) -> int:
        return len(self._overlay)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColouring) or type(other) is not type(self):
            return NotImplemented
        return self._same_graph(other) and self._overlay == other._overlay

    __hash__ = None  # type: ignore[assignment]

    def _same_graph(self, other: "EdgeColouring") -> bool:
        return True

    def colour_of(self, e: Edge) -> Colour:
        col = self._overlay.get(e)
        return self.standard_colour(e) if col is None else col

    def other_end(self, e: Edge, v: Vertex) -> Vertex:
        a, b = self.endpoints(e)
        return b if a == v else a

    def _touching_index(self) -> Dict[Vertex, List[Edge]]:
        if self._touching is None:
            index: Dict[Vertex, List[Edge]] = {}
            for e in self._overlay:
                for x in self.endpoints(e):
                    index.setdefault(x, []).append(e)
            self._touching = index
        return self._touching

    def touching(self, v: Vertex) -> List[Edge]:
        """Exceptional edges with an endpoint at ``v``."""
        return self._touching_index().get(v, [])

    def exceptional_vertices(self) -> Set[Vertex]:
        return set(self._touching_index())

    def incident_edges(self, v: Vertex, colour: Colour) -> List[Edge]:
        out = [e for e in self.standard_edges(v, colour) if e not in self._overlay]
        out.extend(e for e in self.touching(v) if self._overlay[e] == colour)
        out.sort()
        return out

    def _line_index(self, colour: Colour) -> Dict[Hashable, List[int]]:
        index = self._lines.get(colour)
        if index is None:
            index = {}
            for x in self._touching_index():
                key, pos = self.line_of(x, colour)
                index.setdefault(key, []).append(pos)
            for positions in index.values():
                positions.sort()
            self._lines[colour] = index
        return index

    def is_standard_line(self, v: Vertex, colour: Colour) -> bool:
        """True iff the standard ``colour`` line through ``v`` is a whole ``colour`` component."""
        line = self.line_of(v, colour)[0]
        for e, col in self._overlay.items():
            if self.standard_colour(e) == colour and self.line_of(self.endpoints(e)[0], colour)[0] == line:
                return False
            if col == colour and any(self.line_of(x, colour)[0] == line for x in self.endpoints(e)):
                return False
        return True

    # -- switching -------------------------------------------------------------

    def is_standard_layout(self, layout: SquareLayout) -> bool:
        return all(
            e not in self._overlay and self.standard_colour(e) == col
            for edges, col in ((layout.i_edges, layout.i), (layout.j_edges, layout.j))
            for e in edges
        )

    def _switch_into(self, overlay: Dict[Edge, Colour], layout: SquareLayout, undo: bool) -> None:
        i, j = layout.i, layout.j
        plan = [(e, i, j) for e in layout.i_edges] + [(e, j, i) for e in layout.j_edges]
        if undo:
            plan = [(e, new, old) for e, old, new in plan]
        for e, old, _ in plan:
            current = overlay.get(e, self.standard_colour(e))
            if current != old:
                what = "switched" if undo else "standard"
                raise NotStandardSquare(f"edge {e} has colour {current}, square is not {what}")
        for e, _, new in plan:
            if new == self.standard_colour(e):
                overlay.pop(e, None)
            else:
                overlay[e] = new

    def switched(self: Self, layouts: Iterable[SquareLayout], undo: bool = False) -> Self:
        overlay = dict(self._overlay)
        for layout in layouts:
            self._switch_into(overlay, layout, undo)
        return self._spawn(overlay)

    # -- component walks ---------------------------------------------------------

    def default_budget(self, v: Vertex, factor: int = 4) -> int:
        return factor * (len(self._overlay) + 1) * (self.region_diameter() + 4) + 2 * self.distance_to_region(v)

    def _tail_from(self, v: Vertex, arrival: Edge, colour: Colour) -> Optional[TailCertificate]:
        if self.touching(v):
            return None
        forward, backward = self.standard_edges(v, colour)
        if arrival == backward:
            direction = 1
        elif arrival == forward:
            direction = -1
        else:
            return None
        key, pos = self.line_of(v, colour)
        positions = self._line_index(colour).get(key)
        if positions:
            if direction == 1 and bisect_right(positions, pos) < len(positions):
                return None
            if direction == -1 and bisect_left(positions, pos) > 0:
                return None
        return TailCertificate(colour=colour, line=key, anchor=v, anchor_pos=pos, direction=direction)

    def _pair(self, v: Vertex, colour: Colour) -> List[Edge]:
        inc = self.incident_edges(v, colour)
        if len(inc) != 2:
            raise NotTwoRegular(f"vertex {v} has {len(inc)} edges of colour {colour}")
        return inc

    def _walk(
        self, start: Vertex, first: Edge, colour: Colour, budget: int
    ) -> Tuple[List[Vertex], List[Edge], Optional[TailCertificate], int]:
        vertices: List[Vertex] = []
        edges: List[Edge] = []
        arrival = first
        cur = self.other_end(first, start)
        steps = 1
        while True:
            vertices.append(cur)
            edges.append(arrival)
            if cur == start:
                return vertices, edges, None, steps
            tail = self._tail_from(cur, arrival, colour)
            if tail is not None:
                return vertices, edges, tail, steps
            if steps >= budget:
                raise BudgetExceeded(f"walk of colour {colour} from {start} exceeded {budget} steps")
            a, b = self._pair(cur, colour)
            arrival = b if a == arrival else a
            cur = self.other_end(arrival, cur)
            steps += 1

    def trace(self, v: Vertex, colour: Colour, budget: Optional[int] = None, budget_factor: int = 4) -> ComponentTrace:
        """Walk the ``colour`` component through ``v`` in both directions."""
        if budget is None:
            budget = self.default_budget(v, budget_factor)
        first, second = self._pair(v, colour)
        fwd_vertices, fwd_edges, fwd_tail, used = self._walk(v, first, colour, budget)
        if fwd_tail is None:
            return ComponentTrace(
                kind=TraceKind.CYCLE,
                colour=colour,
                vertices=(v, *fwd_vertices),
                edges=tuple(fwd_edges),
                colouring=self,
            )
        back_vertices, back_edges, back_tail, _ = self._walk(v, second, colour, max(1, budget - used))
        if back_tail is None:
            raise InvariantViolation(f"colour {colour} component of {v} is both a cycle and a ray")
        back_vertices.reverse()
        back_edges.reverse()
        return ComponentTrace(
            kind=TraceKind.DOUBLE_RAY,
            colour=colour,
            vertices=(*back_vertices, v, *fwd_vertices),
            edges=(*back_edges, *fwd_edges),
            tails=(back_tail, fwd_tail),
            origin=len(back_vertices),
            colouring=self,
        )
