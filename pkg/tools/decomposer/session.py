"""
Driver for Hamilton decompositions of one-ended abelian Cayley graphs.

Each step grows the exhaustion set, runs the covering engine for the next colour in
round-robin order and extends that colour's current path through the covering
double-ray. The colouring only ever changes outside the current exhaustion set, so
every finished window is final.
"""

import re
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple, Union

from mcp.server.fastmcp.utilities.logging import get_logger
from pydantic import BaseModel, ConfigDict

from ..abelian import CoordinateBox, GeneratorSet, GroupElement, box_spiral
from ..colouring import Colouring, ComponentTrace, EdgeRef
from ..colouring.edges import Vertex
from ..colouring.serialize import dump_edges, header_lines, parse_edges, parse_header
from ..covering import GridBox, cover_with_report
from ..errors import EnumerationExhausted, InvariantViolation, NotOneEnded, ParseError, WindowNotStable

logger = get_logger(__name__)

Path = Tuple[GroupElement, ...]
Window = Union[CoordinateBox, GridBox, Iterable[GroupElement]]

_BOX = re.compile(r"\[(-?\d+),(-?\d+)\]")


class StepReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    colour: int
    box: str
    x_size: int
    switched: int
    exceptional: int
    path_start: GroupElement
    path_end: GroupElement
    path_length: int
    n1: int


def _changed_edges(before: Colouring, after: Colouring) -> List[EdgeRef]:
    keys = set(before.exceptional) | set(after.exceptional)
    return sorted(e for e in keys if before.colour_of(e) != after.colour_of(e))


def extend_path(
    trace: ComponentTrace,
    cover: Iterable[Vertex],
    prev: Optional[Sequence[Vertex]] = None,
    cover_condition: int = 3,
    extend_condition: int = 4,
) -> Tuple[Vertex, ...]:
    """Shortest stretch of a double-ray holding ``cover`` and ``prev``, one edge longer
    at each end, oriented like ``prev``."""
    if not trace.is_double_ray:
        raise InvariantViolation(f"colour {trace.colour} component is a finite cycle", condition=cover_condition)
    needed = set(cover) | set(prev or ())
    positions = [trace.position_of(v) for v in needed]
    if None in positions:
        raise InvariantViolation(f"colour {trace.colour} double-ray misses a required vertex", condition=cover_condition)
    lo, hi = min(positions) - 1, max(positions) + 1  # type: ignore[type-var]
    path = tuple(trace.vertex_at(p) for p in range(lo, hi + 1))
    if prev and len(prev) > 1:
        pp = [trace.position_of(v) for v in prev]
        steps = {b - a for a, b in zip(pp, pp[1:])}  # type: ignore[operator]
        if steps not in ({1}, {-1}):
            raise InvariantViolation(
                f"previous colour {trace.colour} path is not a stretch of the new double-ray", condition=extend_condition
            )
        if steps == {-1}:
            path = path[::-1]
    if prev and (path[0] in prev or path[-1] in prev):
        raise InvariantViolation(f"colour {trace.colour} path does not extend at both ends", condition=extend_condition)
    return path


class Session:
    """A running decomposition. Single owner; reports and colourings are immutable."""

    def __init__(
        self,
        S: GeneratorSet,
        enumeration: Optional[Iterable[Sequence[int]]] = None,
        max_search: int = 20000,
        budget_factor: int = 4,
    ):
        if not S.spec.one_ended:
            raise NotOneEnded(f"{S.spec.render()} has free rank {S.spec.free_rank}; a decomposition needs rank >= 2")
        self.S = S
        self.spec = S.spec
        self.policy = "box-spiral" if enumeration is None else "custom"
        self._source: Iterator[Sequence[int]] = iter(enumeration if enumeration is not None else box_spiral(S.spec))
        self._order: List[GroupElement] = []
        self.max_search = max_search
        self.budget_factor = budget_factor
        self.colouring = Colouring.standard(S)
        self.n = 0
        self.box: Optional[CoordinateBox] = None
        self.paths: Dict[int, Path] = {}
        self.history: List[StepReport] = []
        self._x: Set[GroupElement] = {self.vertex(0)}

    @property
    def s(self) -> int:
        return self.S.size

    def vertex(self, n: int) -> GroupElement:
        """``v_n`` of the enumeration."""
        while len(self._order) <= n:
            try:
                nxt = next(self._source)
            except StopIteration:
                raise EnumerationExhausted(f"enumeration stops at {len(self._order)} vertices, before v_{n}") from None
            self._order.append(self.spec.normalize(nxt))
        return self._order[n]

    def colour_for(self, n: int) -> int:
        return (n - 1) % self.s + 1

    @property
    def X(self) -> Set[GroupElement]:
        return self._x

    @property
    def latest(self) -> Path:
        if self.n == 0:
            return (self.vertex(0),)
        return self.paths[self.colour_for(self.n)]

    # -- stepping ------------------------------------------------------------------

    def _check_paths(self, c: Colouring) -> None:
        for col, path in self.paths.items():
            for u, v in zip(path, path[1:]):
                if not any(c.other_end(e, u) == v for e in c.incident_edges(u, col)):
                    raise InvariantViolation(f"edge {u}-{v} of the colour {col} path lost its colour", condition=5)

    def step(self) -> StepReport:
        m = self.n + 1
        colour = self.colour_for(m)
        v_next = self.vertex(m)
        required = set(self._x) | {v_next} | set(self.latest)
        box = CoordinateBox.hull(self.spec, required, margin=1)
        X = set(box.vertices())
        if not required <= X:
            raise InvariantViolation("exhaustion box misses a required vertex", condition=1)
        before = self.colouring
        result = cover_with_report(before, X, colour, max_search=self.max_search, budget_factor=self.budget_factor)
        after = result.colouring
        changed = _changed_edges(before, after)
        for e in changed:
            if all(v in X for v in after.endpoints(e)):
                raise InvariantViolation(f"edge {e} inside X_{m} changed colour", condition=5)
        prev = self.paths.get(colour)
        trace = after.trace(min(X), colour, budget_factor=self.budget_factor)
        path = extend_path(trace, X, prev)
        if not X <= set(path):
            raise InvariantViolation(f"path of colour {colour} misses X_{m}", condition=3)
        self.colouring = after
        self.box = box
        self._x = X
        self.paths[colour] = path
        self.n = m
        self._check_paths(after)
        report = StepReport(
            n=m,
            colour=colour,
            box=box.render(),
            x_size=len(X),
            switched=len(changed),
            exceptional=len(after),
            path_start=path[0],
            path_end=path[-1],
            path_length=len(path) - 1,
            n1=result.plan.n1,
        )
        self.history.append(report)
        logger.info("step %d: colour %d, box %s, %d edges switched, path of %d edges", m, colour, report.box, len(changed), report.path_length)
        return report

    def run(self, steps: int) -> List[StepReport]:
        return [self.step() for _ in range(steps)]

    # -- windows -------------------------------------------------------------------

    def window_vertex_list(self, W: Window) -> List[GroupElement]:
        if isinstance(W, CoordinateBox):
            return list(W.vertices())
        if isinstance(W, GridBox):
            return list(W.vertices(self.S))
        return [self.spec.normalize(v) for v in W]

    def stable_window(self, W: Window) -> List[Tuple[EdgeRef, int]]:
        """The limit colouring on ``W``, once ``W`` lies inside the exhaustion set."""
        vertices = self.window_vertex_list(W)
        inside = set(vertices)
        missing = [v for v in vertices if v not in self._x]
        if missing:
            raise WindowNotStable(f"{len(missing)} window vertices lie outside X_{self.n}; step further")
        out = []
        for v in sorted(inside):
            for k in self.S.indices():
                e = EdgeRef(v, k)
                if self.colouring.endpoints(e)[1] in inside:
                    out.append((e, self.colouring.colour_of(e)))
        return out

    window_edges = stable_window

    def edge_endpoints(self, e: EdgeRef) -> Tuple[GroupElement, GroupElement]:
        return self.colouring.endpoints(e)

    def current_paths(self) -> Mapping[int, Path]:
        return dict(self.paths)

    def colour_labels(self) -> List[int]:
        return list(self.S.indices())

    # -- checkpoints -----------------------------------------------------------------

    def checkpoint(self) -> str:
        """Text form: header, step counter, exhaustion box, path endpoints, overlay."""
        render = self.spec.render_element
        lines = header_lines(self.S)
        lines.append(f"enumeration {self.policy}")
        lines.append(f"step {self.n}")
        lines.append(f"box {self.box.render() if self.box is not None else 'none'}")
        for col in sorted(self.paths):
            path = self.paths[col]
            lines.append(f"path {col} {render(path[0])} {render(path[-1])}")
        lines.extend(dump_edges(self.colouring))
        return "\n".join(lines) + "\n"

    @classmethod
    def restore(
        cls,
        text: str,
        enumeration: Optional[Iterable[Sequence[int]]] = None,
        max_search: int = 20000,
        budget_factor: int = 4,
    ) -> "Session":
        S, rest = parse_header(text.splitlines())
        fields: Dict[str, str] = {}
        path_lines: List[str] = []
        edge_lines: List[str] = []
        for ln in rest:
            word, _, tail = ln.partition(" ")
            if word == "path":
                path_lines.append(tail)
            elif word == "edge":
                edge_lines.append(ln)
            elif word in ("enumeration", "step", "box"):
                fields[word] = tail.strip()
            else:
                raise ParseError(f"unexpected checkpoint line {ln!r}")
        if fields.get("enumeration") == "custom" and enumeration is None:
            raise ParseError("checkpoint was taken under a custom enumeration; pass it again to restore")
        session = cls(S, enumeration, max_search=max_search, budget_factor=budget_factor)
        session.colouring = parse_edges(S, edge_lines)
        session.n = int(fields.get("step", "0"))
        box_text = fields.get("box", "none")
        if box_text != "none":
            bounds = [(int(lo), int(hi)) for lo, hi in _BOX.findall(box_text)]
            session.box = CoordinateBox(
                spec=S.spec, lows=tuple(lo for lo, _ in bounds), highs=tuple(hi for _, hi in bounds)
            )
            session._x = set(session.box.vertices())
        for tail in path_lines:
            col_text, _, ends = tail.partition(" ")
            ends_parsed = S.spec.parse_elements(ends)
            if len(ends_parsed) != 2:
                raise ParseError(f"path line needs two endpoints: {tail!r}")
            start, end = ends_parsed
            session.paths[int(col_text)] = session._path_between(int(col_text), start, end)
        return session

    def _path_between(self, colour: int, start: GroupElement, end: GroupElement) -> Path:
        trace = self.colouring.trace(start, colour, budget_factor=self.budget_factor)
        p, q = trace.position_of(start), trace.position_of(end)
        if p is None or q is None:
            raise ParseError(f"path endpoints of colour {colour} are not on one component")
        step = 1 if q >= p else -1
        return tuple(trace.vertex_at(k) for k in range(p, q + step, step))


def new_session(
    S: GeneratorSet,
    enumeration: Optional[Iterable[Sequence[int]]] = None,
    max_search: int = 20000,
    budget_factor: int = 4,
) -> Session:
    return Session(S, enumeration, max_search=max_search, budget_factor=budget_factor)


def step(session: Session) -> StepReport:
    return session.step()


def stable_window(session: Session, W: Window) -> List[Tuple[EdgeRef, int]]:
    return session.stable_window(W)
