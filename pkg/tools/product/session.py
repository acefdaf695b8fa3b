"""
Hamilton decompositions of ``G x H`` from Hamilton decompositions of ``G`` and ``H``.

Step ``k`` works in the plane of colour ``f(k)``: ``R_i x S_1`` for ``("G", i)`` and
``R_1 x S_j`` for ``("H", j)``. Every such plane spans the product and is a copy of the
grid Z^2, so the covering steps run on it through a ``PlaneFrame``.
"""

from typing import Dict, List, Sequence, Tuple

from mcp.server.fastmcp.utilities.logging import get_logger
from pydantic import BaseModel, ConfigDict

from ..covering import GridSizes, absorb_in, cap_off_in, combine_cycles_in
from ..decomposer.session import extend_path
from ..errors import InvariantViolation, WindowNotStable
from .colouring import ProductColour, ProductColouring, ProductEdge, ProductVertex, render_colour
from .plane import PlaneFrame
from .rays import RayStream

logger = get_logger(__name__)

ProductPath = Tuple[ProductVertex, ...]


class ProductStepReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    colour: str
    plane: str
    m: int
    n: int
    half_width: int
    n1: int
    switched: int
    exceptional: int
    path_start: ProductVertex
    path_end: ProductVertex
    path_length: int


def round_robin(colours: Sequence[ProductColour], k: int) -> ProductColour:
    """``f(k)`` for ``k >= 1``: every colour once per ``len(colours)`` steps."""
    return colours[(k - 1) % len(colours)]


def choose_plane_n1(c: ProductColouring, frame: PlaneFrame, n0: int) -> int:
    """Least ``N_1 > N_0`` whose absorption columns and row are standard lines."""
    n1 = max(n0 + 1, 4)
    while not (
        c.is_standard_line(frame.point(0, n1 - 2, 0), frame.partner)
        and c.is_standard_line(frame.point(0, n1 - 1, 0), frame.partner)
        and c.is_standard_line(frame.point(0, n1 - 2, n1 + 1), frame.target)
    ):
        n1 += 1
    return n1


class ProductSession:
    def __init__(self, left: Sequence[RayStream], right: Sequence[RayStream], budget_factor: int = 4):
        self.colouring = ProductColouring(left, right)
        self.labels: List[ProductColour] = self.colouring.colours()
        self.budget_factor = budget_factor
        self.k = 0
        self.m_bound = 0
        self.n_bound = 0
        self.paths: Dict[ProductColour, ProductPath] = {}
        self.latest: ProductPath = ((0, 0),)
        self.history: List[ProductStepReport] = []

    def colour_for(self, k: int) -> ProductColour:
        return round_robin(self.labels, k)

    def _changed(self, before: ProductColouring, after: ProductColouring) -> List[ProductEdge]:
        keys = set(before.exceptional) | set(after.exceptional)
        return sorted(e for e in keys if before.colour_of(e) != after.colour_of(e))

    def step(self) -> ProductStepReport:
        k = self.k + 1
        colour = self.colour_for(k)
        c = self.colouring
        m_bound = max(self.n_bound + 1, max(max(v) for v in self.latest))
        n_bound = max([m_bound + 1] + [max(v) for v in c.exceptional_vertices()])
        frame = PlaneFrame(c, colour)
        w = frame.half_width(n_bound)
        sizes = GridSizes.from_n1(w + 1, choose_plane_n1(c, frame, w + 1))
        capped, _ = cap_off_in(frame, c, sizes)
        combined, _ = combine_cycles_in(frame, capped, sizes, self.budget_factor)
        after, _ = absorb_in(frame, combined, sizes)
        changed = self._changed(c, after)
        for e in changed:
            if all(max(v) <= m_bound for v in after.endpoints(e)):
                raise InvariantViolation(f"edge {e} inside [0,{m_bound}]^2 changed colour", condition=1)
        square = list(frame.square(w))
        trace = after.trace(square[0], colour, budget_factor=self.budget_factor)
        path = extend_path(trace, square, self.paths.get(colour), cover_condition=2, extend_condition=2)
        on_path = set(path)
        missing = [(g, h) for g in range(n_bound + 1) for h in range(n_bound + 1) if (g, h) not in on_path]
        if missing:
            raise InvariantViolation(f"path of colour {render_colour(colour)} misses {missing[0]}", condition=2)
        self.colouring = after
        self.k = k
        self.m_bound = m_bound
        self.n_bound = n_bound
        self.paths[colour] = path
        self.latest = path
        report = ProductStepReport(
            k=k,
            colour=render_colour(colour),
            plane=frame.name,
            m=m_bound,
            n=n_bound,
            half_width=w,
            n1=sizes.n1,
            switched=len(changed),
            exceptional=len(after),
            path_start=path[0],
            path_end=path[-1],
            path_length=len(path) - 1,
        )
        self.history.append(report)
        logger.info(
            "product step %d: colour %s in plane %s, M=%d N=%d, %d edges switched",
            k,
            report.colour,
            report.plane,
            m_bound,
            n_bound,
            len(changed),
        )
        return report

    def run(self, steps: int) -> List[ProductStepReport]:
        return [self.step() for _ in range(steps)]

    # -- windows -------------------------------------------------------------------

    def _bounds(self, W: Tuple[int, int]) -> Tuple[int, int]:
        lo, hi = W
        if lo < 0 or hi < lo:
            raise WindowNotStable(f"bad product window [{lo},{hi}]^2")
        if hi > self.n_bound:
            raise WindowNotStable(f"window [{lo},{hi}]^2 reaches past [0,{self.n_bound}]^2; step further")
        return lo, hi

    def window_vertex_list(self, W: Tuple[int, int]) -> List[ProductVertex]:
        lo, hi = self._bounds(W)
        return [(g, h) for g in range(lo, hi + 1) for h in range(lo, hi + 1)]

    def window_edges(self, W: Tuple[int, int]) -> List[Tuple[ProductEdge, ProductColour]]:
        lo, hi = self._bounds(W)
        return [(e, self.colouring.colour_of(e)) for e in self.colouring.window_edges(lo, hi)]

    def edge_endpoints(self, e: ProductEdge) -> Tuple[ProductVertex, ProductVertex]:
        return self.colouring.endpoints(e)

    def current_paths(self) -> Dict[ProductColour, ProductPath]:
        return dict(self.paths)

    def colour_labels(self) -> List[ProductColour]:
        return list(self.labels)


def product_new_session(left: Sequence[RayStream], right: Sequence[RayStream], budget_factor: int = 4) -> ProductSession:
    return ProductSession(left, right, budget_factor)


def product_step(session: ProductSession) -> ProductStepReport:
    return session.step()


def product_window(session: ProductSession, W: Tuple[int, int]) -> List[Tuple[ProductEdge, ProductColour]]:
    """The final colouring on ``[lo, hi]^2``.

    Later steps pick ``M > N`` for the current ``N``, so ``[0, N]^2`` never changes again.
    """
    return session.window_edges(W)
