"""
Planning a covering: coset path, reserved rays and grid sizes, all chosen before the
colouring is touched.
"""

from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple

from mcp.server.fastmcp.utilities.logging import get_logger
from pydantic import BaseModel, ConfigDict

from ..abelian import (
    CosetIndex,
    CosetPath,
    GroupElement,
    build_coset_path,
    grid_coordinates,
    in_grid,
    is_free_rank_two,
    line_key,
    partner_generator,
)
from ..colouring import Colouring, EdgeRef, Square, is_standard_double_ray
from ..errors import InvariantViolation, NotAlmostStandard, SpecMismatch
from .grid import GridSizes

logger = get_logger(__name__)


class ReservedRay(BaseModel):
    """The standard ``gen``-double-ray through ``base``, crossing coset edge ``ell``."""

    model_config = ConfigDict(frozen=True)

    ell: int
    base: GroupElement
    gen: int
    family: int
    offset: int


class RayReservation(BaseModel):
    model_config = ConfigDict(frozen=True)

    target: int
    rays: Tuple[Tuple[ReservedRay, ...], ...] = ()

    def square(self, ray: ReservedRay) -> Square:
        return Square(ray.base, (self.target, ray.gen))

    def crossing_edge(self, ray: ReservedRay) -> EdgeRef:
        return EdgeRef(ray.base, ray.gen)

    def squares(self) -> List[Square]:
        return [self.square(r) for row in self.rays for r in row]

    def __len__(self) -> int:
        return sum(len(row) for row in self.rays)


class CoveringPlan(BaseModel):
    model_config = ConfigDict(frozen=True)

    target: int
    partner: int
    coset_path: CosetPath
    sizes: GridSizes
    reservation: RayReservation

    @property
    def n0(self) -> int:
        return self.sizes.n0

    @property
    def n1(self) -> int:
        return self.sizes.n1

    @property
    def n2(self) -> int:
        return self.sizes.n2

    @property
    def n3(self) -> int:
        return self.sizes.n3

    @property
    def t(self) -> int:
        return self.coset_path.t

    def relabelling(self, generators: int) -> Dict[int, int]:
        """Original colour -> engine colour, with the target as 1 and its partner as 2."""
        rest = [k for k in range(1, generators + 1) if k not in (self.target, self.partner)]
        order = [self.target, self.partner, *rest]
        return {k: pos for pos, k in enumerate(order, start=1)}


def check_almost_standard(c: Colouring) -> None:
    for v in sorted(c.exceptional_vertices()):
        for col in c.colours():
            count = len(c.incident_edges(v, col))
            if count != 2:
                raise NotAlmostStandard(f"{c.spec.render_element(v)} has {count} edges of colour {col}")


def _by_size(limit: int) -> Iterator[int]:
    yield 0
    for m in range(1, limit + 1):
        yield m
        yield -m


class _Grids:
    """Grid coordinates relative to the coset representatives of a path."""

    def __init__(self, c: Colouring, path: CosetPath, target: int, partner: int):
        self.spec = c.spec
        self.gt, self.gp = c.S.gen(target), c.S.gen(partner)
        self.index = CosetIndex(self.spec, (self.gt, self.gp))
        self.rep_of = {self.index.key(x): x for x in path.representatives}

    def coords(self, v: GroupElement, rep: Optional[GroupElement] = None) -> Optional[Tuple[int, int]]:
        if rep is None:
            rep = self.rep_of.get(self.index.key(v))
            if rep is None:
                return None
        return grid_coordinates(self.spec, self.gt, self.gp, self.spec.sub(v, rep))

    def inside(self, v: GroupElement, reps: Iterable[GroupElement], n: int) -> bool:
        for rep in reps:
            ab = self.coords(v, rep)
            if ab is not None and in_grid(ab[0], ab[1], n, n):
                return True
        return False


def reserve_rays(c: Colouring, coset_path: CosetPath, target: int, partner: int) -> RayReservation:
    """``t`` standard double-rays per coset edge, with edge-disjoint squares off the N0-grids."""
    t = coset_path.t
    if t == 0:
        return RayReservation(target=target)
    spec = c.spec
    grids = _Grids(c, coset_path, target, partner)
    taken_lines: Dict[int, Set[GroupElement]] = {}
    taken_edges: Set[EdgeRef] = set()
    limit = 2 * (coset_path.n0 + 2) + 4 * t + 2 * len(c.exceptional_vertices()) + 32
    reps = coset_path.representatives
    rows = []
    for ell in range(1, t + 1):
        n = coset_path.edge_generators[ell - 1]
        gn = c.S.gen(n)
        origin = reps[ell - 1] if coset_path.edge_signs[ell - 1] == 1 else reps[ell]
        family = 1 if is_free_rank_two(spec, grids.gt, gn) else 2
        step = grids.gt if family == 1 else grids.gp
        ends = (reps[ell - 1], reps[ell])
        lines = taken_lines.setdefault(n, set())
        chosen: List[ReservedRay] = []
        for m in _by_size(limit):
            y = spec.add(origin, spec.scale(step, m))
            sq = Square(y, (target, n))
            if any(grids.inside(v, ends, coset_path.n0) for v in c.square_vertices(sq)):
                continue
            own = {line_key(spec, gn, y)[0], line_key(spec, gn, spec.add(y, grids.gt))[0]}
            if own & lines:
                continue
            edges = set(c.layout(sq).edges)
            if edges & taken_edges:
                continue
            if not c.is_standard_square(sq) or not is_standard_double_ray(c, y, n):
                continue
            lines.update(own)
            taken_edges.update(edges)
            chosen.append(ReservedRay(ell=ell, base=y, gen=n, family=family, offset=m))
            if len(chosen) == t:
                break
        if len(chosen) < t:
            raise InvariantViolation(f"found only {len(chosen)} of {t} standard rays for coset edge {ell}")
        rows.append(tuple(chosen))
    return RayReservation(target=target, rays=tuple(rows))


def choose_n1(c: Colouring, coset_path: CosetPath, reservation: RayReservation, target: int, partner: int) -> int:
    """Least ``N_1`` holding every reserved square in ``P + Grid(N_1-3, N_1-3)`` whose
    absorption columns and row are standard."""
    spec = c.spec
    grids = _Grids(c, coset_path, target, partner)
    need = max(coset_path.n0 + 1, 4)
    for sq in reservation.squares():
        for v in c.square_vertices(sq):
            ab = grids.coords(v)
            if ab is None:
                raise InvariantViolation(f"reserved square vertex {v} is off the coset path")
            a, b = ab
            need = max(need, max(abs(a), b, 1 - b) + 3)
    x0 = coset_path.representatives[0]
    for n1 in range(need, need + coset_path.n0 + 16):
        column = spec.add(x0, spec.scale(grids.gt, n1 - 2))
        if (
            is_standard_double_ray(c, column, partner)
            and is_standard_double_ray(c, spec.add(column, grids.gt), partner)
            and is_standard_double_ray(c, spec.combine(column, ((n1 + 1, grids.gp),)), target)
        ):
            return n1
    raise InvariantViolation("no feasible N1: absorption columns stay exceptional")


def plan(c: Colouring, X: Iterable[GroupElement], i: int, max_search: int = 20000) -> CoveringPlan:
    S = c.S
    if i not in S.indices():
        raise SpecMismatch(f"colour {i} is not one of 1..{S.size}")
    check_almost_standard(c)
    partner = partner_generator(S, i)
    points = {S.spec.normalize(x) for x in X}
    points.update(c.exceptional_vertices())
    path = build_coset_path(S, (i, partner), points, max_search=max_search)
    reservation = reserve_rays(c, path, i, partner)
    n1 = choose_n1(c, path, reservation, i, partner)
    sizes = GridSizes.from_n1(path.n0, n1)
    logger.info(
        "plan: target %d partner %d, t=%d, N0=%d N1=%d N2=%d N3=%d",
        i,
        partner,
        path.t,
        sizes.n0,
        sizes.n1,
        sizes.n2,
        sizes.n3,
    )
    return CoveringPlan(target=i, partner=partner, coset_path=path, sizes=sizes, reservation=reservation)
