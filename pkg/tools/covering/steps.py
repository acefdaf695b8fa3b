"""
The frame-generic steps of a covering: cap-off, combining cycles inside each coset,
and the final absorption of the finite target cycle into a double-ray.
"""

from typing import Dict, List, Optional, Set, Tuple

from mcp.server.fastmcp.utilities.logging import get_logger
from pydantic import BaseModel, ConfigDict

from ..colouring import EdgeColouring, is_safe_layout
from ..colouring.edges import Edge, Vertex
from ..errors import AlphaNotInjective, InvariantViolation
from .frame import GridFrame
from .grid import GridSizes

logger = get_logger(__name__)

Site = Tuple[int, int, int]  # (coset, a, b)


class CapOffReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    sizes: GridSizes
    cosets: int
    right_bases: Tuple[Site, ...]
    left_bases: Tuple[Site, ...]

    @property
    def switched(self) -> int:
        return len(self.right_bases) + len(self.left_bases)


class CosetCombination(BaseModel):
    model_config = ConfigDict(frozen=True)

    coset: int
    alpha: Tuple[int, ...]
    switched: Tuple[int, ...]


class CombineReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    cosets: Tuple[CosetCombination, ...]
    ray_choices: Tuple[Optional[int], ...] = ()
    absorption: Optional[Site] = None

    @property
    def switched(self) -> int:
        return sum(len(c.switched) for c in self.cosets)


def cap_off_sites(cosets: int, sizes: GridSizes) -> Tuple[List[Site], List[Site]]:
    n1, n3 = sizes.n1, sizes.n3
    right = [(ell, n3 + 1 - 2 * q, n1 + 1 - 2 * q) for ell in range(cosets) for q in range(1, n1 + 1)]
    left = [(ell, -(n3 + 2 - 2 * q), n1 + 1 - 2 * q) for ell in range(cosets) for q in range(1, n1 + 1)]
    return right, left


def region_c(frame: GridFrame, sizes: GridSizes) -> Set[Vertex]:
    """Vertices between a pair of cap-off squares, in every coset."""
    n1, n3 = sizes.n1, sizes.n3
    out = set()
    for ell in range(frame.cosets):
        for q in range(1, n1 + 1):
            for m in (1, 2):
                b = n1 + m - 2 * q
                reach = n3 + 1 - 2 * q
                out.update(frame.point(ell, a, b) for a in range(-reach, reach + 1))
    return out


def cap_off_in(frame: GridFrame, c: EdgeColouring, sizes: GridSizes) -> Tuple[EdgeColouring, CapOffReport]:
    right, left = cap_off_sites(frame.cosets, sizes)
    out = c.switched([frame.layout(*site) for site in right + left])
    report = CapOffReport(sizes=sizes, cosets=frame.cosets, right_bases=tuple(right), left_bases=tuple(left))
    logger.info("cap-off: switched %d squares in %d cosets", report.switched, frame.cosets)
    return out, report


def combine_sites(sizes: GridSizes) -> List[Tuple[int, int]]:
    """Base points ``(a, b)`` of the squares ``T_1 .. T_{4N_1-2}`` of one coset."""
    n1, n2 = sizes.n1, sizes.n2
    sites = []
    for q in range(1, 4 * n1 - 1):
        if q <= 2 * n1 - 1:
            sites.append((n2 + 2 - 2 * q, n1 - q))
        else:
            qq = q - (2 * n1 - 1)
            sites.append((-(n2 + 3 - 2 * qq), n1 - qq))
    return sites


def alpha_values(frame: GridFrame, c: EdgeColouring, ell: int, sizes: GridSizes, budget_factor: int = 4) -> List[int]:
    """``ran(alpha)``: for each target cycle through some ``e_q``, the least such ``q``."""
    sites = combine_sites(sizes)
    index: Dict[Edge, int] = {frame.target_edge(ell, a, b): q for q, (a, b) in enumerate(sites, start=1)}
    claimed: Set[Edge] = set()
    alpha = []
    for q, (a, b) in enumerate(sites, start=1):
        e = frame.target_edge(ell, a, b)
        if e in claimed:
            continue
        trace = c.trace(c.endpoints(e)[0], frame.target, budget_factor=budget_factor)
        if not trace.is_cycle:
            raise InvariantViolation(f"target component through e_{q} of coset {ell} is not a finite cycle", condition=2)
        hits = [index[f] for f in trace.edges if f in index]
        if min(hits) != q:
            raise AlphaNotInjective(f"cycle through e_{q} of coset {ell} also holds e_{min(hits)}")
        claimed.update(f for f in trace.edges if f in index)
        alpha.append(q)
        logger.debug("coset %d: cycle of length %d gets alpha %d", ell, len(trace.edges), q)
    return alpha


def combine_cycles_in(
    frame: GridFrame, c: EdgeColouring, sizes: GridSizes, budget_factor: int = 4
) -> Tuple[EdgeColouring, CombineReport]:
    sites = combine_sites(sizes)
    done = []
    for ell in range(frame.cosets):
        alpha = alpha_values(frame, c, ell, sizes, budget_factor)
        chosen = [q for q in alpha if q != 1]
        c = c.switched([frame.layout(ell, *sites[q - 1]) for q in chosen])
        done.append(CosetCombination(coset=ell, alpha=tuple(alpha), switched=tuple(chosen)))
        logger.info("combine cycles: coset %d had %d cycles, switched %d squares", ell, len(alpha), len(chosen))
    return c, CombineReport(cosets=tuple(done))


def absorb_in(frame: GridFrame, c: EdgeColouring, sizes: GridSizes) -> Tuple[EdgeColouring, Site]:
    """Switch the square at ``x_0 + (N_1-2)*g_target + N_1*g_partner``."""
    site = (0, sizes.n1 - 2, sizes.n1)
    layout = frame.layout(*site)
    if not c.is_standard_layout(layout):
        raise InvariantViolation(f"absorption square at {site} is not standard")
    if not is_safe_layout(c, layout):
        raise InvariantViolation(f"absorption square at {site} is not safe")
    logger.info("absorption square switched at %s", site)
    return c.switched([layout]), site
