"""
The covering engine: for a colouring ``c``, a finite vertex set ``X`` and a colour
``i``, build a colouring that agrees with ``c`` on the edges inside ``X`` and has a
single ``i``-coloured double-ray through all of ``X``.
"""

from typing import Any, Iterable, List, Optional, Tuple

from mcp.server.fastmcp.utilities.logging import get_logger
from pydantic import BaseModel, ConfigDict

from ..abelian import GroupElement
from ..colouring import Colouring, is_safe_square, is_standard_double_ray
from ..errors import InvariantViolation, NoFreshRay
from .frame import CayleyFrame
from .plan import CoveringPlan, plan
from .steps import CapOffReport, CombineReport, absorb_in, cap_off_in, combine_cycles_in

logger = get_logger(__name__)


class CoveringReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    plan: CoveringPlan
    cap_off: CapOffReport
    combine: CombineReport
    colouring: Any

    def summary(self) -> dict:
        return {
            "target": self.plan.target,
            "partner": self.plan.partner,
            "t": self.plan.t,
            "n0": self.plan.n0,
            "n1": self.plan.n1,
            "n2": self.plan.n2,
            "n3": self.plan.n3,
            "cap_off_switches": self.cap_off.switched,
            "combine_switches": self.combine.switched,
            "ray_choices": list(self.combine.ray_choices),
            "absorption": list(self.combine.absorption) if self.combine.absorption else None,
            "exceptional_edges": len(self.colouring),
        }


def frame_for(c: Colouring, p: CoveringPlan) -> CayleyFrame:
    return CayleyFrame(c.S, p.target, p.partner, p.coset_path.representatives)


def cap_off(c: Colouring, p: CoveringPlan) -> Tuple[Colouring, CapOffReport]:
    out, report = cap_off_in(frame_for(c, p), c, p.sizes)
    return out, report  # type: ignore[return-value]


def combine_cycles(
    c: Colouring, p: CoveringPlan, report: CapOffReport, budget_factor: int = 4
) -> Tuple[Colouring, CombineReport]:
    out, combined = combine_cycles_in(frame_for(c, p), c, p.sizes, budget_factor)
    return out, combined  # type: ignore[return-value]


def _join_cosets(c: Colouring, p: CoveringPlan, budget_factor: int) -> Tuple[Colouring, List[Optional[int]]]:
    choices: List[Optional[int]] = []
    target = p.target
    for ell, row in enumerate(p.reservation.rays, start=1):
        k = next(
            (
                k
                for k, ray in enumerate(row, start=1)
                if is_standard_double_ray(c, ray.base, ray.gen) and c.is_standard_square(p.reservation.square(ray))
            ),
            None,
        )
        if k is None:
            raise NoFreshRay(f"every reserved ray of coset edge {ell} is spoiled")
        sq = p.reservation.square(row[k - 1])
        layout = c.layout(sq)
        first, second = layout.i_edges
        cycle = c.trace(first.base, target, budget_factor=budget_factor)
        if not cycle.is_cycle:
            raise InvariantViolation(f"target edge {first} of coset edge {ell} is not on a finite cycle", condition=1)
        if second in set(cycle.edges):
            choices.append(None)
            logger.debug("coset edge %d already joined", ell)
            continue
        if not is_safe_square(c, sq):
            raise InvariantViolation(f"reserved square {sq} is not safe")
        c = c.switched([layout])
        choices.append(k)
    return c, choices


def combine_cosets_with_report(
    c: Colouring, p: CoveringPlan, report: CombineReport, budget_factor: int = 4
) -> Tuple[Colouring, CombineReport]:
    joined, choices = _join_cosets(c, p, budget_factor)
    out, site = absorb_in(frame_for(c, p), joined, p.sizes)
    logger.info("combine cosets: %d of %d coset edges needed a switch", sum(k is not None for k in choices), p.t)
    return out, report.model_copy(update={"ray_choices": tuple(choices), "absorption": site})  # type: ignore[return-value]


def combine_cosets(c: Colouring, p: CoveringPlan, report: CombineReport, budget_factor: int = 4) -> Colouring:
    return combine_cosets_with_report(c, p, report, budget_factor)[0]


def cover_with_report(
    c: Colouring, X: Iterable[GroupElement], i: int, max_search: int = 20000, budget_factor: int = 4
) -> CoveringReport:
    X = list(X)
    p = plan(c, X, i, max_search=max_search)
    c1, capped = cap_off(c, p)
    c2, combined = combine_cycles(c1, p, capped, budget_factor)
    c3, combined = combine_cosets_with_report(c2, p, combined, budget_factor)
    return CoveringReport(plan=p, cap_off=capped, combine=combined, colouring=c3)


def cover(c: Colouring, X: Iterable[GroupElement], i: int, max_search: int = 20000, budget_factor: int = 4) -> Colouring:
    """Recolour ``c`` so that some ``i``-component of the result covers ``X``."""
    return cover_with_report(c, X, i, max_search, budget_factor).colouring
