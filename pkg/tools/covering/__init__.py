"""
The covering engine and its grid frames.
"""

from .engine import (
    CoveringReport,
    cap_off,
    combine_cosets,
    combine_cosets_with_report,
    combine_cycles,
    cover,
    cover_with_report,
    frame_for,
)
from .frame import CayleyFrame, GridFrame
from .grid import GridBox, GridSizes
from .plan import CoveringPlan, RayReservation, ReservedRay, check_almost_standard, choose_n1, plan, reserve_rays
from .steps import (
    CapOffReport,
    CombineReport,
    CosetCombination,
    absorb_in,
    alpha_values,
    cap_off_in,
    cap_off_sites,
    combine_cycles_in,
    combine_sites,
    region_c,
)

__all__ = [
    "CapOffReport",
    "CayleyFrame",
    "CombineReport",
    "CosetCombination",
    "CoveringPlan",
    "CoveringReport",
    "GridBox",
    "GridFrame",
    "GridSizes",
    "RayReservation",
    "ReservedRay",
    "absorb_in",
    "alpha_values",
    "cap_off",
    "cap_off_in",
    "cap_off_sites",
    "check_almost_standard",
    "choose_n1",
    "combine_cosets",
    "combine_cosets_with_report",
    "combine_cycles",
    "combine_cycles_in",
    "combine_sites",
    "cover",
    "cover_with_report",
    "frame_for",
    "plan",
    "region_c",
    "reserve_rays",
]
