"""
Hamilton decompositions of Cartesian products of Hamilton-decomposed graphs.
"""

from .colouring import ProductColouring, parse_colour, product_standard_colour, render_colour
from .plane import PlaneFrame
from .rays import RayStream, check_edge_disjoint, parse_decomposition
from .session import (
    ProductSession,
    ProductStepReport,
    choose_plane_n1,
    product_new_session,
    product_step,
    product_window,
    round_robin,
)

__all__ = [
    "PlaneFrame",
    "ProductColouring",
    "ProductSession",
    "ProductStepReport",
    "RayStream",
    "check_edge_disjoint",
    "choose_plane_n1",
    "parse_colour",
    "parse_decomposition",
    "product_new_session",
    "product_standard_colour",
    "product_step",
    "product_window",
    "render_colour",
    "round_robin",
]
