"""
Edge colourings as finite overlays on the standard colouring.
"""

from .base import ComponentTrace, EdgeColouring, TailCertificate, TraceKind
from .colouring import (
    Colouring,
    apply_switch,
    apply_switches,
    colour_of,
    incident_edges,
    revert_switch,
    trace_component,
)
from .edges import EdgeRef, Square, SquareLayout, intervals_interleave
from .safety import edges_cross_on_ray, is_safe_layout, is_safe_square, is_standard_double_ray
from .serialize import dumps, loads

__all__ = [
    "Colouring",
    "ComponentTrace",
    "EdgeColouring",
    "EdgeRef",
    "Square",
    "SquareLayout",
    "TailCertificate",
    "TraceKind",
    "apply_switch",
    "apply_switches",
    "colour_of",
    "dumps",
    "edges_cross_on_ray",
    "incident_edges",
    "intervals_interleave",
    "is_safe_layout",
    "is_safe_square",
    "is_standard_double_ray",
    "loads",
    "revert_switch",
    "trace_component",
]
