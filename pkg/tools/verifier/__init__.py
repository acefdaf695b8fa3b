"""
Independent brute-force checks of colourings on finite windows.
"""

from .windows import (
    WindowComponent,
    WindowReport,
    brute_force_components,
    colour_graph,
    verify_colouring,
    verify_covering,
    verify_decomposition_window,
    window_report,
    window_vertices,
)

__all__ = [
    "WindowComponent",
    "WindowReport",
    "brute_force_components",
    "colour_graph",
    "verify_colouring",
    "verify_covering",
    "verify_decomposition_window",
    "window_report",
    "window_vertices",
]
