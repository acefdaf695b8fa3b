"""
Text grammars and renderers for Hamilton Tools.

``utils.rendering`` pulls in matplotlib and is imported on demand.
"""

from .parsing import parse_generators, parse_group, parse_square, parse_vertex_set, parse_window, unit_generators

__all__ = [
    "parse_generators",
    "parse_group",
    "parse_square",
    "parse_vertex_set",
    "parse_window",
    "unit_generators",
]
