"""
Text grammars shared by the CLI and the MCP tools.

    group      Z^2 x Z_3
    gens       (1,0,0) (0,1,0) (1,1,1)   or   units
    vertex set (0,0) (2,-1)
    window     3  |  -2..2  |  -2,2  |  -1..3,0..2
"""

import re
from typing import List, Tuple

from tools.abelian import CoordinateBox, GeneratorSet, GroupElement, GroupSpec
from tools.errors import ParseError

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
_PAIR = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def unit_generators(spec: GroupSpec) -> List[GroupElement]:
    """The free unit vectors ``e_1..e_n`` with zero torsion part."""
    n = spec.free_rank
    return [tuple(1 if k == j else 0 for k in range(spec.dimension)) for j in range(n)]


def parse_generators(spec: GroupSpec, text: str) -> GeneratorSet:
    text = text.strip()
    if text == "units":
        if spec.torsion_orders:
            raise ParseError("'units' only generates torsion-free groups")
        return GeneratorSet.of(spec, unit_generators(spec))
    return GeneratorSet.of(spec, spec.parse_elements(text))


def parse_group(group: str, gens: str) -> GeneratorSet:
    return parse_generators(GroupSpec.parse(group), gens)


def parse_vertex_set(spec: GroupSpec, text: str) -> List[GroupElement]:
    return spec.parse_elements(text)


def _bounds(text: str) -> Tuple[int, int]:
    m = _RANGE.match(text) or _PAIR.match(text)
    if m is None:
        raise ParseError(f"bad range {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise ParseError(f"empty range {text!r}")
    return lo, hi


def parse_window(spec: GroupSpec, text: str) -> CoordinateBox:
    text = text.strip()
    if re.fullmatch(r"\d+", text):
        return CoordinateBox.cube(spec, int(text))
    if _PAIR.match(text) or _RANGE.match(text):
        lo, hi = _bounds(text)
        return CoordinateBox(spec=spec, lows=(lo,) * spec.free_rank, highs=(hi,) * spec.free_rank)
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != spec.free_rank:
        raise ParseError(f"window {text!r} needs {spec.free_rank} ranges")
    bounds = [_bounds(p) for p in parts]
    return CoordinateBox(spec=spec, lows=tuple(lo for lo, _ in bounds), highs=tuple(hi for _, hi in bounds))


def parse_square(text: str) -> Tuple[int, int]:
    """A product window ``[lo, hi]^2`` over vertex ids, written ``lo..hi`` or a bare ``hi``."""
    text = text.strip()
    if re.fullmatch(r"\d+", text):
        return 0, int(text)
    lo, hi = _bounds(text)
    if lo < 0:
        raise ParseError("product windows live on non-negative vertex ids")
    return lo, hi
