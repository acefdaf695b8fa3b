"""
Exact arithmetic in finitely generated abelian groups.
"""

from .boxes import CoordinateBox, box_spiral
from .cosets import CosetIndex, CosetPath, build_coset_path, coset_key, in_grid
from .generators import GeneratorSet, is_free_rank_two, partner_generator, solve_multiple
from .group import GroupElement, GroupSpec, grid_coordinates, line_key
from .lattice import IntegerLattice, xgcd

__all__ = [
    "CoordinateBox",
    "CosetIndex",
    "CosetPath",
    "GeneratorSet",
    "GroupElement",
    "GroupSpec",
    "IntegerLattice",
    "box_spiral",
    "build_coset_path",
    "coset_key",
    "grid_coordinates",
    "in_grid",
    "is_free_rank_two",
    "line_key",
    "partner_generator",
    "solve_multiple",
    "xgcd",
]
