"""
Edge, square and square-layout value types.
"""

from typing import Hashable, NamedTuple, Tuple

from ..abelian import GroupElement

Colour = Hashable
Edge = Hashable
Vertex = Hashable


class EdgeRef(NamedTuple):
    """The undirected Cayley edge ``{base, base + g_gen}``."""

    base: GroupElement
    gen: int


class Square(NamedTuple):
    """The ``(i, j)``-square with base point ``base``."""

    base: GroupElement
    gens: Tuple[int, int]


class SquareLayout(NamedTuple):
    """The four edges of a switchable square, split by standard colour.

    Switching moves ``i_edges`` to colour ``j`` and ``j_edges`` to colour ``i``.
    """

    i: Colour
    j: Colour
    i_edges: Tuple[Edge, Edge]
    j_edges: Tuple[Edge, Edge]

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.i_edges + self.j_edges


def intervals_interleave(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    a0, a1 = sorted(a)
    b0, b1 = sorted(b)
    return a0 < b0 < a1 < b1 or b0 < a0 < b1 < a1
