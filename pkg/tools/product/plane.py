"""
Planes ``R_i x S_j`` of the product, addressed as the grid Z^2 by ray positions.
"""

from typing import Iterator, Tuple

from ..covering import GridFrame
from .colouring import ProductColour, ProductColouring, ProductEdge, ProductVertex, render_colour
from .rays import RayStream


class PlaneFrame(GridFrame):
    """The plane of ``target`` and its partner ray on the other side.

    Target ``("G", i)`` pairs with ``S_1`` and target ``("H", j)`` with ``R_1``. The
    frame coordinate ``a`` runs along the target ray and ``b`` along the partner ray;
    position 0 of each ray is its origin vertex.
    """

    def __init__(self, c: ProductColouring, target: ProductColour):
        self.target = target
        self.partner = ("H", 1) if target[0] == "G" else ("G", 1)
        self.along: RayStream = c.ray(target)
        self.across: RayStream = c.ray(self.partner)

    @property
    def cosets(self) -> int:
        return 1

    @property
    def name(self) -> str:
        g_side, h_side = (self.target, self.partner) if self.target[0] == "G" else (self.partner, self.target)
        return f"R{g_side[1]} x S{h_side[1]}"

    def point(self, ell: int, a: int, b: int) -> ProductVertex:
        if self.target[0] == "G":
            return self.along[a], self.across[b]
        return self.across[b], self.along[a]

    def coordinates(self, v: ProductVertex) -> Tuple[int, int]:
        g, h = v
        if self.target[0] == "G":
            return self.along.position_of(g), self.across.position_of(h)
        return self.along.position_of(h), self.across.position_of(g)

    def target_edge(self, ell: int, a: int, b: int) -> ProductEdge:
        k = self.target[1]
        if self.target[0] == "G":
            return "G", k, a, self.across[b]
        return "H", k, self.across[b], a

    def partner_edge(self, ell: int, a: int, b: int) -> ProductEdge:
        k = self.partner[1]
        if self.partner[0] == "H":
            return "H", k, self.along[a], b
        return "G", k, b, self.along[a]

    def half_width(self, n: int) -> int:
        """Least ``w`` with every vertex of ``[0, n]^2`` inside the frame square ``[-w, w]^2``."""
        return max(max(abs(self.along.position_of(u)), abs(self.across.position_of(u))) for u in range(n + 1))

    def square(self, w: int) -> Iterator[ProductVertex]:
        for a in range(-w, w + 1):
            for b in range(-w, w + 1):
                yield self.point(0, a, b)

    def __repr__(self) -> str:
        return f"PlaneFrame({self.name}, target {render_colour(self.target)})"
