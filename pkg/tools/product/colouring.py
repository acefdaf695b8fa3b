"""
Colourings of the Cartesian product of two Hamilton-decomposed graphs.

Vertices are pairs ``(g, h)`` of vertex ids. An edge is ``("G", i, p, h)``, joining
``(R_i[p], h)`` and ``(R_i[p+1], h)``, or ``("H", j, g, p)``, joining
``(g, S_j[p])`` and ``(g, S_j[p+1])``. Its standard colour is the ray it runs along:
``("G", i)`` or ``("H", j)``.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from ..colouring import EdgeColouring
from ..errors import EdgeNotInDecomposition, NotOnRay, SpecMismatch
from .rays import RayStream

ProductVertex = Tuple[int, int]
ProductEdge = Tuple[str, int, int, int]
ProductColour = Tuple[str, int]


def render_colour(colour: ProductColour) -> str:
    return f"{colour[0]}{colour[1]}"


def parse_colour(text: str) -> ProductColour:
    text = text.strip()
    if len(text) < 2 or text[0] not in "GH" or not text[1:].isdigit():
        raise SpecMismatch(f"bad product colour {text!r}; expected G<i> or H<j>")
    return text[0], int(text[1:])


class ProductColouring(EdgeColouring):
    def __init__(
        self,
        left: Sequence[RayStream],
        right: Sequence[RayStream],
        overlay: Optional[Dict[ProductEdge, ProductColour]] = None,
    ):
        self.left = tuple(left)
        self.right = tuple(right)
        super().__init__(overlay)
        self._extents: Optional[List[Tuple[int, int]]] = None

    def ray(self, colour: ProductColour) -> RayStream:
        side, k = colour
        rays = self.left if side == "G" else self.right
        if not 1 <= k <= len(rays):
            raise SpecMismatch(f"no colour {render_colour(colour)}")
        return rays[k - 1]

    def _spawn(self, overlay: Dict[ProductEdge, ProductColour]) -> "ProductColouring":  # type: ignore[override]
        out = ProductColouring.__new__(ProductColouring)
        out.left = self.left
        out.right = self.right
        EdgeColouring.__init__(out, None)
        out._overlay = overlay
        out._extents = None
        return out

    def _same_graph(self, other: EdgeColouring) -> bool:
        return isinstance(other, ProductColouring) and other.left == self.left and other.right == self.right

    # -- graph description ---------------------------------------------------

    def standard_colour(self, e: ProductEdge) -> ProductColour:  # type: ignore[override]
        return e[0], e[1]

    def endpoints(self, e: ProductEdge) -> Tuple[ProductVertex, ProductVertex]:  # type: ignore[override]
        side, k, a, b = e
        if side == "G":
            r = self.left[k - 1]
            return (r[a], b), (r[a + 1], b)
        s = self.right[k - 1]
        return (a, s[b]), (a, s[b + 1])

    def standard_edges(self, v: ProductVertex, colour: ProductColour) -> Tuple[ProductEdge, ProductEdge]:  # type: ignore[override]
        side, k = colour
        g, h = v
        if side == "G":
            p = self.left[k - 1].position_of(g)
            return ("G", k, p, h), ("G", k, p - 1, h)
        p = self.right[k - 1].position_of(h)
        return ("H", k, g, p), ("H", k, g, p - 1)

    def line_of(self, v: ProductVertex, colour: ProductColour) -> Tuple[int, int]:  # type: ignore[override]
        side, k = colour
        g, h = v
        if side == "G":
            return h, self.left[k - 1].position_of(g)
        return g, self.right[k - 1].position_of(h)

    def point_on_line(self, colour: ProductColour, line: int, pos: int) -> ProductVertex:  # type: ignore[override]
        side, k = colour
        if side == "G":
            return self.left[k - 1][pos], line
        return line, self.right[k - 1][pos]

    def colours(self) -> List[ProductColour]:
        return [("G", i) for i in range(1, len(self.left) + 1)] + [("H", j) for j in range(1, len(self.right) + 1)]

    def _ray_extents(self) -> List[Tuple[int, int]]:
        """Position span of the exceptional region along every ray."""
        if self._extents is None:
            verts = self.exceptional_vertices()
            out = []
            if verts:
                for r in self.left:
                    ps = [r.position_of(g) for g, _ in verts]
                    out.append((min(ps), max(ps)))
                for s in self.right:
                    ps = [s.position_of(h) for _, h in verts]
                    out.append((min(ps), max(ps)))
            self._extents = out
        return self._extents

    def region_diameter(self) -> int:
        return sum(hi - lo for lo, hi in self._ray_extents())

    def distance_to_region(self, v: ProductVertex) -> int:  # type: ignore[override]
        extents = self._ray_extents()
        if not extents:
            return 0
        g, h = v
        positions = [r.position_of(g) for r in self.left] + [s.position_of(h) for s in self.right]
        return sum(max(lo - p, 0, p - hi) for p, (lo, hi) in zip(positions, extents))

    # -- product edges -----------------------------------------------------------

    def edge_between(self, u: ProductVertex, v: ProductVertex) -> ProductEdge:
        """The canonical name of the product edge ``uv``."""
        (g, h), (g2, h2) = u, v
        if h == h2 and g != g2:
            for i, r in enumerate(self.left, start=1):
                p, q = _positions(r, g, g2)
                if abs(p - q) == 1:
                    return "G", i, min(p, q), h
        elif g == g2 and h != h2:
            for j, s in enumerate(self.right, start=1):
                p, q = _positions(s, h, h2)
                if abs(p - q) == 1:
                    return "H", j, g, min(p, q)
        raise EdgeNotInDecomposition(f"{u} and {v} are not joined by an edge of any decomposition ray")

    def window_edges(self, lo: int, hi: int) -> List[ProductEdge]:
        """Every product edge with both endpoints in ``[lo, hi]^2``, sorted."""
        out = []
        for g in range(lo, hi + 1):
            for h in range(lo, hi + 1):
                for i, r in enumerate(self.left, start=1):
                    p = r.position_of(g)
                    if lo <= r[p + 1] <= hi:
                        out.append(("G", i, p, h))
                for j, s in enumerate(self.right, start=1):
                    p = s.position_of(h)
                    if lo <= s[p + 1] <= hi:
                        out.append(("H", j, g, p))
        out.sort()
        return out


def _positions(ray: RayStream, a: int, b: int) -> Tuple[int, int]:
    try:
        return ray.position_of(a), ray.position_of(b)
    except NotOnRay as exc:
        raise EdgeNotInDecomposition(str(exc)) from None


def product_standard_colour(c: ProductColouring, u: ProductVertex, v: ProductVertex) -> ProductColour:
    return c.standard_colour(c.edge_between(u, v))
