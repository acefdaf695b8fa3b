"""
Colourings of Cayley graphs of abelian groups.

The standard colouring gives the edge ``{x, x + g_i}`` colour ``i``; a ``Colouring``
keeps only the edges where it disagrees.
"""

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..abelian import GeneratorSet, GroupElement, line_key
from ..errors import SpecMismatch
from .base import ComponentTrace, EdgeColouring
from .edges import EdgeRef, Square, SquareLayout


class Colouring(EdgeColouring):
    def __init__(self, gens: GeneratorSet, overlay: Optional[Mapping[EdgeRef, int]] = None):
        self.S = gens
        self.spec = gens.spec
        checked: Dict[EdgeRef, int] = {}
        for e, col in (overlay or {}).items():
            e = EdgeRef(self.spec.normalize(e[0]), int(e[1]))
            if not 1 <= e.gen <= gens.size or not 1 <= col <= gens.size:
                raise SpecMismatch(f"edge {e} coloured {col} does not fit {gens.size} generators")
            checked[e] = col
        super().__init__(checked)
        self._extents: Optional[List[Tuple[int, int]]] = None

    @classmethod
    def standard(cls, gens: GeneratorSet) -> "Colouring":
        return cls(gens)

    def _spawn(self, overlay: Dict[EdgeRef, int]) -> "Colouring":  # type: ignore[override]
        out = Colouring.__new__(Colouring)
        out.S = self.S
        out.spec = self.spec
        EdgeColouring.__init__(out, None)
        out._overlay = overlay
        out._extents = None
        return out

    def _same_graph(self, other: EdgeColouring) -> bool:
        return isinstance(other, Colouring) and other.S == self.S

    # -- graph description ---------------------------------------------------

    def standard_colour(self, e: EdgeRef) -> int:  # type: ignore[override]
        return e[1]

    def endpoints(self, e: EdgeRef) -> Tuple[GroupElement, GroupElement]:  # type: ignore[override]
        return e[0], self.spec.add(e[0], self.S.gen(e[1]))

    def standard_edges(self, v: GroupElement, colour: int) -> Tuple[EdgeRef, EdgeRef]:  # type: ignore[override]
        return EdgeRef(v, colour), EdgeRef(self.spec.sub(v, self.S.gen(colour)), colour)

    def line_of(self, v: GroupElement, colour: int) -> Tuple[GroupElement, int]:  # type: ignore[override]
        return line_key(self.spec, self.S.gen(colour), v)

    def point_on_line(self, colour: int, line: GroupElement, pos: int) -> GroupElement:  # type: ignore[override]
        return self.spec.add(line, self.spec.scale(self.S.gen(colour), pos))

    def colours(self) -> Sequence[int]:
        return list(self.S.indices())

    def _free_extents(self) -> List[Tuple[int, int]]:
        if self._extents is None:
            verts = self.exceptional_vertices()
            n = self.spec.free_rank
            self._extents = [(min(x[j] for x in verts), max(x[j] for x in verts)) for j in range(n)] if verts else []
        return self._extents

    def region_diameter(self) -> int:
        return sum(hi - lo for lo, hi in self._free_extents())

    def distance_to_region(self, v: GroupElement) -> int:  # type: ignore[override]
        extents = self._free_extents()
        return sum(max(lo - x, 0, x - hi) for x, (lo, hi) in zip(v, extents))

    # -- squares ---------------------------------------------------------------

    def layout(self, sq: Square) -> SquareLayout:
        x, (i, j) = sq
        gi, gj = self.S.gen(i), self.S.gen(j)
        return SquareLayout(
            i=i,
            j=j,
            i_edges=(EdgeRef(x, i), EdgeRef(self.spec.add(x, gj), i)),
            j_edges=(EdgeRef(x, j), EdgeRef(self.spec.add(x, gi), j)),
        )

    def square_vertices(self, sq: Square) -> Tuple[GroupElement, ...]:
        x, (i, j) = sq
        gi, gj = self.S.gen(i), self.S.gen(j)
        return x, self.spec.add(x, gi), self.spec.add(x, gj), self.spec.combine(x, ((1, gi), (1, gj)))

    def is_standard_square(self, sq: Square) -> bool:
        return self.is_standard_layout(self.layout(sq))


def colour_of(c: Colouring, e: EdgeRef) -> int:
    return c.colour_of(e)


def incident_edges(c: Colouring, v: GroupElement, i: int) -> List[EdgeRef]:
    return c.incident_edges(v, i)


def apply_switch(c: Colouring, sq: Square) -> Colouring:
    """Swap colours ``i`` and ``j`` on a standard ``(i, j)``-square."""
    return c.switched([c.layout(sq)])


def revert_switch(c: Colouring, sq: Square) -> Colouring:
    return c.switched([c.layout(sq)], undo=True)


def apply_switches(c: Colouring, squares: Iterable[Square]) -> Colouring:
    return c.switched([c.layout(sq) for sq in squares])


def trace_component(c: Colouring, v: GroupElement, i: int, budget: Optional[int] = None) -> ComponentTrace:
    return c.trace(v, i, budget)
