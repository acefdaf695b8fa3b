"""
Grid frames: coordinates ``(coset, a, b)`` for the vertices a covering works on.

A frame maps ``(ell, a, b)`` to ``x_ell + a*g_target + b*g_partner``. The cap-off,
cycle-combining and absorption steps only ever talk to a frame, so the same code runs
on Cayley graphs and on the grid planes of a graph product.
"""

from abc import ABC, abstractmethod
from typing import Sequence

from ..abelian import GeneratorSet, GroupElement
from ..colouring import EdgeRef, SquareLayout
from ..colouring.edges import Colour, Edge, Vertex


class GridFrame(ABC):
    target: Colour
    partner: Colour

    @property
    @abstractmethod
    def cosets(self) -> int:
        pass

    @abstractmethod
    def point(self, ell: int, a: int, b: int) -> Vertex:
        pass

    @abstractmethod
    def target_edge(self, ell: int, a: int, b: int) -> Edge:
        """Edge from ``point(ell, a, b)`` to ``point(ell, a + 1, b)``."""

    @abstractmethod
    def partner_edge(self, ell: int, a: int, b: int) -> Edge:
        """Edge from ``point(ell, a, b)`` to ``point(ell, a, b + 1)``."""

    def layout(self, ell: int, a: int, b: int) -> SquareLayout:
        return SquareLayout(
            i=self.target,
            j=self.partner,
            i_edges=(self.target_edge(ell, a, b), self.target_edge(ell, a, b + 1)),
            j_edges=(self.partner_edge(ell, a, b), self.partner_edge(ell, a + 1, b)),
        )


class CayleyFrame(GridFrame):
    def __init__(self, S: GeneratorSet, target: int, partner: int, representatives: Sequence[GroupElement]):
        self.S = S
        self.target = target
        self.partner = partner
        self.representatives = tuple(representatives)
        self._gt = S.gen(target)
        self._gp = S.gen(partner)

    @property
    def cosets(self) -> int:
        return len(self.representatives)

    def point(self, ell: int, a: int, b: int) -> GroupElement:
        return self.S.spec.combine(self.representatives[ell], ((a, self._gt), (b, self._gp)))

    def target_edge(self, ell: int, a: int, b: int) -> EdgeRef:
        return EdgeRef(self.point(ell, a, b), self.target)

    def partner_edge(self, ell: int, a: int, b: int) -> EdgeRef:
        return EdgeRef(self.point(ell, a, b), self.partner)
