"""
Crossing and safety predicates for switchable squares.
"""

from typing import Optional, Union

from ..abelian import GroupElement, solve_multiple
from ..errors import NotOnRay
from .base import EdgeColouring
from .colouring import Colouring
from .edges import EdgeRef, Square, SquareLayout, intervals_interleave


def ray_position(c: Colouring, x: GroupElement, k: int, v: GroupElement) -> int:
    pos = solve_multiple(c.spec, c.spec.sub(v, x), c.S.gen(k))
    if pos is None:
        raise NotOnRay(f"{c.spec.render_element(v)} is not on the g_{k} double-ray through {c.spec.render_element(x)}")
    return pos


def edges_cross_on_ray(c: Colouring, x: GroupElement, k: int, e1: EdgeRef, e2: EdgeRef) -> bool:
    """Whether the endpoint intervals of ``e1`` and ``e2`` interleave on ``D(x, g_k)``."""
    p = tuple(ray_position(c, x, k, v) for v in c.endpoints(e1))
    q = tuple(ray_position(c, x, k, v) for v in c.endpoints(e2))
    return intervals_interleave(p, q)  # type: ignore[arg-type]


def is_standard_double_ray(c: EdgeColouring, y: GroupElement, k: int) -> bool:
    return c.is_standard_line(y, k)


def is_safe_layout(c: EdgeColouring, layout: SquareLayout, budget: Optional[int] = None) -> bool:
    """The ``j``-components meeting the square are distinct double-rays, or one
    double-ray on which the two ``i``-edges cross."""
    f1, f2 = layout.j_edges
    first = c.trace(c.endpoints(f1)[0], layout.j, budget)
    if not first.is_double_ray:
        return False
    other = c.endpoints(f2)[0]
    if not first.contains(other):
        return c.trace(other, layout.j, budget).is_double_ray
    e1, e2 = layout.i_edges
    p = [first.position_of(v) for v in c.endpoints(e1)]
    q = [first.position_of(v) for v in c.endpoints(e2)]
    if None in p or None in q:
        return False
    return intervals_interleave((p[0], p[1]), (q[0], q[1]))  # type: ignore[arg-type]


def is_safe_square(c: Union[Colouring, EdgeColouring], sq: Union[Square, SquareLayout], budget: Optional[int] = None) -> bool:
    if isinstance(sq, Square):
        assert isinstance(c, Colouring)
        x, (i, k) = sq
        layout = c.layout(sq)
        same_line = solve_multiple(c.spec, c.S.gen(i), c.S.gen(k)) is not None
        if same_line and is_standard_double_ray(c, x, k):
            return edges_cross_on_ray(c, x, k, *layout.i_edges)
        return is_safe_layout(c, layout, budget)
    return is_safe_layout(c, sq, budget)
