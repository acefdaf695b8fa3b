"""
Finitely generated abelian groups Z^n x Z_q1 x ... x Z_qr.

Elements are plain integer tuples: n free coordinates followed by one residue
per torsion factor.
"""

import re
from typing import Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import ParseError, SpecMismatch
from .lattice import IntegerLattice

GroupElement = Tuple[int, ...]

_FACTOR = re.compile(r"^Z(?:\^(\d+)|_(\d+))?$")
_ELEMENT = re.compile(r"^\(\s*([-+\d\s,]*?)\s*\)$")
_ELEMENTS = re.compile(r"\([^()]*\)")


class GroupSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    free_rank: int = Field(ge=0)
    torsion_orders: Tuple[int, ...] = ()

    @field_validator("torsion_orders")
    @classmethod
    def _orders_at_least_two(cls, orders: Tuple[int, ...]) -> Tuple[int, ...]:
        for q in orders:
            if q < 2:
                raise ValueError(f"torsion order must be >= 2, got {q}")
        return orders

    @property
    def dimension(self) -> int:
        return self.free_rank + len(self.torsion_orders)

    @property
    def one_ended(self) -> bool:
        return self.free_rank >= 2

    # -- text -----------------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``"Z^2 x Z_3"``; factors are ``Z``, ``Z^n`` or ``Z_q`` joined by ``x``."""
        text = text.strip()
        if not text:
            raise ParseError("empty group spec")
        if text == "0":
            return cls(free_rank=0)
        free_rank = 0
        orders = []
        for raw in re.split(r"\s*(?:x|\*|⊕|×)\s*", text):
            m = _FACTOR.match(raw.strip())
            if m is None:
                raise ParseError(f"bad group factor {raw!r} in {text!r}")
            power, order = m.groups()
            if order is not None:
                q = int(order)
                if q < 2:
                    raise ParseError(f"torsion order must be >= 2 in {text!r}")
                orders.append(q)
            else:
                if orders:
                    raise ParseError(f"free factors must precede torsion factors in {text!r}")
                free_rank += int(power) if power is not None else 1
        return cls(free_rank=free_rank, torsion_orders=tuple(orders))

    def render(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{q}" for q in self.torsion_orders)
        return " x ".join(parts) if parts else "0"

    # -- arithmetic -----------------------------------------------------------

    def normalize(self, raw: Sequence[int]) -> GroupElement:
        if len(raw) != self.dimension:
            raise SpecMismatch(
                f"{tuple(raw)} has {len(raw)} coordinates, {self.render()} needs {self.dimension}"
            )
        if not self.torsion_orders:
            return tuple(int(v) for v in raw)
        n = self.free_rank
        head = tuple(int(v) for v in raw[:n])
        tail = tuple(int(v) % q for v, q in zip(raw[n:], self.torsion_orders))
        return head + tail

    def zero(self) -> GroupElement:
        return (0,) * self.dimension

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        if not self.torsion_orders:
            return tuple(a + b for a, b in zip(x, y))
        n = self.free_rank
        return tuple(a + b for a, b in zip(x[:n], y[:n])) + tuple(
            (a + b) % q for a, b, q in zip(x[n:], y[n:], self.torsion_orders)
        )

    def neg(self, x: GroupElement) -> GroupElement:
        return self.scale(x, -1)

    def sub(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return self.add(x, self.neg(y))

    def scale(self, x: GroupElement, k: int) -> GroupElement:
        if not self.torsion_orders:
            return tuple(k * a for a in x)
        n = self.free_rank
        return tuple(k * a for a in x[:n]) + tuple(
            (k * a) % q for a, q in zip(x[n:], self.torsion_orders)
        )

    def combine(self, base: GroupElement, terms: Iterable[Tuple[int, GroupElement]]) -> GroupElement:
        """``base + sum(k * g for k, g in terms)``."""
        out = base
        for k, g in terms:
            if k:
                out = self.add(out, self.scale(g, k))
        return out

    def free_part(self, x: GroupElement) -> Tuple[int, ...]:
        return x[: self.free_rank]

    def torsion_part(self, x: GroupElement) -> Tuple[int, ...]:
        return x[self.free_rank :]

    def has_infinite_order(self, x: GroupElement) -> bool:
        return any(x[: self.free_rank])

    # -- subgroups ------------------------------------------------------------

    def relations(self) -> list:
        """Lifted torsion relations ``q_i * e_{n+i}`` in Z^(n+r)."""
        rows = []
        for i, q in enumerate(self.torsion_orders):
            row = [0] * self.dimension
            row[self.free_rank + i] = q
            rows.append(row)
        return rows

    def subgroup_lattice(self, gens: Iterable[GroupElement]) -> IntegerLattice:
        """Lift of ``<gens>`` to Z^(n+r), torsion relations included."""
        return IntegerLattice.spanned_by(self.dimension, [*gens, *self.relations()])

    def generates(self, gens: Iterable[GroupElement]) -> bool:
        return self.subgroup_lattice(gens).is_full()

    def in_subgroup(self, x: GroupElement, gens: Iterable[GroupElement]) -> bool:
        return x in self.subgroup_lattice(gens)

    def render_element(self, x: GroupElement) -> str:
        return "(" + ",".join(str(v) for v in x) + ")"

    def parse_element(self, text: str) -> GroupElement:
        m = _ELEMENT.match(text.strip())
        if m is None:
            raise ParseError(f"bad group element {text!r}")
        try:
            raw = [int(v) for v in m.group(1).split(",")]
        except ValueError:
            raise ParseError(f"bad group element {text!r}") from None
        return self.normalize(raw)

    def parse_elements(self, text: str) -> List[GroupElement]:
        """Parse a whitespace separated list such as ``"(1,0) (0,1)"``."""
        found = _ELEMENTS.findall(text)
        if _ELEMENTS.sub("", text).strip(" \t,;"):
            raise ParseError(f"unexpected text in element list {text!r}")
        return [self.parse_element(f) for f in found]


def grid_coordinates(
    spec: GroupSpec, g1: GroupElement, g2: GroupElement, z: GroupElement
) -> Optional[Tuple[int, int]]:
    """Unique ``(a, b)`` with ``a*g1 + b*g2 == z``, or None when z is off the plane.

    ``g1`` and ``g2`` must have free parts of rank two.
    """
    f1, f2, fz = spec.free_part(g1), spec.free_part(g2), spec.free_part(z)
    n = spec.free_rank
    for p in range(n):
        for q in range(p + 1, n):
            det = f1[p] * f2[q] - f1[q] * f2[p]
            if det == 0:
                continue
            a_num = fz[p] * f2[q] - fz[q] * f2[p]
            b_num = f1[p] * fz[q] - f1[q] * fz[p]
            if a_num % det or b_num % det:
                return None
            a, b = a_num // det, b_num // det
            if spec.combine(spec.zero(), ((a, g1), (b, g2))) != z:
                return None
            return a, b
    raise ValueError("grid_coordinates needs generators of free rank two")


def line_key(spec: GroupSpec, g: GroupElement, x: GroupElement) -> Tuple[GroupElement, int]:
    """Split ``x`` as ``rep + pos*g`` with ``rep`` canonical on the line ``x + <g>``."""
    for j in range(spec.free_rank):
        d = g[j]
        if d == 0:
            continue
        if d > 0:
            k = x[j] // d
            return spec.sub(x, spec.scale(g, k)), k
        k = x[j] // (-d)
        return spec.add(x, spec.scale(g, k)), -k
    raise ValueError(f"line_key needs an element of infinite order, got {g}")
