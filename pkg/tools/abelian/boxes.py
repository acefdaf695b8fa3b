"""
Coordinate boxes and the default vertex enumeration.
"""

import itertools
from typing import Iterable, Iterator, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .group import GroupElement, GroupSpec


class CoordinateBox(BaseModel):
    """Free coordinates in ``[lows[j], highs[j]]`` crossed with every torsion value."""

    model_config = ConfigDict(frozen=True)

    spec: GroupSpec
    lows: Tuple[int, ...]
    highs: Tuple[int, ...]

    @model_validator(mode="after")
    def _shape(self) -> "CoordinateBox":
        n = self.spec.free_rank
        if len(self.lows) != n or len(self.highs) != n:
            raise ValueError(f"box bounds need {n} free coordinates")
        return self

    @classmethod
    def cube(cls, spec: GroupSpec, radius: int) -> "CoordinateBox":
        return cls(spec=spec, lows=(-radius,) * spec.free_rank, highs=(radius,) * spec.free_rank)

    @classmethod
    def hull(cls, spec: GroupSpec, points: Iterable[GroupElement], margin: int = 0) -> "CoordinateBox":
        """Smallest cube centred at the origin containing ``points``, widened by ``margin``."""
        radius = max((max((abs(v) for v in spec.free_part(x)), default=0) for x in points), default=0)
        return cls.cube(spec, radius + margin)

    @property
    def radius(self) -> int:
        return max((max(-lo, hi) for lo, hi in zip(self.lows, self.highs)), default=0)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, tuple):
            return False
        return all(lo <= v <= hi for v, lo, hi in zip(x, self.lows, self.highs))

    def vertices(self) -> Iterator[GroupElement]:
        ranges = [range(lo, hi + 1) for lo, hi in zip(self.lows, self.highs)]
        ranges += [range(q) for q in self.spec.torsion_orders]
        for v in itertools.product(*ranges):
            yield tuple(v)

    def size(self) -> int:
        total = 1
        for lo, hi in zip(self.lows, self.highs):
            total *= max(0, hi - lo + 1)
        for q in self.spec.torsion_orders:
            total *= q
        return total

    def render(self) -> str:
        return " x ".join(f"[{lo},{hi}]" for lo, hi in zip(self.lows, self.highs))


def _shell(n: int, r: int) -> Iterator[Tuple[int, ...]]:
    if r == 0:
        yield (0,) * n
        return
    for v in itertools.product(range(-r, r + 1), repeat=n):
        if max(abs(c) for c in v) == r:
            yield v


def box_spiral(spec: GroupSpec) -> Iterator[GroupElement]:
    """Every element exactly once: L-infinity shells of the free part, lexicographic
    within a shell, each crossed with the torsion values in lexicographic order."""
    torsion = list(itertools.product(*[range(q) for q in spec.torsion_orders]))
    r = 0
    while True:
        for free in _shell(spec.free_rank, r):
            for tail in torsion:
                yield free + tuple(tail)
        if spec.free_rank == 0:
            return
        r += 1
