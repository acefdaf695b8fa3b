"""
Finite grids ``center + n*g_a + m*g_b`` with ``-N <= n <= N`` and ``-M < m <= M``.
"""

from typing import Iterator, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..abelian import GeneratorSet, GroupElement, grid_coordinates, in_grid


class GridSizes(BaseModel):
    """The nested grid sizes ``N_0 < N_1 < N_2 < N_3`` of one covering."""

    model_config = ConfigDict(frozen=True)

    n0: int = Field(ge=0)
    n1: int
    n2: int
    n3: int

    @classmethod
    def from_n1(cls, n0: int, n1: int) -> "GridSizes":
        return cls(n0=n0, n1=n1, n2=5 * n1, n3=7 * n1)

    def is_nested(self) -> bool:
        return (
            self.n0 < self.n1 < self.n2 < self.n3
            and self.n1 >= 4
            and self.n2 >= 5 * self.n1
            and self.n3 >= self.n2 + 2 * self.n1
        )


class GridBox(BaseModel):
    model_config = ConfigDict(frozen=True)

    center: GroupElement
    gens: Tuple[int, int]
    n: int
    m: int

    def vertices(self, S: GeneratorSet) -> Iterator[GroupElement]:
        spec = S.spec
        ga, gb = S.gen(self.gens[0]), S.gen(self.gens[1])
        for a in range(-self.n, self.n + 1):
            for b in range(-self.m + 1, self.m + 1):
                yield spec.combine(self.center, ((a, ga), (b, gb)))

    def contains(self, S: GeneratorSet, x: GroupElement) -> bool:
        spec = S.spec
        ab = grid_coordinates(spec, S.gen(self.gens[0]), S.gen(self.gens[1]), spec.sub(x, self.center))
        return ab is not None and in_grid(ab[0], ab[1], self.n, self.m)

    def size(self) -> int:
        return (2 * self.n + 1) * (2 * self.m)
