"""
Generator sets of Cayley graphs and the rank-two helpers built on them.
"""

from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import InvalidGenerators, NotOneEnded, SpecMismatch, TorsionGenerator
from .group import GroupElement, GroupSpec


class GeneratorSet(BaseModel):
    """Ordered generators ``g_1..g_s``; indices are 1-based everywhere."""

    model_config = ConfigDict(frozen=True)

    spec: GroupSpec
    generators: Tuple[GroupElement, ...]

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: dict) -> dict:
        if isinstance(data, dict) and "spec" in data and "generators" in data:
            spec = data["spec"]
            if isinstance(spec, dict):
                spec = GroupSpec(**spec)
            data = {**data, "spec": spec, "generators": tuple(spec.normalize(g) for g in data["generators"])}
        return data

    @model_validator(mode="after")
    def _check(self) -> "GeneratorSet":
        spec = self.spec
        if not self.generators:
            raise InvalidGenerators("a generator set needs at least one element")
        seen = set()
        for i, g in enumerate(self.generators, start=1):
            if not spec.has_infinite_order(g):
                raise TorsionGenerator(f"g_{i} = {spec.render_element(g)} has finite order")
            if g in seen:
                raise InvalidGenerators(f"g_{i} = {spec.render_element(g)} is repeated")
            seen.add(g)
        for i, g in enumerate(self.generators, start=1):
            if spec.neg(g) in seen:
                raise InvalidGenerators(f"both g_{i} and its inverse are generators")
        if not spec.generates(self.generators):
            raise InvalidGenerators(f"generators do not generate {spec.render()}")
        return self

    @classmethod
    def of(cls, spec: GroupSpec, generators: Sequence[Sequence[int]]) -> "GeneratorSet":
        return cls(spec=spec, generators=tuple(tuple(g) for g in generators))

    @property
    def size(self) -> int:
        return len(self.generators)

    def gen(self, i: int) -> GroupElement:
        if not 1 <= i <= len(self.generators):
            raise SpecMismatch(f"no generator g_{i}; colours run 1..{len(self.generators)}")
        return self.generators[i - 1]

    def indices(self) -> range:
        return range(1, self.size + 1)

    def render(self) -> str:
        return " ".join(self.spec.render_element(g) for g in self.generators)


def solve_multiple(spec: GroupSpec, z: GroupElement, g: GroupElement) -> Optional[int]:
    """The unique ``k`` with ``z == k*g``, or None."""
    for j in range(spec.free_rank):
        if g[j]:
            if z[j] % g[j]:
                return None
            k = z[j] // g[j]
            return k if spec.scale(g, k) == z else None
    raise ValueError(f"solve_multiple needs an element of infinite order, got {g}")


def is_free_rank_two(spec: GroupSpec, g1: GroupElement, g2: GroupElement) -> bool:
    f1, f2 = spec.free_part(g1), spec.free_part(g2)
    n = spec.free_rank
    return any(
        f1[p] * f2[q] != f1[q] * f2[p] for p in range(n) for q in range(p + 1, n)
    )


def partner_generator(S: GeneratorSet, i: int) -> int:
    """Smallest ``j != i`` such that ``<g_i, g_j>`` is free abelian of rank two."""
    if not S.spec.one_ended:
        raise NotOneEnded(f"{S.spec.render()} has free rank {S.spec.free_rank} < 2")
    gi = S.gen(i)
    for j in S.indices():
        if j != i and is_free_rank_two(S.spec, gi, S.gen(j)):
            return j
    raise NotOneEnded(f"no generator pairs with g_{i} to a rank-two subgroup")


def partners(S: GeneratorSet) -> List[int]:
    return [partner_generator(S, i) for i in S.indices()]
