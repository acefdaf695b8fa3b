"""
Hamiltonian double-rays on the vertex set {0, 1, 2, ...}.

A ray is given by a finite core around position 0 and an eventually periodic tail
on each side. Each tail is a block of affine terms ``A*m+B``: the first block entry
follows the core with ``m = 0``, then the second entry, and so on, then the block
repeats with ``m = 1``.

    ray Z : 4 2 [0] 1 3 ; left 2m+6 ; right 2m+5

``[0]`` marks the vertex at position 0.
"""

import re
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..errors import NotOnRay, ParseError

_TERM = re.compile(r"^(\d*)m\s*\+\s*(\d+)$")
_LINE = re.compile(r"^ray\s+(\S+)\s*:\s*([^;]*);\s*left\s+([^;]+);\s*right\s+([^;]+)$")

Term = Tuple[int, int]


def parse_terms(text: str) -> Tuple[Term, ...]:
    out = []
    for raw in text.split():
        m = _TERM.match(raw.replace(" ", ""))
        if m is None:
            raise ParseError(f"bad tail term {raw!r}; expected A*m+B written as 'Am+B'")
        out.append((int(m.group(1) or 1), int(m.group(2))))
    if not out:
        raise ParseError("a tail needs at least one term")
    return tuple(out)


def _render_terms(terms: Iterable[Term]) -> str:
    return " ".join(f"{a}m+{b}" for a, b in terms)


class RayStream(BaseModel):
    """Position ``k`` to vertex id, for all ``k`` in Z."""

    model_config = ConfigDict(frozen=True)

    label: str
    core: Tuple[int, ...]
    origin: int
    left: Tuple[Term, ...] = Field(min_length=1)
    right: Tuple[Term, ...] = Field(min_length=1)

    @field_validator("left", "right")
    @classmethod
    def _growing(cls, terms: Tuple[Term, ...]) -> Tuple[Term, ...]:
        for a, _ in terms:
            if a < 1:
                raise ValueError("tail terms must grow with m")
        return terms

    @classmethod
    def parse(cls, line: str) -> "RayStream":
        m = _LINE.match(line.strip())
        if m is None:
            raise ParseError(f"bad ray line {line!r}")
        label, core_text, left, right = m.groups()
        core: List[int] = []
        origin: Optional[int] = None
        for tok in core_text.split():
            if tok.startswith("[") and tok.endswith("]"):
                if origin is not None:
                    raise ParseError(f"ray {label} marks two origins")
                origin = len(core)
                tok = tok[1:-1]
            if not tok.isdigit():
                raise ParseError(f"bad vertex id {tok!r} in ray {label}")
            core.append(int(tok))
        if origin is None:
            raise ParseError(f"ray {label} needs an origin marked as [v]")
        try:
            ray = cls(label=label, core=tuple(core), origin=origin, left=parse_terms(left), right=parse_terms(right))
        except ValidationError as exc:
            raise ParseError(f"bad ray {label}: {exc}") from None
        ray.check()
        return ray

    def render(self) -> str:
        core = " ".join(f"[{v}]" if k == self.origin else str(v) for k, v in enumerate(self.core))
        return f"ray {self.label} : {core} ; left {_render_terms(self.left)} ; right {_render_terms(self.right)}"

    @cached_property
    def core_index(self) -> Dict[int, int]:
        return {v: k - self.origin for k, v in enumerate(self.core)}

    def __getitem__(self, pos: int) -> int:
        k = pos + self.origin
        if 0 <= k < len(self.core):
            return self.core[k]
        if k >= len(self.core):
            m, r = divmod(k - len(self.core), len(self.right))
            a, b = self.right[r]
        else:
            m, r = divmod(-k - 1, len(self.left))
            a, b = self.left[r]
        return a * m + b

    def position_of(self, v: int) -> int:
        pos = self.core_index.get(v)
        if pos is not None:
            return pos
        for side, terms in ((1, self.right), (-1, self.left)):
            for r, (a, b) in enumerate(terms):
                if v >= b and (v - b) % a == 0:
                    d = (v - b) // a * len(terms) + r
                    if side == 1:
                        return len(self.core) - self.origin + d
                    return -self.origin - 1 - d
        raise NotOnRay(f"vertex {v} is not on ray {self.label}")

    def window(self, lo: int, hi: int) -> List[int]:
        return [self[k] for k in range(lo, hi + 1)]

    def check(self, reach: Optional[int] = None) -> None:
        """Injective, inverse-consistent and onto ``0..reach`` on a finite stretch."""
        period = len(self.left) * len(self.right)
        reach = reach if reach is not None else 2 * (len(self.core) + 4 * period) + max(b for _, b in self.left + self.right)
        seen: Set[int] = set()
        for k in range(-reach, reach + 1):
            v = self[k]
            if v < 0 or v in seen:
                raise ParseError(f"ray {self.label} repeats or leaves the naturals at position {k}")
            seen.add(v)
            if self.position_of(v) != k:
                raise ParseError(f"ray {self.label} cannot locate vertex {v}")
        for v in range(reach // 2):
            try:
                self.position_of(v)
            except NotOnRay:
                raise ParseError(f"ray {self.label} misses vertex {v}") from None


def parse_decomposition(text: str) -> Tuple[RayStream, ...]:
    rays = []
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln:
            rays.append(RayStream.parse(ln))
    if not rays:
        raise ParseError("a decomposition needs at least one ray")
    check_edge_disjoint(rays)
    return tuple(rays)


def ray_edges(ray: RayStream, lo: int, hi: int) -> Iterable[frozenset]:
    for k in range(lo, hi):
        yield frozenset((ray[k], ray[k + 1]))


def check_edge_disjoint(rays: Sequence[RayStream], reach: int = 64) -> None:
    owner: Dict[frozenset, str] = {}
    for ray in rays:
        for e in ray_edges(ray, -reach, reach):
            if e in owner and owner[e] != ray.label:
                raise ParseError(f"rays {owner[e]} and {ray.label} share the edge {sorted(e)}")
            owner[e] = ray.label
