"""
Cosets of a rank-two subgroup and the coset path that threads a finite vertex set.
"""

from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from mcp.server.fastmcp.utilities.logging import get_logger
from pydantic import BaseModel, ConfigDict

from ..errors import InvariantViolation
from .generators import GeneratorSet
from .group import GroupElement, GroupSpec, grid_coordinates

logger = get_logger(__name__)

CosetKey = Tuple[int, ...]
Step = Tuple[int, int]  # (generator index, sign)


def in_grid(a: int, b: int, n: int, m: int) -> bool:
    """Membership of ``a*g + b*h`` in the grid with columns ``[-n, n]`` and rows ``(-m, m]``."""
    return -n <= a <= n and -m < b <= m


class CosetIndex:
    """Canonical keys for the cosets of ``<delta_gens>``."""

    def __init__(self, spec: GroupSpec, delta_gens: Sequence[GroupElement]):
        self.spec = spec
        self.delta_gens = tuple(delta_gens)
        self._lattice = spec.subgroup_lattice(self.delta_gens)

    def key(self, x: GroupElement) -> CosetKey:
        return self._lattice.reduce(x)

    def same_coset(self, x: GroupElement, y: GroupElement) -> bool:
        return self.key(x) == self.key(y)


def coset_key(spec: GroupSpec, delta_gens: Sequence[GroupElement], x: GroupElement) -> CosetKey:
    return CosetIndex(spec, delta_gens).key(x)


class CosetPath(BaseModel):
    model_config = ConfigDict(frozen=True)

    delta: Tuple[int, int]
    representatives: Tuple[GroupElement, ...]
    edge_generators: Tuple[int, ...]
    edge_signs: Tuple[int, ...]
    n0: int

    @property
    def t(self) -> int:
        return len(self.edge_generators)

    def problems(self, S: GeneratorSet, X: Iterable[GroupElement]) -> List[str]:
        """Every way this path fails to be a valid coset path for ``X``; empty when fine."""
        spec = S.spec
        g1, g2 = S.gen(self.delta[0]), S.gen(self.delta[1])
        index = CosetIndex(spec, (g1, g2))
        out = []
        keys = [index.key(x) for x in self.representatives]
        if len(set(keys)) != len(keys):
            out.append("coset representatives repeat a coset")
        for ell, (k, sigma) in enumerate(zip(self.edge_generators, self.edge_signs), start=1):
            if k in self.delta:
                out.append(f"edge {ell} uses a generator of the subgroup")
            moved = spec.add(self.representatives[ell - 1], spec.scale(S.gen(k), sigma))
            if not index.same_coset(moved, self.representatives[ell]):
                out.append(f"edge {ell} does not join consecutive cosets")
        for x in X:
            if not any(
                (ab := grid_coordinates(spec, g1, g2, spec.sub(x, rep))) is not None
                and in_grid(ab[0], ab[1], self.n0, self.n0)
                for rep in self.representatives
            ):
                out.append(f"{spec.render_element(x)} is outside every representative's grid")
        return out


def _centre(spec: GroupSpec, g1: GroupElement, g2: GroupElement, points: List[GroupElement]) -> Tuple[GroupElement, int]:
    """Representative that needs the smallest grid around ``points``, and that grid size."""
    base = points[0]
    coords = []
    for x in points:
        ab = grid_coordinates(spec, g1, g2, spec.sub(x, base))
        if ab is None:
            raise InvariantViolation(f"{x} and {base} share a coset but not a grid")
        coords.append(ab)
    amin, amax = min(a for a, _ in coords), max(a for a, _ in coords)
    bmin, bmax = min(b for _, b in coords), max(b for _, b in coords)
    ca = (amin + amax) // 2
    a_need = max(amax - ca, ca - amin)
    low = (bmax + bmin - 1) // 2
    cb, b_need = max(
        ((c, max(bmax - c, c - bmin + 1)) for c in (low, low + 1)),
        key=lambda pair: (-pair[1], pair[0]),
    )
    rep = spec.combine(base, ((ca, g1), (cb, g2)))
    return rep, max(a_need, b_need)


class _Quotient:
    """Walks in the Cayley graph of the quotient by ``Delta``."""

    def __init__(self, S: GeneratorSet, index: CosetIndex, delta: Tuple[int, int]):
        self.S = S
        self.index = index
        self.steps: List[Step] = [(k, s) for k in S.indices() if k not in delta for s in (1, -1)]

    def neighbours(self, x: GroupElement) -> Iterable[Tuple[CosetKey, GroupElement, Step]]:
        spec = self.S.spec
        for k, sigma in self.steps:
            y = spec.add(x, spec.scale(self.S.gen(k), sigma))
            yield self.index.key(y), y, (k, sigma)


def _nearest(
    quotient: _Quotient,
    start: GroupElement,
    goals: Set[CosetKey],
    used: Set[CosetKey],
    limit: int,
) -> Optional[List[Tuple[CosetKey, GroupElement, Step]]]:
    start_key = quotient.index.key(start)
    parent: Dict[CosetKey, Tuple[Optional[CosetKey], GroupElement, Optional[Step]]] = {
        start_key: (None, start, None)
    }
    queue = deque([start_key])
    while queue and len(parent) < limit:
        key = queue.popleft()
        for nkey, y, step in quotient.neighbours(parent[key][1]):
            if nkey in parent or nkey in used:
                continue
            parent[nkey] = (key, y, step)
            if nkey in goals:
                hops = []
                cur: Optional[CosetKey] = nkey
                while cur != start_key and cur is not None:
                    prev, elt, st = parent[cur]
                    hops.append((cur, elt, st))
                    cur = prev
                hops.reverse()
                return hops  # type: ignore[return-value]
            queue.append(nkey)
    return None


def _backtrack(
    quotient: _Quotient,
    start: GroupElement,
    goals: Set[CosetKey],
    limit: int,
) -> Optional[List[Tuple[CosetKey, GroupElement, Step]]]:
    """Exhaustive search for a simple walk from ``start`` through every goal coset."""
    budget = [limit]
    start_key = quotient.index.key(start)
    on_path = {start_key}
    hops: List[Tuple[CosetKey, GroupElement, Step]] = []

    def extend(x: GroupElement, remaining: Set[CosetKey], depth: int) -> bool:
        if not remaining:
            return True
        if depth == 0 or budget[0] <= 0:
            return False
        budget[0] -= 1
        for nkey, y, step in quotient.neighbours(x):
            if nkey in on_path:
                continue
            on_path.add(nkey)
            hops.append((nkey, y, step))
            if extend(y, remaining - {nkey}, depth - 1):
                return True
            hops.pop()
            on_path.discard(nkey)
        return False

    for depth in range(max(1, len(goals) - 1), limit):
        if budget[0] <= 0:
            break
        if extend(start, goals - {start_key}, depth):
            return hops
    return None


def build_coset_path(
    S: GeneratorSet,
    delta: Tuple[int, int],
    X: Iterable[GroupElement],
    max_search: int = 20000,
) -> CosetPath:
    """Thread the ``Delta``-cosets met by ``X`` on a path of the quotient Cayley graph.

    Target cosets get representatives centred on their share of ``X``; ``n0`` is the
    smallest grid size that puts all of ``X`` inside ``P + Grid(n0, n0)``.
    """
    spec = S.spec
    g1, g2 = S.gen(delta[0]), S.gen(delta[1])
    index = CosetIndex(spec, (g1, g2))
    points = sorted(set(X))
    if not points:
        return CosetPath(delta=delta, representatives=(spec.zero(),), edge_generators=(), edge_signs=(), n0=0)

    by_coset: Dict[CosetKey, List[GroupElement]] = {}
    for x in points:
        by_coset.setdefault(index.key(x), []).append(x)
    centred = {key: _centre(spec, g1, g2, pts) for key, pts in by_coset.items()}
    n0 = max(need for _, need in centred.values())

    quotient = _Quotient(S, index, delta)
    start = centred[index.key(points[0])][0]
    goals = set(by_coset)
    hops: Optional[List[Tuple[CosetKey, GroupElement, Step]]] = []
    used = {index.key(start)}
    remaining = goals - used
    here = start
    while remaining and hops is not None:
        leg = _nearest(quotient, here, remaining, used, max_search)
        if leg is None:
            logger.debug("greedy coset walk stuck with %d cosets left", len(remaining))
            hops = None
            break
        for key, elt, step in leg:
            used.add(key)
            remaining.discard(key)
        hops.extend(leg)
        here = leg[-1][1]
    if hops is None:
        hops = _backtrack(quotient, start, goals, max_search)
        if hops is None:
            raise InvariantViolation(f"no coset path through {len(goals)} cosets within {max_search} expansions")

    reps = [start]
    gens, signs = [], []
    for key, elt, (k, sigma) in hops:
        if key in centred:
            elt = centred[key][0]
        else:
            elt = spec.add(reps[-1], spec.scale(S.gen(k), sigma))
        reps.append(elt)
        gens.append(k)
        signs.append(sigma)
    path = CosetPath(
        delta=delta,
        representatives=tuple(reps),
        edge_generators=tuple(gens),
        edge_signs=tuple(signs),
        n0=n0,
    )
    logger.debug("coset path through %d cosets, t=%d, N0=%d", len(goals), path.t, n0)
    return path
