from functools import lru_cache
from pathlib import Path
from typing import List

import pytest

from tools.abelian import GeneratorSet, GroupSpec
from tools.colouring import Colouring
from tools.covering import CoveringReport, cap_off, cover_with_report, plan
from tools.settings import get_settings

ZIGZAG = "ray Z : 4 2 [0] 1 3 ; left 2m+6 ; right 2m+5"

TWO_RAYS = """\
# two edge-disjoint Hamiltonian double-rays of a 4-regular graph on the naturals
ray A : 4 2 [0] 1 3 ; left 2m+6 ; right 2m+5
ray B : 12 11 8 7 0 3 4 [1] 2 5 6 9 10 ; left 4m+15 4m+16 ; right 4m+13 4m+14
"""


def units(n: int) -> GeneratorSet:
    spec = GroupSpec(free_rank=n)
    return GeneratorSet.of(spec, [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)])


def torsion_gens() -> GeneratorSet:
    """Z^2 x Z_3 with S = {(1,0,0), (0,1,0), (1,1,1)}."""
    spec = GroupSpec(free_rank=2, torsion_orders=(3,))
    return GeneratorSet.of(spec, [(1, 0, 0), (0, 1, 0), (1, 1, 1)])


def grid(n: int, m: int) -> List[tuple]:
    """Vertices of Grid(n, m) around the origin of Z^2."""
    return [(a, b) for a in range(-n, n + 1) for b in range(-m + 1, m + 1)]


@lru_cache(maxsize=None)
def origin_cover() -> CoveringReport:
    """Cover {(0,0)} in Z^2 by colour 1, starting from the standard colouring."""
    return cover_with_report(Colouring.standard(units(2)), [(0, 0)], 1)


@lru_cache(maxsize=None)
def origin_capped():
    c = Colouring.standard(units(2))
    p = plan(c, [(0, 0)], 1)
    capped, report = cap_off(c, p)
    return c, p, capped, report


@pytest.fixture
def z2() -> GeneratorSet:
    return units(2)


@pytest.fixture
def z3() -> GeneratorSet:
    return units(3)


@pytest.fixture
def z2z3() -> GeneratorSet:
    return torsion_gens()


@pytest.fixture
def zigzag() -> str:
    return ZIGZAG


@pytest.fixture
def two_rays() -> str:
    return TWO_RAYS


@pytest.fixture(autouse=True)
def data_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    path = tmp_path / "data"
    monkeypatch.setenv("HAMILTON_TOOLS_DATA_DIR", str(path))
    get_settings.cache_clear()
    yield path
    get_settings.cache_clear()
