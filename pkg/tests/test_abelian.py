import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tools.abelian import (
    CoordinateBox,
    GeneratorSet,
    GroupSpec,
    IntegerLattice,
    box_spiral,
    build_coset_path,
    is_free_rank_two,
    partner_generator,
    solve_multiple,
    xgcd,
)
from tools.errors import InvalidGenerators, NotOneEnded, ParseError, SpecMismatch, TorsionGenerator

Z2 = GroupSpec(free_rank=2)
Z2_Z3 = GroupSpec(free_rank=2, torsion_orders=(3,))
Z_Z2 = GroupSpec(free_rank=1, torsion_orders=(2,))


@st.composite
def torsion_elements(draw, spec: GroupSpec = Z2_Z3, bound: int = 30):
    free = [draw(st.integers(-bound, bound)) for _ in range(spec.free_rank)]
    tail = [draw(st.integers(-bound, bound)) for _ in spec.torsion_orders]
    return tuple(free + tail)


def test_parse_and_render():
    spec = GroupSpec.parse("Z^2 x Z_3")
    assert spec == Z2_Z3
    assert spec.render() == "Z^2 x Z_3"
    assert GroupSpec.parse(spec.render()) == spec
    assert GroupSpec.parse("Z").free_rank == 1


@pytest.mark.parametrize("text", ["", "Q^2", "Z_3 x Z", "Z^2 x Z_1"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        GroupSpec.parse(text)


def test_normalize_examples():
    assert Z2_Z3.normalize((1, -2, 5)) == (1, -2, 2)
    assert Z2.normalize((0, 0)) == Z2.zero()
    assert Z_Z2.normalize((-1, -1)) == (-1, 1)


def test_normalize_wrong_length():
    with pytest.raises(SpecMismatch):
        Z2_Z3.normalize((1, 2))


@given(torsion_elements(), st.integers(-5, 5))
def test_normal_form_is_unique(raw, k):
    shifted = (raw[0], raw[1], raw[2] + 3 * k)
    assert Z2_Z3.normalize(raw) == Z2_Z3.normalize(shifted)
    assert 0 <= Z2_Z3.normalize(raw)[2] < 3


@given(torsion_elements(), torsion_elements())
def test_add_sub_inverse(x, y):
    x, y = Z2_Z3.normalize(x), Z2_Z3.normalize(y)
    assert Z2_Z3.sub(Z2_Z3.add(x, y), y) == x


def test_solve_multiple_examples():
    assert solve_multiple(Z2, (3, 6), (1, 2)) == 3
    assert solve_multiple(Z2, (3, 5), (1, 2)) is None
    assert solve_multiple(Z2_Z3, (2, 0, 1), (1, 0, 2)) == 2


@given(torsion_elements(bound=6), st.integers(-100, 100))
def test_solve_multiple_recovers_k(g, k):
    g = Z2_Z3.normalize(g)
    if not Z2_Z3.has_infinite_order(g):
        return
    assert solve_multiple(Z2_Z3, Z2_Z3.scale(g, k), g) == k


def test_is_free_rank_two_examples():
    assert is_free_rank_two(Z2, (1, 0), (0, 1))
    assert not is_free_rank_two(Z2, (1, 2), (2, 4))
    assert is_free_rank_two(Z2_Z3, (1, 0, 0), (1, 1, 1))


def _small_corpus():
    frees = [(1, 0), (0, 1), (1, 1), (2, 0), (1, 2), (2, 4), (-1, 1), (0, 0)]
    return [f + (t,) for f in frees for t in (0, 1)]


def test_is_free_rank_two_matches_brute_force():
    corpus = _small_corpus()
    for g1, g2 in itertools.product(corpus, repeat=2):
        related = any(
            Z2_Z3.combine(Z2_Z3.zero(), ((a, g1), (b, g2))) == Z2_Z3.zero()
            for a in range(-6, 7)
            for b in range(-6, 7)
            if (a, b) != (0, 0)
        )
        assert is_free_rank_two(Z2_Z3, g1, g2) == (not related), (g1, g2)


def test_generator_set_rejects_torsion():
    with pytest.raises(TorsionGenerator):
        GeneratorSet.of(Z2_Z3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.mark.parametrize(
    "gens",
    [
        [(1, 0), (-1, 0), (0, 1)],
        [(2, 0), (0, 1)],
        [(1, 0), (1, 0), (0, 1)],
    ],
)
def test_generator_set_rejects(gens):
    with pytest.raises(InvalidGenerators):
        GeneratorSet.of(Z2, gens)


def test_partner_generator(z2, z2z3):
    assert partner_generator(z2, 1) == 2
    assert partner_generator(z2, 2) == 1
    S = GeneratorSet.of(Z2, [(1, 0), (2, 0), (0, 1)])
    assert partner_generator(S, 1) == 3
    assert partner_generator(z2z3, 3) == 1


def test_generator_index_range(z2):
    assert z2.gen(2) == (0, 1)
    for i in (0, 3):
        with pytest.raises(SpecMismatch):
            z2.gen(i)


def test_partner_generator_needs_rank_two():
    S = GeneratorSet.of(GroupSpec(free_rank=1), [(1,)])
    with pytest.raises(NotOneEnded):
        partner_generator(S, 1)


def test_coset_path_single_point(z2):
    path = build_coset_path(z2, (1, 2), [(0, 0)])
    assert path.representatives == ((0, 0),)
    assert path.t == 0
    assert path.n0 == 1


def test_coset_path_box(z2):
    X = list(CoordinateBox.cube(Z2, 2).vertices())
    path = build_coset_path(z2, (1, 2), X)
    assert path.t == 0
    assert path.n0 == 3
    assert path.problems(z2, X) == []


def test_coset_path_torsion(z2z3):
    X = [(0, 0, 0), (0, 0, 1)]
    path = build_coset_path(z2z3, (1, 2), X)
    assert path.t >= 1
    assert len(path.representatives) == path.t + 1
    assert all(k not in (1, 2) for k in path.edge_generators)
    assert path.problems(z2z3, X) == []


@given(st.sets(torsion_elements(bound=4), min_size=1, max_size=6))
def test_coset_path_is_valid(points):
    S = GeneratorSet.of(Z2_Z3, [(1, 0, 0), (0, 1, 0), (1, 1, 1)])
    X = [Z2_Z3.normalize(x) for x in points]
    for delta in ((1, 2), (3, 1)):
        path = build_coset_path(S, delta, X)
        assert path.problems(S, X) == []


def test_box_spiral_order():
    first = list(itertools.islice(box_spiral(Z2), 9))
    assert first[0] == (0, 0)
    assert first[1] == (-1, -1)
    assert set(first) == set(CoordinateBox.cube(Z2, 1).vertices())
    assert list(itertools.islice(box_spiral(Z2_Z3), 3)) == [(0, 0, 0), (0, 0, 1), (0, 0, 2)]


def test_box_spiral_has_no_repeats():
    seen = list(itertools.islice(box_spiral(Z2_Z3), 500))
    assert len(set(seen)) == len(seen)


def test_coordinate_box():
    box = CoordinateBox.hull(Z2_Z3, [(3, -1, 2), (0, 2, 0)], margin=1)
    assert box.render() == "[-4,4] x [-4,4]"
    assert box.size() == 81 * 3
    assert (4, -4, 1) in box
    assert len(list(box.vertices())) == box.size()


def test_xgcd():
    for a, b in [(12, 18), (7, 5), (0, 4), (-6, 9)]:
        x, y, g = xgcd(a, b)
        assert g == math.gcd(a, b)
        assert a * x + b * y == g


def test_lattice_membership():
    lattice = IntegerLattice.spanned_by(3, [(1, 1, 1), (1, 0, 0), (0, 0, 3)])
    assert (0, 1, 1) in lattice
    assert (0, 1, 0) not in lattice
    assert lattice.rank == 3
    assert Z2_Z3.generates([(1, 0, 0), (0, 1, 0), (1, 1, 1)])
    assert not Z2_Z3.generates([(1, 0, 0), (0, 1, 0)])
