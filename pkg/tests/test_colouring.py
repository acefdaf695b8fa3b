import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from conftest import origin_capped, units
from tools.abelian import CoordinateBox, GeneratorSet, GroupSpec
from tools.colouring import (
    Colouring,
    EdgeRef,
    Square,
    TraceKind,
    apply_switch,
    apply_switches,
    colour_of,
    dumps,
    edges_cross_on_ray,
    incident_edges,
    intervals_interleave,
    is_safe_square,
    loads,
    revert_switch,
    trace_component,
)
from tools.errors import NotOnRay, NotStandardSquare, ParseError, SpecMismatch
from tools.verifier import brute_force_components

ORIGIN_SQUARE = Square((0, 0), (1, 2))


@pytest.fixture
def switched(z2) -> Colouring:
    return apply_switch(Colouring.standard(z2), ORIGIN_SQUARE)


def test_standard_colour_is_generator(z2):
    c = Colouring.standard(z2)
    assert colour_of(c, EdgeRef((5, 7), 2)) == 2
    assert len(c) == 0


def test_switch_swaps_colours(switched):
    assert colour_of(switched, EdgeRef((0, 0), 1)) == 2
    assert colour_of(switched, EdgeRef((0, 1), 1)) == 2
    assert colour_of(switched, EdgeRef((0, 0), 2)) == 1
    assert colour_of(switched, EdgeRef((1, 0), 2)) == 1
    assert len(switched) == 4


def test_incident_edges_after_switch(switched):
    assert set(incident_edges(switched, (0, 0), 1)) == {EdgeRef((-1, 0), 1), EdgeRef((0, 0), 2)}
    assert set(incident_edges(switched, (0, 0), 2)) == {EdgeRef((0, 0), 1), EdgeRef((0, -1), 2)}
    assert incident_edges(switched, (5, 5), 2) == sorted([EdgeRef((5, 4), 2), EdgeRef((5, 5), 2)])


def test_second_switch_is_rejected(switched):
    with pytest.raises(NotStandardSquare):
        apply_switch(switched, ORIGIN_SQUARE)


def test_disjoint_switches(z3):
    c = apply_switches(Colouring.standard(z3), [Square((0, 0, 0), (1, 2)), Square((5, 5, 5), (1, 3))])
    assert len(c) == 8


def test_revert_restores(z2, switched):
    assert revert_switch(switched, ORIGIN_SQUARE) == Colouring.standard(z2)


def test_overlay_drops_standard_entries(z2):
    c = Colouring(z2, {EdgeRef((0, 0), 1): 1})
    assert len(c) == 0


def test_interleave():
    assert intervals_interleave((0, 2), (1, 3))
    assert intervals_interleave((3, 1), (2, 0))
    assert not intervals_interleave((0, 1), (2, 3))
    assert not intervals_interleave((0, 3), (1, 2))


def test_edges_cross_on_ray():
    S = GeneratorSet.of(GroupSpec(free_rank=2), [(1, 0), (0, 1), (2, 0)])
    c = Colouring.standard(S)
    assert edges_cross_on_ray(c, (0, 0), 1, EdgeRef((0, 0), 3), EdgeRef((1, 0), 3))
    assert not edges_cross_on_ray(c, (0, 0), 1, EdgeRef((0, 0), 1), EdgeRef((2, 0), 1))
    with pytest.raises(NotOnRay):
        edges_cross_on_ray(c, (0, 0), 1, EdgeRef((0, 1), 1), EdgeRef((2, 0), 1))


@pytest.mark.parametrize("r", [-5, -4, -3, -2, 2, 3, 4, 5])
def test_multiple_generator_squares_cross(r):
    """g_i = r * g_k: the two i-edges of every (i, j)-square cross on D(x, g_k)."""
    S = GeneratorSet.of(GroupSpec(free_rank=2), [(r, 0), (1, 0), (0, 1)])
    c = Colouring.standard(S)
    for a in range(10):
        x = (3 * a - 7, 2 * a - 9)
        layout = c.layout(Square(x, (1, 2)))
        assert edges_cross_on_ray(c, x, 2, *layout.i_edges)
        assert is_safe_square(c, Square(x, (1, 2)))


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_standard_squares_are_safe(a, b):
    c = Colouring.standard(units(2))
    assert is_safe_square(c, Square((a, b), (1, 2)))
    assert is_safe_square(c, Square((a, b), (2, 1)))


def test_square_on_finite_cycles_is_unsafe():
    _, _, capped, _ = origin_capped()
    assert capped.is_standard_square(Square((0, 0), (2, 1)))
    assert not is_safe_square(capped, Square((0, 0), (2, 1)))


def test_nested_edges_on_one_ray_are_unsafe(switched):
    """Both 2-edges of the square sit on the lower U of the origin switch, and the
    1-edges are nested on it, so switching would close a 2-cycle."""
    sq = Square((0, -2), (1, 2))
    assert switched.is_standard_square(sq)
    ray = switched.trace((0, -2), 2)
    assert ray.is_double_ray and ray.contains((1, -2))
    e1, e2 = switched.layout(sq).i_edges
    p = [ray.position_of(v) for v in switched.endpoints(e1)]
    q = [ray.position_of(v) for v in switched.endpoints(e2)]
    assert not intervals_interleave((p[0], p[1]), (q[0], q[1]))
    assert not is_safe_square(switched, sq)

    after = apply_switch(switched, sq)
    closed = after.trace((0, -1), 2)
    assert closed.is_cycle
    assert closed.vertex_set() == {(0, -1), (0, 0), (1, 0), (1, -1)}


def test_crossing_square_merges_cycle_into_ray():
    """g_1 = 2 g_2: a 1-cycle and the odd 1-line of row 0 meet a square whose 2-edges
    lie on one 2-line with crossing 1-edges."""
    S = GeneratorSet.of(GroupSpec(free_rank=2), [(2, 0), (1, 0), (0, 1)])
    c = apply_switches(Colouring.standard(S), [Square((0, 0), (1, 3)), Square((4, 0), (1, 3))])
    cycle = c.trace((2, 0), 1)
    assert cycle.is_cycle
    assert cycle.vertex_set() == {(2, 0), (4, 0), (4, 1), (2, 1)}
    assert c.trace((1, 0), 1).is_double_ray

    sq = Square((1, 0), (1, 2))
    assert c.is_standard_square(sq)
    assert edges_cross_on_ray(c, (1, 0), 2, *c.layout(sq).i_edges)
    assert is_safe_square(c, sq)

    after = apply_switch(c, sq)
    merged = after.trace((1, 0), 1)
    assert merged.is_double_ray
    assert all(merged.contains(v) for v in cycle.vertex_set() | {(-1, 0), (3, 0), (5, 0)})
    line = after.trace((0, 0), 2)
    assert line.is_double_ray
    assert all(line.contains((a, 0)) for a in range(-2, 7))

    window = _box(-3, 9, -2, 3)
    found = next(comp for comp in brute_force_components(after, window, 1) if (1, 0) in comp.vertices)
    odd_row = {(a, 0) for a in range(-3, 10, 2)}
    assert set(found.vertices) == odd_row | cycle.vertex_set()


@st.composite
def safely_switched(draw) -> Colouring:
    """A Z^2 colouring reached from the standard one by a run of safe switches."""
    c = Colouring.standard(units(2))
    steps = draw(
        st.lists(
            st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.sampled_from([(1, 2), (2, 1)])),
            max_size=6,
        )
    )
    for a, b, gens in steps:
        sq = Square((a, b), gens)
        if c.is_standard_square(sq) and is_safe_square(c, sq):
            c = apply_switch(c, sq)
    return c


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(safely_switched(), st.integers(-5, 5), st.integers(-5, 5), st.sampled_from([(1, 2), (2, 1)]))
def test_safe_switch_conclusions(c, a, b, gens):
    sq = Square((a, b), gens)
    assume(c.is_standard_square(sq) and is_safe_square(c, sq))
    i, j = gens
    layout = c.layout(sq)
    (e1, e2), (f1, f2) = layout.i_edges, layout.j_edges
    x, top = c.endpoints(f1)
    one_ray = c.trace(x, j).contains(c.endpoints(f2)[0])
    c1 = c.trace(c.endpoints(e1)[0], i)
    c2 = c.trace(c.endpoints(e2)[0], i)

    after = apply_switch(c, sq)
    lower, upper = after.trace(x, j), after.trace(top, j)
    assert lower.is_double_ray and upper.is_double_ray
    assert lower.contains(top) == one_ray

    if not c1.contains(c.endpoints(e2)[0]) and (c1.is_cycle or c2.is_cycle):
        merged = after.trace(x, i)
        assert all(merged.contains(v) for v in c1.vertex_set() | c2.vertex_set())

    window = CoordinateBox.hull(c.spec, after.exceptional_vertices() | set(c.square_vertices(sq)), margin=2)
    through = next(comp for comp in brute_force_components(after, window, j) if x in comp.vertices)
    assert through.kind != "cycle"


def test_trace_standard_line(z2):
    t = trace_component(Colouring.standard(z2), (0, 0), 1)
    assert t.kind is TraceKind.DOUBLE_RAY
    assert t.contains((0, 0))
    assert all(tail.check(Colouring.standard(z2)) for tail in t.tails)


def test_trace_after_switch(switched):
    right = switched.trace((1, 0), 1)
    assert right.is_double_ray
    for v in [(1, 0), (1, 1), (5, 0), (5, 1)]:
        assert right.contains(v)
    assert not right.contains((0, 0))
    left = switched.trace((0, 0), 1)
    assert left.is_double_ray
    assert left.contains((0, 1)) and left.contains((-4, 1))
    assert not left.contains((1, 0))


def test_cap_off_cycles_match_brute_force():
    """Every finite cycle in a window is found whole by the component walk."""
    _, _, capped, _ = origin_capped()
    cycles = [comp for comp in brute_force_components(capped, _box(-31, 31, -5, 6), 1) if comp.kind == "cycle"]
    assert len(cycles) == 4
    for comp in cycles:
        t = capped.trace(comp.vertices[0], 1)
        assert t.is_cycle
        assert t.vertex_set() == set(comp.vertices)


def _box(a0, a1, b0, b1):
    return [(a, b) for a in range(a0, a1 + 1) for b in range(b0, b1 + 1)]


@settings(max_examples=200, deadline=None)
@given(st.integers(-15, 15), st.sampled_from([-2, 0, 2, 4]))
def test_safe_switch_merges_components(a, b):
    """Switching a safe square joins the two colour-1 components through it and keeps
    the colour-2 components through it double-rays."""
    _, _, capped, _ = origin_capped()
    sq = Square((a, b), (1, 2))
    assert capped.is_standard_square(sq)
    assert is_safe_square(capped, sq)
    lower, upper = capped.trace((a, b), 1), capped.trace((a, b + 1), 1)
    assert not lower.contains((a, b + 1))
    assert lower.is_cycle or upper.is_cycle

    after = apply_switch(capped, sq)
    window = _box(-31, 31, -6, 7)
    inside = set(window)
    merged = next(comp for comp in brute_force_components(after, window, 1) if (a, b) in comp.vertices)
    expected = (lower.vertex_set() | upper.vertex_set()) & inside
    assert expected <= set(merged.vertices)

    left_column = after.trace((a, b), 2)
    assert left_column.is_double_ray
    assert after.trace((a, b + 1), 2).is_double_ray
    assert not left_column.contains((a, b + 1))


def test_serialization_round_trip(switched):
    text = dumps(switched)
    assert text.splitlines()[0] == "group Z^2"
    assert text.splitlines()[1] == "gens (1,0) (0,1)"
    assert "edge (0,0) gen 1 colour 2" in text.splitlines()
    restored = loads(text)
    assert restored == switched
    assert dumps(restored) == text


@pytest.mark.parametrize(
    "text",
    [
        "edge (0,0) gen 1 colour 2\n",
        "group Z^2\ngens (1,0) (0,1)\nedge (0,0) gen 1\n",
    ],
)
def test_loads_rejects(text):
    with pytest.raises(ParseError):
        loads(text)


def test_loads_rejects_unknown_generator():
    with pytest.raises(SpecMismatch):
        loads("group Z^2\ngens (1,0) (0,1)\nedge (0,0) gen 3 colour 1\n")
