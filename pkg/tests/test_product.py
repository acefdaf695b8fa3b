from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import TWO_RAYS, ZIGZAG
from tools.errors import EdgeNotInDecomposition, NotOnRay, ParseError, SpecMismatch, WindowNotStable
from tools.product import (
    PlaneFrame,
    ProductColouring,
    ProductSession,
    RayStream,
    parse_colour,
    parse_decomposition,
    product_standard_colour,
    render_colour,
    round_robin,
)
from tools.verifier import verify_decomposition_window


@lru_cache(maxsize=None)
def zz_session():
    """Z x Z from two zigzag fixtures, two steps in."""
    session = ProductSession(parse_decomposition(ZIGZAG), parse_decomposition(ZIGZAG))
    return session, session.run(2)


@lru_cache(maxsize=None)
def three_colour_session():
    session = ProductSession(parse_decomposition(TWO_RAYS), parse_decomposition(ZIGZAG))
    return session, session.run(2)


def _edge_set(path):
    return {frozenset(pair) for pair in zip(path, path[1:])}


def test_zigzag_positions(zigzag):
    ray = RayStream.parse(zigzag)
    assert [ray[k] for k in range(-4, 5)] == [8, 6, 4, 2, 0, 1, 3, 5, 7]
    assert ray.position_of(7) == 4
    assert ray.position_of(8) == -4
    assert ray.window(-1, 1) == [2, 0, 1]
    assert ray.render() == zigzag


@given(st.integers(-500, 500))
def test_ray_positions_invert(k):
    for ray in parse_decomposition(TWO_RAYS):
        assert ray.position_of(ray[k]) == k


@pytest.mark.parametrize(
    "line",
    [
        "ray X : 4 2 0 1 3 ; left 2m+6 ; right 2m+5",
        "ray X : 4 2 [0] 1 3 ; left 0m+6 ; right 2m+5",
        "ray X : [0] 1 ; left 2m+2 ; right 2m+1",
        "ray X : 4 2 [0] [1] 3 ; left 2m+6 ; right 2m+5",
        "line X : [0] 1",
    ],
)
def test_bad_rays(line):
    with pytest.raises(ParseError):
        RayStream.parse(line)


def test_position_of_unknown_vertex(zigzag):
    with pytest.raises(NotOnRay):
        RayStream.parse(zigzag).position_of(-1)


def test_decomposition_rejects_shared_edges(zigzag):
    with pytest.raises(ParseError):
        parse_decomposition(zigzag + "\n" + zigzag.replace("ray Z", "ray Y"))


def test_two_ray_fixture():
    rays = parse_decomposition(TWO_RAYS)
    assert [r.label for r in rays] == ["A", "B"]
    assert rays[1][0] == 1


def test_standard_colours():
    c = ProductColouring(parse_decomposition(ZIGZAG), parse_decomposition(ZIGZAG))
    assert product_standard_colour(c, (0, 5), (1, 5)) == ("G", 1)
    assert product_standard_colour(c, (3, 0), (3, 1)) == ("H", 1)
    with pytest.raises(EdgeNotInDecomposition):
        product_standard_colour(c, (0, 0), (1, 1))
    with pytest.raises(EdgeNotInDecomposition):
        product_standard_colour(c, (0, 0), (5, 0))


def test_window_edges_partition():
    c = ProductColouring(parse_decomposition(TWO_RAYS), parse_decomposition(ZIGZAG))
    edges = c.window_edges(0, 6)
    assert len(edges) == len(set(edges))
    for e in edges:
        u, v = c.endpoints(e)
        assert max(u + v) <= 6 and min(u + v) >= 0
        assert c.edge_between(u, v) == e
    assert c.window_edges(0, 0) == []


def test_colour_names():
    assert render_colour(("H", 2)) == "H2"
    assert parse_colour("G3") == ("G", 3)
    with pytest.raises(SpecMismatch):
        parse_colour("K1")


def test_plane_frame_is_a_grid():
    c = ProductColouring(parse_decomposition(ZIGZAG), parse_decomposition(ZIGZAG))
    frame = PlaneFrame(c, ("G", 1))
    assert frame.partner == ("H", 1)
    assert frame.name == "R1 x S1"
    for a in range(-5, 6):
        for b in range(-5, 6):
            v = frame.point(0, a, b)
            assert frame.coordinates(v) == (a, b)
            assert c.endpoints(frame.target_edge(0, a, b)) == (v, frame.point(0, a + 1, b))
            assert c.endpoints(frame.partner_edge(0, a, b)) == (v, frame.point(0, a, b + 1))
    assert frame.half_width(2) == 1
    assert frame.half_width(4) == 2
    assert PlaneFrame(c, ("H", 1)).name == "R1 x S1"


def test_round_robin():
    labels = [("G", 1), ("G", 2), ("H", 1)]
    for m in (1, 4, 7):
        picks = [round_robin(labels, k) for k in range(1, 3 * m + 1)]
        assert all(picks.count(col) == m for col in labels)


def test_z_times_z_two_steps():
    session, reports = zz_session()
    assert [r.colour for r in reports] == ["G1", "H1"]
    assert all(r.plane == "R1 x S1" for r in reports)
    first, second = reports
    assert (first.m, first.n, first.half_width, first.n1) == (1, 2, 1, 4)
    assert first.m < first.n < second.m < second.n
    assert _edge_set(session.paths[("G", 1)]).isdisjoint(_edge_set(session.paths[("H", 1)]))
    on_path = set(session.paths[("H", 1)])
    assert all((g, h) in on_path for g in range(second.n + 1) for h in range(second.n + 1))


def test_z_times_z_window():
    session, _ = zz_session()
    report = verify_decomposition_window(session, (0, 2))
    assert report.ok, report.violations
    assert report.inconclusive == []
    assert session.window_edges((0, 0)) == []
    with pytest.raises(WindowNotStable):
        session.window_edges((0, session.n_bound + 1))


def test_three_colour_product():
    session, reports = three_colour_session()
    assert session.colour_labels() == [("G", 1), ("G", 2), ("H", 1)]
    assert [r.colour for r in reports] == ["G1", "G2"]
    assert [r.plane for r in reports] == ["R1 x S1", "R2 x S1"]
    report = verify_decomposition_window(session, (0, 2))
    assert report.ok, report.violations


def test_window_before_any_step(zigzag):
    session = ProductSession(parse_decomposition(zigzag), parse_decomposition(zigzag))
    assert session.window_edges((0, 0)) == []
    with pytest.raises(WindowNotStable):
        session.window_edges((0, 1))
