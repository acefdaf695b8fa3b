import pytest

from conftest import grid, origin_capped, origin_cover, torsion_gens, units
from tools.abelian import CoordinateBox, GroupSpec
from tools.colouring import Colouring, EdgeRef, Square, apply_switch, dumps
from tools.covering import (
    GridSizes,
    alpha_values,
    cap_off_sites,
    check_almost_standard,
    combine_cycles,
    combine_sites,
    cover,
    cover_with_report,
    frame_for,
    plan,
    region_c,
)
from tools.errors import NotAlmostStandard, SpecMismatch
from tools.verifier import verify_covering


def test_grid_sizes():
    sizes = GridSizes.from_n1(1, 4)
    assert (sizes.n2, sizes.n3) == (20, 28)
    assert sizes.is_nested()
    assert not GridSizes(n0=1, n1=4, n2=10, n3=28).is_nested()


def test_plan_single_point(z2):
    p = plan(Colouring.standard(z2), [(0, 0)], 1)
    assert (p.target, p.partner) == (1, 2)
    assert p.t == 0
    assert (p.n0, p.n1, p.n2, p.n3) == (1, 4, 20, 28)
    assert len(p.reservation) == 0


def test_plan_box_relabelled(z2):
    X = list(CoordinateBox.cube(GroupSpec(free_rank=2), 2).vertices())
    p = plan(Colouring.standard(z2), X, 2)
    assert (p.target, p.partner) == (2, 1)
    assert p.relabelling(2) == {2: 1, 1: 2}
    assert (p.n0, p.n1) == (3, 4)


def test_plan_torsion_reserves_rays(z2z3):
    p = plan(Colouring.standard(z2z3), [(0, 0, 0), (0, 0, 1)], 1)
    assert p.partner == 2
    assert p.t >= 1
    assert len(p.reservation.rays) == p.t
    assert all(len(row) == p.t for row in p.reservation.rays)
    assert all(ray.gen == 3 for row in p.reservation.rays for ray in row)
    c = Colouring.standard(z2z3)
    edges = [e for sq in p.reservation.squares() for e in c.layout(sq).edges]
    assert len(edges) == len(set(edges))


def test_plan_rejects_broken_colouring(z2):
    broken = Colouring(z2, {EdgeRef((0, 0), 1): 2})
    with pytest.raises(NotAlmostStandard):
        check_almost_standard(broken)
    with pytest.raises(NotAlmostStandard):
        plan(broken, [(0, 0)], 1)


@pytest.mark.parametrize("colour", [0, 3, -1])
def test_cover_rejects_unknown_colour(z2, colour):
    with pytest.raises(SpecMismatch):
        cover_with_report(Colouring.standard(z2), [(0, 0)], colour)
    with pytest.raises(SpecMismatch):
        plan(Colouring.standard(z2), [(0, 0)], colour)


def test_cap_off_sites():
    right, left = cap_off_sites(1, GridSizes.from_n1(1, 4))
    assert right == [(0, 27, 3), (0, 25, 1), (0, 23, -1), (0, 21, -3)]
    assert left == [(0, -28, 3), (0, -26, 1), (0, -24, -1), (0, -22, -3)]


def test_cap_off_makes_cycles():
    c, p, capped, report = origin_capped()
    assert report.switched == 2 * p.n1
    region = region_c(frame_for(c, p), p.sizes)
    assert set(grid(p.n2, p.n1)) <= region
    for v in region:
        for e in capped.incident_edges(v, 1):
            assert capped.other_end(e, v) in region

    top = capped.trace((0, p.n1), 1)
    assert top.is_cycle
    assert any(abs(a) > p.n2 for a, _ in top.vertex_set())
    assert any(abs(a) <= p.n1 for a, _ in top.vertex_set())
    for v in [(0, 0), (21, -3), (27, 4), (-28, 3)]:
        assert capped.trace(v, 2).is_double_ray


def test_combine_cycles_merges_annulus():
    c, p, capped, report = origin_capped()
    combined, combine_report = combine_cycles(capped, p, report)
    assert combine_report.switched == p.n1 - 1
    alpha = combine_report.cosets[0].alpha
    assert len(alpha) == p.n1
    assert alpha[0] == 1
    assert len(set(alpha)) == len(alpha)

    big = combined.trace((p.n2 - 1, 0), 1)
    assert big.is_cycle
    annulus = set(grid(p.n2, p.n1)) - set(grid(p.n0, p.n0))
    assert annulus <= big.vertex_set()
    for v in [(0, 0), (19, 2), (14, 0), (-5, -3)]:
        assert combined.trace(v, 2).is_double_ray


def test_combine_sites_and_alpha():
    c, p, capped, _ = origin_capped()
    sites = combine_sites(p.sizes)
    assert len(sites) > 0
    alpha = alpha_values(frame_for(c, p), capped, 0, p.sizes)
    assert alpha[0] == 1
    assert alpha == sorted(alpha)


def test_cover_single_point():
    result = origin_cover()
    summary = result.summary()
    assert summary["cap_off_switches"] == 8
    assert summary["combine_switches"] == 3
    assert summary["ray_choices"] == []
    assert summary["absorption"] == [0, 2, 4]
    assert summary["exceptional_edges"] == 48
    assert summary["exceptional_edges"] <= 4 * (2 * 4 + 4 * 4 - 2 + 1)

    c_hat = result.colouring
    ray = c_hat.trace((0, 0), 1)
    assert ray.is_double_ray
    assert all(ray.contains(v) for v in grid(4, 4))
    assert verify_covering(Colouring.standard(units(2)), c_hat, [(0, 0)], 1).ok


def test_cover_is_deterministic(z2):
    first = cover(Colouring.standard(z2), [(0, 0), (3, 1)], 1)
    second = cover(Colouring.standard(z2), [(3, 1), (0, 0)], 1)
    assert dumps(first) == dumps(second)


def test_cover_second_colour(z2):
    X = list(CoordinateBox.cube(GroupSpec(free_rank=2), 2).vertices())
    c = Colouring.standard(z2)
    c_hat = cover(c, X, 2)
    report = verify_covering(c, c_hat, X, 2)
    assert report.ok, report.violations


def test_cover_torsion_colour_three():
    S = torsion_gens()
    c = Colouring.standard(S)
    X = [(0, 0, 0), (0, 0, 1)]
    result = cover_with_report(c, X, 3)
    assert result.plan.t >= 1
    assert len(result.combine.ray_choices) == result.plan.t
    report = verify_covering(c, result.colouring, X, 3)
    assert report.ok, report.violations
    ray = result.colouring.trace((0, 0, 0), 3)
    assert ray.contains((0, 0, 1))
    assert {v[2] for v in ray.vertex_set()} == {0, 1, 2}


@pytest.mark.slow
def test_cover_preserves_earlier_covering(z2):
    first = origin_cover().colouring
    X = list(CoordinateBox.cube(GroupSpec(free_rank=2), 2).vertices())
    second = cover(first, X, 2)
    for x in X:
        for k in (1, 2):
            e = EdgeRef(x, k)
            if first.endpoints(e)[1] in X:
                assert first.colour_of(e) == second.colour_of(e)
    assert verify_covering(first, second, X, 2).ok


@pytest.mark.slow
def test_cover_again_on_covered_set():
    first = origin_cover().colouring
    again = cover(first, [(0, 0)], 1)
    assert verify_covering(first, again, [(0, 0)], 1).ok


def test_switch_inside_target_set_is_reported(z2):
    c = Colouring.standard(z2)
    X = list(CoordinateBox.cube(GroupSpec(free_rank=2), 1).vertices())
    bad = apply_switch(c, Square((0, 0), (1, 2)))
    report = verify_covering(c, bad, X, 1)
    assert not report.ok
    assert any(v.startswith("(a)") for v in report.violations)
