from functools import lru_cache

import pytest

from conftest import origin_capped, units
from tools.abelian import CoordinateBox, GeneratorSet, GroupSpec
from tools.colouring import Colouring, EdgeRef
from tools.decomposer import Session, extend_path, new_session, stable_window
from tools.errors import (
    EnumerationExhausted,
    HamiltonError,
    InvariantViolation,
    NotOneEnded,
    ParseError,
    WindowNotStable,
)
from tools.verifier import verify_decomposition_window

Z2 = GroupSpec(free_rank=2)
Z3 = GroupSpec(free_rank=3)


@lru_cache(maxsize=None)
def z2_two_steps():
    """A Z^2 session after two steps, with the colouring after each step."""
    session = new_session(units(2))
    snapshots = [session.colouring]
    reports = []
    for _ in range(2):
        reports.append(session.step())
        snapshots.append(session.colouring)
    return session, reports, snapshots


def _edge_set(path):
    return {frozenset(pair) for pair in zip(path, path[1:])}


def test_session_basics(z2, z3):
    session = Session(z2)
    assert session.vertex(0) == (0, 0)
    assert session.vertex(1) == (-1, -1)
    assert session.s == 2
    assert [session.colour_for(n) for n in range(1, 5)] == [1, 2, 1, 2]
    assert Session(z3).s == 3


def test_session_needs_one_end():
    S = GeneratorSet.of(GroupSpec(free_rank=1), [(1,)])
    with pytest.raises(NotOneEnded):
        Session(S)


def test_two_steps_in_z2():
    session, reports, snapshots = z2_two_steps()
    assert [r.colour for r in reports] == [1, 2]
    assert reports[0].box == "[-2,2] x [-2,2]"
    assert reports[0].n1 == 4
    assert session.n == 2

    x1 = set(CoordinateBox.cube(Z2, 2).vertices())
    p1, p2 = session.paths[1], session.paths[2]
    assert x1 <= set(p1)
    assert session.X <= set(p2)
    assert set(p1) <= session.X
    assert _edge_set(p1).isdisjoint(_edge_set(p2))
    assert session.vertex(1) in p1 and session.vertex(1) in p2


def test_later_steps_keep_earlier_edges():
    session, _, snapshots = z2_two_steps()
    before, after = snapshots[1], snapshots[2]
    x1 = set(CoordinateBox.cube(Z2, 2).vertices())
    for v in x1:
        for k in (1, 2):
            e = EdgeRef(v, k)
            if before.endpoints(e)[1] in x1:
                assert before.colour_of(e) == after.colour_of(e)


def test_paths_follow_their_colour():
    session, _, _ = z2_two_steps()
    c = session.colouring
    for col, path in session.paths.items():
        for u, v in zip(path, path[1:]):
            assert any(c.other_end(e, u) == v for e in c.incident_edges(u, col))


def test_stable_window_after_two_steps():
    session, _, _ = z2_two_steps()
    W = CoordinateBox.cube(Z2, 2)
    edges = stable_window(session, W)
    assert len(edges) == 2 * 5 * 4
    assert {col for _, col in edges} == {1, 2}
    report = verify_decomposition_window(session, W)
    assert report.ok, report.violations
    assert report.inconclusive == []


def test_unstable_window():
    session, _, _ = z2_two_steps()
    with pytest.raises(WindowNotStable):
        session.stable_window(CoordinateBox.cube(Z2, 200))


def test_checkpoint_round_trip():
    session, _, _ = z2_two_steps()
    text = session.checkpoint()
    assert text.startswith("group Z^2\ngens (1,0) (0,1)\n")
    restored = Session.restore(text)
    assert restored.n == session.n
    assert restored.colouring == session.colouring
    assert restored.paths == session.paths
    assert restored.X == session.X
    assert restored.checkpoint() == text


def test_restore_rejects_custom_enumeration(z2):
    session = Session(z2, enumeration=iter([(0, 0), (1, 1), (2, 2)]))
    with pytest.raises(ParseError):
        Session.restore(session.checkpoint())


def test_finite_enumeration_runs_out(z2):
    session = Session(z2, enumeration=iter([(0, 0), (1, 1)]))
    assert session.vertex(1) == (1, 1)
    with pytest.raises(EnumerationExhausted) as info:
        session.vertex(2)
    assert isinstance(info.value, HamiltonError)


def test_restore_rejects_bad_path_line():
    text = "group Z^2\ngens (1,0) (0,1)\nenumeration box-spiral\nstep 1\nbox [-2,2] x [-2,2]\npath 1 (0,0)\n"
    with pytest.raises(ParseError):
        Session.restore(text)


def test_one_step_in_z3(z3):
    session = Session(z3)
    report = session.step()
    assert report.colour == 1
    assert report.box == "[-2,2] x [-2,2] x [-2,2]"
    assert set(CoordinateBox.cube(Z3, 2).vertices()) <= set(session.paths[1])
    W = CoordinateBox.cube(Z3, 1)
    report = verify_decomposition_window(session, W)
    assert report.ok, report.violations


def test_extend_path_orientation(z2):
    trace = Colouring.standard(z2).trace((0, 0), 1)
    path = extend_path(trace, [(0, 0), (3, 0)], prev=((0, 0), (1, 0)))
    assert path == tuple((a, 0) for a in range(-1, 5))
    reverse = extend_path(trace, [(0, 0), (3, 0)], prev=((1, 0), (0, 0)))
    assert reverse == path[::-1]


def test_extend_path_needs_double_ray():
    _, _, capped, _ = origin_capped()
    with pytest.raises(InvariantViolation) as info:
        extend_path(capped.trace((0, 4), 1), [(0, 4)])
    assert info.value.condition == 3
