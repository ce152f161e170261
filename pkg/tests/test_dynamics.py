from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from riderflow import (
    Board,
    InternalInvariantError,
    NotOnBoundary,
    ParticleState,
    Point2,
    TrajectoryStatus,
    antipode,
    attack_map,
    augment,
    canonical_move,
    corner_trajectories,
    format_trajectory,
    parse_trajectory,
    trace,
)

from conftest import boundary_points, move_pairs

F = Fraction
INCLINED = (canonical_move(2, 1), canonical_move(1, 2))
ORTH = (canonical_move(2, 1), canonical_move(1, -2))
BISHOP = (canonical_move(1, 1), canonical_move(1, -1))


def test_antipode_basic(square):
    m = canonical_move(2, 1)
    assert antipode(square, m, Point2(0, 0)) == Point2(1, F(1, 2))
    assert antipode(square, m, Point2(1, F(1, 2))) == Point2(0, 0)
    # line through (1,0) in direction (2,1) leaves the board immediately
    assert antipode(square, m, Point2(1, 0)) == Point2(1, 0)


def test_antipode_edge_supporting_line(square):
    horizontal = canonical_move(1, 0)
    assert antipode(square, horizontal, Point2(F(1, 2), 0)) \
        == Point2(F(1, 2), 0)
    vertical = canonical_move(0, 1)
    assert antipode(square, vertical, Point2(F(1, 2), 0)) \
        == Point2(F(1, 2), 1)


def test_antipode_rejects_off_boundary(square):
    with pytest.raises(NotOnBoundary):
        antipode(square, INCLINED[0], Point2(2, 2))
    with pytest.raises(NotOnBoundary):
        antipode(square, INCLINED[0], Point2(F(1, 2), F(1, 2)))


@given(st.data())
@settings(max_examples=200)
def test_antipode_involution_square(data):
    board = Board.square()
    p = data.draw(boundary_points(board))
    a, b = data.draw(move_pairs())
    for move in (a, b):
        q = antipode(board, move, p)
        assert antipode(board, move, q) == p


@given(st.data())
@settings(max_examples=200)
def test_antipode_involution_pentagon(data):
    board = Board.from_corners(
        [(0, 0), (1, 0), (F(3, 2), 1), (F(1, 2), 2), (F(-1, 2), 1)]
    )
    p = data.draw(boundary_points(board))
    a, b = data.draw(move_pairs())
    for move in (a, b):
        q = antipode(board, move, p)
        assert antipode(board, move, q) == p


def test_attack_map_step_and_orientation(square):
    state = ParticleState(Point2(0, 0), 1)
    nxt = attack_map(square, INCLINED, state)
    assert nxt.position == Point2(1, F(1, 2))
    assert nxt.move_type == 2
    assert nxt.orientation == 1
    stopped = attack_map(square, INCLINED, ParticleState(Point2(1, 0), 1))
    assert stopped is None


def test_trace_five_point_window(square):
    t = trace(square, ORTH, Point2(0, 0), 1, max_points=5)
    assert t.status is TrajectoryStatus.STOPPED_BACKWARD
    assert t.points == (
        Point2(0, 0),
        Point2(1, F(1, 2)),
        Point2(F(3, 4), 1),
        Point2(0, F(5, 8)),
        Point2(F(5, 16), 0),
    )
    assert [t.move_type_at(i) for i in range(4)] == [1, 2, 1, 2]


def test_trace_truncation(square):
    t = trace(square, INCLINED, Point2(0, 0), 1, max_points=7)
    assert t.status is TrajectoryStatus.TRUNCATED
    assert len(t.points) == 7


def test_trace_cycle_closure(square):
    t = trace(square, ORTH, Point2(F(1, 3), 0), 1, max_points=50)
    assert t.status is TrajectoryStatus.CYCLIC
    assert t.points == (
        Point2(F(1, 3), 0),
        Point2(1, F(1, 3)),
        Point2(F(2, 3), 1),
        Point2(0, F(2, 3)),
    )


def test_trace_cycle_at_exact_cap(square):
    # closure must be recognized even when the cap equals the length
    t = trace(square, ORTH, Point2(F(1, 3), 0), 1, max_points=4)
    assert t.status is TrajectoryStatus.CYCLIC


def test_trace_stopped_both_ends(square):
    moves = (canonical_move(10, 3), canonical_move(5, -2))
    t = trace(square, moves, Point2(0, 0), 1)
    assert t.status is TrajectoryStatus.STOPPED_BOTH_ENDS
    assert t.points == (
        Point2(0, 0),
        Point2(1, F(3, 10)),
        Point2(0, F(7, 10)),
        Point2(1, 1),
    )


def test_trace_stopped_forward_only(square):
    moves = (canonical_move(10, 3), canonical_move(5, -2))
    # start one step into the previous window: backward end still open
    t = trace(square, moves, Point2(1, F(3, 10)), 2)
    assert t.status is TrajectoryStatus.STOPPED_FORWARD
    assert t.points[-1] == Point2(1, 1)


def test_corner_trajectories_square(square):
    ts = corner_trajectories(square, ORTH, max_points=16)
    assert len(ts) == 8
    assert [t.points[0] for t in ts] == [
        c for c in square.corners for _ in (1, 2)
    ]
    assert [t.first_move_type for t in ts] == [1, 2] * 4


def test_augment_two_point_window(square):
    window = trace(square, INCLINED, Point2(0, 0), 1, max_points=2)
    assert window.status is TrajectoryStatus.TRUNCATED
    aug = augment(square, INCLINED, window)
    assert aug.points == (
        Point2(F(1, 2), 1),
        Point2(0, 0),
        Point2(1, F(1, 2)),
        Point2(F(3, 4), 0),
    )
    assert aug.core_range == (1, 2)
    assert aug.first_segment_type == 2
    assert [seg[2] for seg in aug.segments()] == [2, 1, 2]


def test_augment_keeps_stopped_ends(square):
    moves = (canonical_move(10, 3), canonical_move(5, -2))
    window = trace(square, moves, Point2(0, 0), 1)
    aug = augment(square, moves, window)
    assert aug.points == window.points
    assert aug.core_range == (0, 3)


def test_augment_cyclic_repeats_first_point(square):
    cycle = trace(square, ORTH, Point2(F(1, 3), 0), 1, max_points=8)
    aug = augment(square, ORTH, cycle)
    assert aug.cyclic
    assert aug.points == cycle.points + (cycle.points[0],)
    assert len(aug.segments()) == 4


def test_trajectory_text_round_trip(square):
    for start, first in [(Point2(0, 0), 1), (Point2(F(1, 3), 0), 1)]:
        t = trace(square, ORTH, start, first, max_points=12)
        assert parse_trajectory(format_trajectory(t)) == t


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_trace_respects_cap_and_alternates(data):
    board = Board.square()
    p = data.draw(boundary_points(board))
    moves = data.draw(move_pairs())
    first = data.draw(st.sampled_from((1, 2)))
    t = trace(board, moves, p, first, max_points=24)
    assert 1 <= len(t.points) <= 24
    assert len(set(t.points)) == len(t.points)
    for i in range(len(t.points) - 1):
        move = moves[t.move_type_at(i) - 1]
        dx = t.points[i + 1].x - t.points[i].x
        dy = t.points[i + 1].y - t.points[i].y
        assert dx * move.d - dy * move.c == 0


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_augment_round_trip_on_random_windows(data):
    board = Board.square()
    p = data.draw(boundary_points(board))
    moves = data.draw(move_pairs())
    first = data.draw(st.sampled_from((1, 2)))
    cap = data.draw(st.integers(2, 8))
    t = trace(board, moves, p, first, max_points=cap)
    aug = augment(board, moves, t)
    lo, hi = aug.core_range
    assert aug.points[lo:hi + 1] == t.points
    assert aug.segment_type(lo) == t.first_move_type \
        or lo == hi  # one-point windows carry no segments
