"""Bouncing-rider dynamics on a convex board.

A particle sits on the boundary with a pending move type (1 or 2).  One
step slides it along the pending move's line to the other boundary
intersection (its antipode) and toggles the pending type.  If the line
through the current position meets the board only there — it lies along
an edge or just touches a corner — the antipode is the point itself and
the particle stops.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .geometry import (
    Board,
    InternalInvariantError,
    LocationKind,
    Move,
    Point2,
    parse_point,
    format_point,
)


class NotOnBoundary(ValueError):
    pass


def other(move_type):
    return 3 - move_type


@dataclass(frozen=True)
class ParticleState:
    position: Point2
    move_type: int
    orientation: int = 1


class TrajectoryStatus(enum.Enum):
    CYCLIC = "cyclic"
    STOPPED_BOTH_ENDS = "stopped-both-ends"
    STOPPED_FORWARD = "stopped-forward"
    STOPPED_BACKWARD = "stopped-backward"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class Trajectory:
    """A window of distinct particle positions, in step order.

    points[i] carries pending move type `first_move_type` for even i and
    the other type for odd i.  The status describes what the window saw
    at its two ends: CYCLIC closes back onto points[0]; a "stopped" end
    is genuinely closed (the next antipode is the identity); TRUNCATED
    means the forward end was cut by the step budget while the backward
    end still continues.
    """

    points: tuple
    first_move_type: int
    status: TrajectoryStatus

    def move_type_at(self, index):
        return self.first_move_type if index % 2 == 0 else other(self.first_move_type)

    def segments(self):
        """(start, end, move_type) triples, cyclic windows included."""
        out = [
            (self.points[i], self.points[i + 1], self.move_type_at(i))
            for i in range(len(self.points) - 1)
        ]
        if self.status is TrajectoryStatus.CYCLIC:
            out.append(
                (
                    self.points[-1],
                    self.points[0],
                    self.move_type_at(len(self.points) - 1),
                )
            )
        return out

    def __len__(self):
        return len(self.points)


def antipode(board, move, point):
    """Other boundary intersection of the move line through `point`.

    Returns `point` itself when the line does not cross the interior
    (it supports an edge or touches only at a corner).
    """

    loc = board.classify(point)
    if loc.kind is LocationKind.OUTSIDE:
        raise NotOnBoundary(f"{point} is outside the board")
    if loc.kind is LocationKind.INTERIOR:
        raise NotOnBoundary(f"{point} is interior, not on the boundary")

    # Clip the line point + t * move against every edge half-plane.
    t_lo = None
    t_hi = None
    for edge in board.edges:
        nx, ny = edge.normal
        along = nx * move.c + ny * move.d
        height = edge.side_of(point)
        if along == 0:
            if height == 0:
                return point  # the move line lies along this edge
            continue
        t = -Fraction(height, along)
        if along > 0:
            if t_lo is None or t > t_lo:
                t_lo = t
        else:
            if t_hi is None or t < t_hi:
                t_hi = t
    if t_lo == t_hi:
        return point  # line touches the board only at this corner
    t = t_lo if t_lo != 0 else t_hi
    return Point2(point.x + t * move.c, point.y + t * move.d)


def attack_map(board, moves, state):
    """One step of the dynamics; None when the particle stops."""
    move = moves[state.move_type - 1]
    landing = antipode(board, move, state.position)
    if landing == state.position:
        return None
    delta = landing.x - state.position.x
    if move.c != 0:
        t = delta / move.c
    else:
        t = (landing.y - state.position.y) / move.d
    return ParticleState(landing, other(state.move_type), 1 if t > 0 else -1)


def trace(board, moves, start, first_move_type, max_points=10_000):
    """Follow the dynamics from a boundary point into a Trajectory.

    Stops on a genuine halt, on cycle closure, or after `max_points`
    positions.  A revisited position that is not the cycle closure is
    impossible for these dynamics and raises InternalInvariantError.
    """

    if first_move_type not in (1, 2):
        raise ValueError(f"move type must be 1 or 2, got {first_move_type}")
    start = start if isinstance(start, Point2) else Point2(*start)
    points = [start]
    seen = {start}
    current = start
    move_type = first_move_type
    forward_stopped = False
    cyclic = False
    while True:
        landing = antipode(board, moves[move_type - 1], current)
        if landing == current:
            forward_stopped = True
            break
        next_type = other(move_type)
        if landing == start and next_type == first_move_type:
            cyclic = True
            break
        if landing in seen:
            raise InternalInvariantError(
                f"position {landing} revisited without closing a cycle"
            )
        if len(points) == max_points:
            break
        points.append(landing)
        seen.add(landing)
        current = landing
        move_type = next_type

    if cyclic:
        status = TrajectoryStatus.CYCLIC
    else:
        backward_move = moves[other(first_move_type) - 1]
        backward_stopped = antipode(board, backward_move, start) == start
        if forward_stopped:
            status = (
                TrajectoryStatus.STOPPED_BOTH_ENDS
                if backward_stopped
                else TrajectoryStatus.STOPPED_FORWARD
            )
        else:
            status = (
                TrajectoryStatus.STOPPED_BACKWARD
                if backward_stopped
                else TrajectoryStatus.TRUNCATED
            )
    return Trajectory(tuple(points), first_move_type, status)


def corner_trajectories(board, moves, max_points=10_000):
    """Trace from every corner with each move type first.

    Returns 2n trajectories for an n-corner board, in corner order with
    move type 1 first; coinciding ones are retained so callers can index
    by (corner, first type).
    """

    out = []
    for corner in board.corners:
        for move_type in (1, 2):
            out.append(trace(board, moves, corner, move_type, max_points))
    return out


@dataclass(frozen=True)
class AugmentedTrajectory:
    """A trajectory window with one extra step glued onto each open end.

    core_range marks where the original window sits inside `points`.
    For a cyclic window the augmentation repeats points[0] at the end
    instead, and `cyclic` is set.
    """

    points: tuple
    core_range: tuple
    first_segment_type: int
    cyclic: bool = False

    def segment_type(self, index):
        return (
            self.first_segment_type
            if index % 2 == 0
            else other(self.first_segment_type)
        )

    def segments(self):
        return [
            (self.points[i], self.points[i + 1], self.segment_type(i))
            for i in range(len(self.points) - 1)
        ]


def augment(board, moves, trajectory):
    """Extend a trajectory one antipode step past each open end."""
    pts = list(trajectory.points)
    first = trajectory.first_move_type
    if trajectory.status is TrajectoryStatus.CYCLIC:
        return AugmentedTrajectory(
            tuple(pts + [pts[0]]), (0, len(pts) - 1), first, cyclic=True
        )
    prepended = False
    if trajectory.status in (
        TrajectoryStatus.STOPPED_FORWARD,
        TrajectoryStatus.TRUNCATED,
    ):
        # the backward end continues: step with the other move type
        before = antipode(board, moves[other(first) - 1], pts[0])
        if before == pts[0]:
            raise InternalInvariantError(
                f"status {trajectory.status} claims an open backward end "
                f"but the antipode at {pts[0]} is the identity"
            )
        pts.insert(0, before)
        prepended = True
    if trajectory.status in (
        TrajectoryStatus.STOPPED_BACKWARD,
        TrajectoryStatus.TRUNCATED,
    ):
        end_type = trajectory.move_type_at(len(trajectory.points) - 1)
        after = antipode(board, moves[end_type - 1], pts[-1])
        if after == pts[-1]:
            raise InternalInvariantError(
                f"status {trajectory.status} claims an open forward end "
                f"but the antipode at {pts[-1]} is the identity"
            )
        pts.append(after)
    core_lo = 1 if prepended else 0
    core_hi = core_lo + len(trajectory.points) - 1
    first_segment = other(first) if prepended else first
    return AugmentedTrajectory(tuple(pts), (core_lo, core_hi), first_segment)


def format_trajectory(trajectory):
    """Plain-text form: header lines, then one point per line."""
    lines = [
        f"first_move_type {trajectory.first_move_type}",
        f"status {trajectory.status.value}",
        f"points {len(trajectory.points)}",
    ]
    lines.extend(format_point(p) for p in trajectory.points)
    return "\n".join(lines) + "\n"


def parse_trajectory(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    header = {}
    body = []
    for line in lines:
        if "," in line:
            body.append(parse_point(line))
        else:
            key, _, value = line.partition(" ")
            header[key] = value
    status = TrajectoryStatus(header["status"])
    first = int(header["first_move_type"])
    if "points" in header and int(header["points"]) != len(body):
        raise ValueError(
            f"header says {header['points']} points, found {len(body)}"
        )
    return Trajectory(tuple(body), first, status)
