"""Floating-point bounce simulation.

A cheap numerical companion to the exact dynamics: the particle moves
along lines of two fixed slopes, alternating, and each step jumps to
the far intersection of the current line with the board boundary.
Useful for watching long orbits converge toward an attractor without
paying for exact arithmetic, and for probing slope pairs outside the
exactly-analyzed families.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import hypot, inf


@dataclass(frozen=True)
class FloatPath:
    points: tuple  # (x, y) float pairs, start included
    stopped: bool
    stop_reason: str | None  # "halt" | "corner" | None
    distances: tuple | None  # min distance to limit_set, per point


def _min_distance(x, y, limit_set):
    return min(hypot(x - lx, y - ly) for lx, ly in limit_set)


def simulate_float(
    board,
    slopes,
    start,
    first_move_type=1,
    steps=1000,
    limit_set=None,
    tol=1e-9,
):
    """Bounce from start for at most the given number of steps.

    slopes are the two line slopes (finite; use the exact machinery for
    vertical moves).  Stops early when the far intersection is the
    current point (a closed end) or lands within tol of a corner.
    """

    dirs = (1.0, float(slopes[0])), (1.0, float(slopes[1]))
    edges = [
        (float(e.normal[0]), float(e.normal[1]), float(e.offset))
        for e in board.edges
    ]
    corners = [(float(c.x), float(c.y)) for c in board.corners]
    x, y = float(start[0]), float(start[1])
    reference = None
    if limit_set is not None:
        reference = [(float(p[0]), float(p[1])) for p in limit_set]

    points = [(x, y)]
    dists = [_min_distance(x, y, reference)] if reference else None
    move_type = first_move_type
    stopped = False
    reason = None
    for _ in range(steps):
        dx, dy = dirs[move_type - 1]
        t_lo, t_hi = -inf, inf
        for nx, ny, off in edges:
            along = nx * dx + ny * dy
            height = nx * x + ny * y - off
            if abs(along) < 1e-15:
                continue
            bound = -height / along
            if along > 0:
                t_lo = max(t_lo, bound)
            else:
                t_hi = min(t_hi, bound)
        t = t_lo if abs(t_lo) > abs(t_hi) else t_hi
        if abs(t) <= tol:
            stopped = True
            reason = "halt"
            break
        x, y = x + t * dx, y + t * dy
        points.append((x, y))
        if dists is not None:
            dists.append(_min_distance(x, y, reference))
        move_type = 3 - move_type
        if min(hypot(x - cx, y - cy) for cx, cy in corners) <= tol:
            stopped = True
            reason = "corner"
            break
    return FloatPath(
        tuple(points),
        stopped,
        reason,
        tuple(dists) if dists is not None else None,
    )
