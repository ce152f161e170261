"""Denominators of nonattacking-placement counting functions.

For q riders on a board, the counting function's period structure is
governed by the vertices of an inside-out polytope; every vertex
coordinate traces back to boundary points of short trajectory windows
and to interior crossings of their augmentations.  This module gathers
those generating points exactly:

  * points on rigid cycles of length at most q,
  * points on trajectory windows of length at most q through a corner,
  * interior self-crossings of one augmented window of length at most
    q - 1 containing a corner (or a whole rigid cycle),
  * interior crossings of two such augmented windows with total length
    at most q - 1,

and reports the lcm of their coordinate denominators.  Closed-form
values for the three special square-board move families are provided
alongside, plus a brute-force oracle for small q and an exact vertex
decomposition for configurations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, gcd, lcm

from .geometry import (
    Board,
    InternalInvariantError,
    LocationKind,
    Move,
    Point2,
    point_denominator,
)
from .dynamics import (
    AugmentedTrajectory,
    Trajectory,
    TrajectoryStatus,
    augment,
    trace,
)
from .arrangement import (
    arrangement_of,
    classify_cycle,
    enumerate_rigid_cycles,
    partition_into_trajectories,
    solve_square_system,
)


class SlopeConditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class CrossingPoint:
    """Interior transversal intersection of two trajectory segments."""

    point: Point2
    index_a: int
    index_b: int


@dataclass(frozen=True)
class Contribution:
    category: str
    point: Point2
    denominator: int


@dataclass(frozen=True)
class DenominatorReport:
    q: int
    value: int
    contributions: tuple


def _segment_crossing(p1, p2, q1, q2):
    """Transversal intersection point of two closed segments, or None."""
    d1x, d1y = p2.x - p1.x, p2.y - p1.y
    d2x, d2y = q2.x - q1.x, q2.y - q1.y
    det = d1x * d2y - d1y * d2x
    if det == 0:
        return None
    rx, ry = q1.x - p1.x, q1.y - p1.y
    s = (rx * d2y - ry * d2x) / det
    t = (rx * d1y - ry * d1x) / det
    if not (0 <= s <= 1 and 0 <= t <= 1):
        return None
    return Point2(p1.x + s * d1x, p1.y + s * d1y)


def crossing_points(board, a, b=None):
    """Interior crossings between augmented trajectories a and b.

    With b omitted, the self-crossings of a.  Segments of equal move
    type are parallel and never cross transversally; shared endpoints
    sit on the boundary and are excluded by the interiority test.
    """

    segs_a = a.segments()
    segs_b = segs_a if b is None else b.segments()
    out = []
    for i, (pa, qa, ta) in enumerate(segs_a):
        j_start = i + 1 if b is None else 0
        for j in range(j_start, len(segs_b)):
            pb, qb, tb = segs_b[j]
            if ta == tb:
                continue
            pt = _segment_crossing(pa, qa, pb, qb)
            if pt is not None and board.interior_contains(pt):
                out.append(CrossingPoint(pt, i, j))
    return out


def _window_cost(i, j):
    # smallest count of core points covering segments i and j of a
    # two-sided window indexed with the corner at position 0
    return max(i, j, 0) + max(-i - 1, -j - 1, 0) + 1


@dataclass(frozen=True)
class _Flow:
    """A maximal trajectory (or cycle) carrying indexed segments.

    Corner flows are indexed with their corner at position 0; segment i
    joins positions i and i + 1, so i runs negative on the backward
    side.  Costs charge the shortest window of core points whose
    augmentation covers the given segments while still containing the
    corner; cycles that are not corner-anchored are all-or-nothing.
    """

    kind: str  # "corner-path" | "corner-cycle" | "rigid-cycle"
    segments: tuple  # of (index, start, end, move_type)
    cycle_length: int = 0

    def segment_cost(self, index):
        if self.kind == "corner-path":
            return index + 1 if index >= 0 else -index
        if self.kind == "corner-cycle":
            return min(index + 1, self.cycle_length - index)
        return self.cycle_length

    def self_cost(self, i, j):
        if self.kind == "corner-path":
            return _window_cost(i, j)
        if self.kind == "corner-cycle":
            l = self.cycle_length
            best = l
            for a in (i, i - l):
                for b in (j, j - l):
                    best = min(best, _window_cost(a, b))
            return best
        return self.cycle_length


def _cycle_flow(kind, trajectory):
    pts = trajectory.points
    l = len(pts)
    segs = tuple(
        (i, pts[i], pts[(i + 1) % l], trajectory.move_type_at(i))
        for i in range(l)
    )
    return _Flow(kind, segs, l)


def _corner_flows(board, moves, q):
    flows = []
    for corner in board.corners:
        fwd = trace(board, moves, corner, 1, max_points=q)
        if fwd.status is TrajectoryStatus.CYCLIC:
            flows.append((corner, _cycle_flow("corner-cycle", fwd), fwd, None))
            continue
        bwd = trace(board, moves, corner, 2, max_points=q)
        if bwd.status is TrajectoryStatus.CYCLIC:
            raise InternalInvariantError(
                f"backward trace from {corner} closed a cycle the forward "
                "trace missed"
            )
        fp, bp = fwd.points, bwd.points
        segs = []
        for i in range(len(fp) - 1):
            segs.append((i, fp[i], fp[i + 1], fwd.move_type_at(i)))
        for i in range(1, len(bp)):
            segs.append((-i, bp[i], bp[i - 1], bwd.move_type_at(i - 1)))
        flows.append((corner, _Flow("corner-path", tuple(segs)), fwd, bwd))
    return flows


def denominator(board, moves, q):
    """Exact denominator report for q riders on the board."""
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    contributions = {}

    def add(category, point):
        contributions[(category, point)] = point_denominator(point)

    flows = []
    if q >= 1:
        for corner, flow, fwd, bwd in _corner_flows(board, moves, q):
            flows.append(flow)
            if flow.kind == "corner-cycle":
                pts = fwd.points
                l = len(pts)
                for i in range(min(l, q)):
                    add("corner-trajectory-point", pts[i])
                for i in range(max(1, l - q + 1), l):
                    add("corner-trajectory-point", pts[i])
            else:
                for p in fwd.points[:q]:
                    add("corner-trajectory-point", p)
                for p in bwd.points[:q]:
                    add("corner-trajectory-point", p)
        for traj in enumerate_rigid_cycles(board, moves, q):
            flows.append(_cycle_flow("rigid-cycle", traj))
            for p in traj.points:
                add("rigid-cycle-point", p)

    budget = q - 1
    for flow in flows:
        for (i, pa, qa, ta), (j, pb, qb, tb) in combinations(flow.segments, 2):
            if ta == tb or flow.self_cost(i, j) > budget:
                continue
            pt = _segment_crossing(pa, qa, pb, qb)
            if pt is not None and board.interior_contains(pt):
                add("self-cross", pt)
    for fa, fb in combinations(flows, 2):
        for i, pa, qa, ta in fa.segments:
            cost_a = fa.segment_cost(i)
            if cost_a >= budget:
                continue
            for j, pb, qb, tb in fb.segments:
                if tb == ta or cost_a + fb.segment_cost(j) > budget:
                    continue
                pt = _segment_crossing(pa, qa, pb, qb)
                if pt is not None and board.interior_contains(pt):
                    add("cross", pt)

    value = 1
    for den in contributions.values():
        value = lcm(value, den)
    report = tuple(
        Contribution(cat, pt, den)
        for (cat, pt), den in sorted(contributions.items())
    )
    return DenominatorReport(q, value, report)


# ---------------------------------------------------------------------------
# Closed forms for the three square-board move families.


def _sorted_by_slope(moves):
    m1, m2 = moves
    for m in (m1, m2):
        if m.c <= 0 or m.d <= 0:
            raise SlopeConditionViolated(
                f"move {m} does not have positive slope"
            )
    if m1.slope() > m2.slope():
        m1, m2 = m2, m1
    if not (0 < m1.slope() < 1 < m2.slope()):
        raise SlopeConditionViolated(
            f"slopes {m1.slope()}, {m2.slope()} must straddle 1 within (0, oo)"
        )
    return m1, m2


def closed_form_inclined(moves, q):
    """Denominator for moves with slopes 0 < s1 < 1 < s2 on the square."""
    m1, m2 = _sorted_by_slope(moves)
    rho = Fraction(m1.d * m2.c, m1.c * m2.d)
    dens = [1]
    for i in range(1, q + 1):
        if i % 2 == 1:
            pt = Point2(1, rho ** ((i - 1) // 2))
        else:
            k = i // 2 - 1
            pt = Point2(
                Fraction(m1.d, m1.c) * rho ** k,
                Fraction(m2.c, m2.d) * rho ** k,
            )
        dens.append(point_denominator(pt))
    for i in range(1, (q - 1) // 2 + 1):
        dens.append(point_denominator(inclined_crossing_point(moves, i)))
    value = 1
    for d in dens:
        value = lcm(value, d)
    return value


def inclined_crossing_point(moves, index):
    """The index-th interior crossing point of the corner window family."""
    if index < 1:
        raise ValueError("crossing index starts at 1")
    m1, m2 = _sorted_by_slope(moves)
    big_d = m1.c * m2.d - m2.c * m1.d
    rho = Fraction(m1.d * m2.c, m1.c * m2.d)
    if index % 2 == 1:
        k = (index - 1) // 2
        tx = Fraction(m2.c * (m1.d - m1.c), big_d) * rho ** k
        ty = Fraction(m1.d * (m2.d - m2.c), big_d) * rho ** k
    else:
        k = index // 2
        tx = Fraction(m1.c * (m2.c - m2.d), big_d) * rho ** k
        ty = Fraction(m2.d * (m1.c - m1.d), big_d) * rho ** k
    return Point2(1 + tx, ty)


def closed_form_orthogonal(m, q):
    """Denominator for moves (m, 1) and (1, -m), m >= 2, on the square."""
    if m < 2:
        raise ValueError("orthogonal family needs m >= 2")
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q <= 1:
        return 1
    if q == 2:
        return m
    if q == 3:
        return m ** 4 + m ** 2
    return lcm(m * m + 1, m + 1) * m ** (q - 1)


def closed_form_mirror(c, d, q):
    """Denominator for moves (c, d) and (c, -d) on the square."""
    c, d = abs(c), abs(d)
    if c == 0 or d == 0 or gcd(c, d) != 1:
        raise ValueError(f"({c}, {d}) is not a mirror-pair generator")
    lo, hi = min(c, d), max(c, d)
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q <= 1:
        return 1
    if q == 2:
        return hi
    if 3 <= q <= ceil(Fraction(hi, lo)):
        return 2 * hi
    return 2 * lo * hi


def attractor_orbit(slope1, slope2):
    """The attracting 4-cycle on the square for slopes m1, m2.

    Requires 0 < m1 < 1 and m2 < -1; the orbit visits the bottom,
    right, top, and left edges in that order.
    """

    m1, m2 = Fraction(slope1), Fraction(slope2)
    if not (0 < m1 < 1):
        raise SlopeConditionViolated(f"first slope {m1} not in (0, 1)")
    if not (m2 < -1):
        raise SlopeConditionViolated(f"second slope {m2} not below -1")
    s = m1 + m2
    return (
        Point2(Fraction(m1 - 1, s), 0),
        Point2(1, m1 * (1 + m2) / s),
        Point2(Fraction(1 + m2, s), 1),
        Point2(0, m2 * (1 - m1) / s),
    )


# ---------------------------------------------------------------------------
# Brute-force vertex oracle (small q) and vertex decomposition.


def vertex_oracle(board, moves, q):
    """Denominator by direct vertex enumeration; exponential, q <= 2 only.

    Every arrangement vertex is the unique solution of some 2q
    independent constraints chosen among the per-piece edge fixations
    and the pairwise attack hyperplanes, lying inside the closed board.
    """

    if q > 2:
        raise ValueError("the oracle enumerates all vertex supports; q <= 2")
    if q <= 0:
        return 1
    dim = 2 * q
    rows = []
    for i in range(q):
        for edge in board.edges:
            normal = [Fraction(0)] * dim
            normal[2 * i] = Fraction(edge.normal[0])
            normal[2 * i + 1] = Fraction(edge.normal[1])
            rows.append((tuple(normal), Fraction(edge.offset)))
    for i in range(q):
        for j in range(i + 1, q):
            for move in moves:
                normal = [Fraction(0)] * dim
                normal[2 * i] = Fraction(move.d)
                normal[2 * i + 1] = Fraction(-move.c)
                normal[2 * j] = Fraction(-move.d)
                normal[2 * j + 1] = Fraction(move.c)
                rows.append((tuple(normal), Fraction(0)))
    value = 1
    for subset in combinations(rows, dim):
        solution = solve_square_system(
            [r[0] for r in subset], [r[1] for r in subset]
        )
        if solution is None:
            continue
        pieces = [
            Point2(solution[2 * i], solution[2 * i + 1]) for i in range(q)
        ]
        if all(board.contains(p) for p in pieces):
            for p in pieces:
                value = lcm(value, point_denominator(p))
    return value


@dataclass(frozen=True)
class VertexDecomposition:
    vertex: bool
    rank: int
    deficiency: int
    corner_components: tuple
    cycle_components: tuple
    interior_certificates: tuple


def _on_segment(point, a, b):
    abx, aby = b.x - a.x, b.y - a.y
    apx, apy = point.x - a.x, point.y - a.y
    if abx * apy - aby * apx != 0:
        return False
    if abx != 0:
        t = apx / abx
    else:
        t = apy / aby
    return 0 <= t <= 1


def characterize_vertex(board, moves, pieces):
    """Decompose a configuration if it is an arrangement vertex.

    A vertex splits into boundary components — alternating paths, each
    through a board corner, and rigid cycles — while each interior
    piece is an interior crossing of two augmented component segments
    of different move types.  Non-vertices are reported with their rank
    deficiency and no decomposition.
    """

    pieces = tuple(p if isinstance(p, Point2) else Point2(*p) for p in pieces)
    system = arrangement_of(board, moves, pieces)
    rank = system.rank()
    q = len(pieces)
    if rank < 2 * q:
        return VertexDecomposition(False, rank, 2 * q - rank, (), (), ())

    unique = sorted(set(pieces))
    boundary = [
        p for p in unique
        if board.classify(p).kind is not LocationKind.INTERIOR
    ]
    interior = [p for p in unique if p not in set(boundary)]
    components = partition_into_trajectories(board, moves, boundary)
    corner_components = []
    cycle_components = []
    aug_segments = []
    for comp in components:
        if comp.status is TrajectoryStatus.CYCLIC:
            verdict = classify_cycle(board, moves, comp)
            if not verdict.rigid:
                raise InternalInvariantError(
                    "cyclic component of a vertex is not rigid"
                )
            cycle_components.append(comp)
        else:
            if not any(
                board.classify(p).kind is LocationKind.CORNER
                for p in comp.points
            ):
                raise InternalInvariantError(
                    "path component of a vertex contains no corner"
                )
            corner_components.append(comp)
        aug_segments.extend(augment(board, moves, comp).segments())

    certificates = []
    for z in interior:
        witness = {1: None, 2: None}
        for a, b, move_type in aug_segments:
            if witness[move_type] is None and _on_segment(z, a, b):
                witness[move_type] = (a, b, move_type)
        if witness[1] is None or witness[2] is None:
            raise InternalInvariantError(
                f"interior piece {z} of a vertex lacks a crossing certificate"
            )
        certificates.append((z, witness[1], witness[2]))
    return VertexDecomposition(
        True,
        rank,
        0,
        tuple(corner_components),
        tuple(cycle_components),
        tuple(certificates),
    )
