"""Exact rational planar geometry: points, moves, convex polygonal boards.

Everything is computed over `fractions.Fraction`; no floats enter any
predicate.  Boards are strictly convex polygons with rational corners,
stored counterclockwise with primitive integer inward edge normals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

Rational = Fraction


class ZeroDenominator(ZeroDivisionError):
    pass


class ZeroMove(ValueError):
    pass


class NonConvexBoard(ValueError):
    pass


class InternalInvariantError(AssertionError):
    """A condition the library proves impossible happened anyway."""


def reduce(numerator, denominator):
    """Reduced rational numerator/denominator; canonical sign."""
    if denominator == 0:
        raise ZeroDenominator(f"{numerator}/0")
    return Fraction(numerator, denominator)


def parse_rational(text):
    """Parse 'p/q' or 'p' into a Fraction."""
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ZeroDenominator(text) from None


def format_rational(value):
    value = Fraction(value)
    return str(value)


@dataclass(frozen=True, order=True)
class Point2:
    """Exact point in the plane; ordering is lexicographic (x, then y)."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __str__(self):
        return f"({self.x}, {self.y})"


def point_denominator(point):
    """LCM of the coordinate denominators (1 for lattice points)."""
    return lcm(point.x.denominator, point.y.denominator)


def parse_point(text):
    """Parse 'x,y' with rational coordinates."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x,y', got {text!r}")
    return Point2(parse_rational(parts[0]), parse_rational(parts[1]))


def format_point(point):
    return f"{point.x},{point.y}"


def cross(ax, ay, bx, by):
    return ax * by - ay * bx


@dataclass(frozen=True, order=True)
class Move:
    """A rider move vector (c, d) in canonical form.

    Canonical means gcd(|c|, |d|) = 1 and either c > 0, or c = 0 and
    d > 0.  The rider slides along the full line spanned by (c, d), so a
    move and its negation are the same move; the canonical sign picks the
    representative.
    """

    c: int
    d: int

    def __post_init__(self):
        if self.c == 0 and self.d == 0:
            raise ZeroMove("move (0, 0)")
        if gcd(self.c, self.d) != 1:
            raise ValueError(f"move ({self.c}, {self.d}) is not primitive")
        if self.c < 0 or (self.c == 0 and self.d < 0):
            raise ValueError(
                f"move ({self.c}, {self.d}) has non-canonical sign"
            )

    def slope(self):
        if self.c == 0:
            raise ZeroDenominator("vertical move has no finite slope")
        return Fraction(self.d, self.c)

    def __str__(self):
        return f"({self.c}, {self.d})"


def canonical_move(c, d):
    """Reduce (c, d) to the canonical move on the same line."""
    if c == 0 and d == 0:
        raise ZeroMove("move (0, 0)")
    g = gcd(c, d)
    c, d = c // g, d // g
    if c < 0 or (c == 0 and d < 0):
        c, d = -c, -d
    return Move(c, d)


def _primitive_int_pair(x, y):
    x, y = Fraction(x), Fraction(y)
    scale = lcm(x.denominator, y.denominator)
    a, b = int(x * scale), int(y * scale)
    g = gcd(a, b)
    return a // g, b // g


@dataclass(frozen=True)
class Edge:
    """Closed board edge from tail to head with inward normal.

    The normal is a primitive integer vector; a point p is on the edge
    line iff normal . p == offset, and strictly inside the board's
    half-plane iff the dot product exceeds offset.
    """

    tail: Point2
    head: Point2
    normal: tuple
    offset: Fraction

    def side_of(self, point):
        """normal . p - offset: 0 on the line, positive on the board side."""
        nx, ny = self.normal
        return nx * point.x + ny * point.y - self.offset

    def param_of(self, point):
        """Parameter t in [0, 1] with p = tail + t * (head - tail)."""
        dx = self.head.x - self.tail.x
        dy = self.head.y - self.tail.y
        if dx != 0:
            return (point.x - self.tail.x) / dx
        return (point.y - self.tail.y) / dy

    def at_param(self, t):
        t = Fraction(t)
        return Point2(
            self.tail.x + t * (self.head.x - self.tail.x),
            self.tail.y + t * (self.head.y - self.tail.y),
        )

    def contains(self, point):
        if self.side_of(point) != 0:
            return False
        return 0 <= self.param_of(point) <= 1


class LocationKind(enum.Enum):
    INTERIOR = "interior"
    EDGE = "edge"
    CORNER = "corner"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class BoundaryLocation:
    kind: LocationKind
    index: int | None = None


@dataclass(frozen=True)
class Board:
    """Strictly convex rational polygon, corners counterclockwise.

    edges[i] runs from corners[i] to corners[i + 1 (mod n)], so edges
    i - 1 and i meet at corner i.
    """

    corners: tuple
    edges: tuple

    @classmethod
    def from_corners(cls, corners):
        corners = tuple(
            p if isinstance(p, Point2) else Point2(*p) for p in corners
        )
        n = len(corners)
        if n < 3:
            raise NonConvexBoard("need at least three corners")
        for i in range(n):
            a, b, c = corners[i], corners[(i + 1) % n], corners[(i + 2) % n]
            turn = cross(b.x - a.x, b.y - a.y, c.x - b.x, c.y - b.y)
            if turn <= 0:
                raise NonConvexBoard(
                    "corners must be distinct, strictly convex, and wind "
                    "counterclockwise"
                )
        edges = []
        for i in range(n):
            tail, head = corners[i], corners[(i + 1) % n]
            ex, ey = head.x - tail.x, head.y - tail.y
            normal = _primitive_int_pair(-ey, ex)  # inward for CCW winding
            offset = normal[0] * tail.x + normal[1] * tail.y
            edges.append(Edge(tail, head, normal, offset))
        return cls(corners, tuple(edges))

    @classmethod
    def square(cls):
        return cls.from_corners([(0, 0), (1, 0), (1, 1), (0, 1)])

    def contains(self, point):
        return all(e.side_of(point) >= 0 for e in self.edges)

    def interior_contains(self, point):
        return all(e.side_of(point) > 0 for e in self.edges)

    def classify(self, point):
        """Locate a point: interior, on edge i, at corner i, or outside."""
        n = len(self.edges)
        zero = []
        for i, e in enumerate(self.edges):
            s = e.side_of(point)
            if s < 0:
                return BoundaryLocation(LocationKind.OUTSIDE)
            if s == 0:
                zero.append(i)
        if not zero:
            return BoundaryLocation(LocationKind.INTERIOR)
        if len(zero) == 2:
            i, j = zero
            # adjacent edge lines meet at the shared corner
            if j == i + 1:
                return BoundaryLocation(LocationKind.CORNER, j)
            if i == 0 and j == n - 1:
                return BoundaryLocation(LocationKind.CORNER, 0)
        if len(zero) == 1:
            return BoundaryLocation(LocationKind.EDGE, zero[0])
        raise InternalInvariantError(
            f"point {point} lies on {len(zero)} edge lines of a strictly "
            "convex board"
        )
