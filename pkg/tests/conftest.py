from fractions import Fraction

import pytest
from hypothesis import strategies as st

from riderflow import Board, Point2, canonical_move


@pytest.fixture
def square():
    return Board.square()


@pytest.fixture
def pentagon():
    corners = [
        ("0", "0"),
        ("1", "0"),
        ("3/2", "1"),
        ("1/2", "2"),
        ("-1/2", "1"),
    ]
    return Board.from_corners(
        [Point2(Fraction(x), Fraction(y)) for x, y in corners]
    )


def _all_canonical_moves(limit=4):
    seen = set()
    for c in range(0, limit + 1):
        for d in range(-limit, limit + 1):
            if c == 0 and d == 0:
                continue
            seen.add(canonical_move(c, d))
    return sorted(seen)


CANONICAL_MOVES = _all_canonical_moves()
MOVE_PAIRS = [
    (a, b)
    for i, a in enumerate(CANONICAL_MOVES)
    for b in CANONICAL_MOVES[i + 1:]
]


def move_pairs():
    return st.sampled_from(MOVE_PAIRS)


def rational_params():
    return st.integers(1, 12).flatmap(
        lambda den: st.integers(0, den).map(lambda num: Fraction(num, den))
    )


def boundary_points(board):
    edges = board.edges
    return st.tuples(
        st.integers(0, len(edges) - 1), rational_params()
    ).map(lambda pick: edges[pick[0]].at_param(pick[1]))
