"""Counting nonattacking rider placements on n-by-n boards.

Cells are the integer points (x, y), 1 <= x, y <= n, indexed x-major.
Two cells attack each other when their difference is parallel to one of
the two moves; with primitive move vectors that is a single cross
product test.  Placement counts are computed by bitset backtracking
over the attack graph, and the resulting integer sequences are fitted
exactly — over Fraction, with every surplus sample validated — to
candidate quasipolynomials of the expected degree 2q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from .geometry import Board, InternalInvariantError
from .denominator import denominator


class InsufficientData(Exception):
    """Raised when a fit needs more of the counting sequence.

    required_n_max says how far the sequence must extend before the
    attempted fit becomes decidable.
    """

    def __init__(self, message, required_n_max):
        super().__init__(message)
        self.required_n_max = required_n_max


@dataclass(frozen=True)
class CountSeries:
    moves: tuple
    q: int
    values: tuple  # values[n] = placements on the n x n board


def _line_groups(move, n):
    """Cells grouped by the move line through them, as index lists."""
    groups = {}
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            key = x * move.d - y * move.c
            groups.setdefault(key, []).append((x - 1) * n + (y - 1))
    return groups


def attack_masks(moves, n):
    """Per-cell bitmask of attacked cells (self excluded)."""
    masks = [0] * (n * n)
    for move in moves:
        for cells in _line_groups(move, n).values():
            if len(cells) < 2:
                continue
            group = 0
            for i in cells:
                group |= 1 << i
            for i in cells:
                masks[i] |= group & ~(1 << i)
    return masks


def count(moves, q, n):
    """Number of ways to place q mutually nonattacking riders."""
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    if q == 0:
        return 1
    if n <= 0:
        return 0
    masks = attack_masks(moves, n)

    def rec(avail, k):
        total = 0
        m = avail
        while m:
            low = m & -m
            m ^= low
            rest = m & ~masks[low.bit_length() - 1]
            if k == 2:
                total += rest.bit_count()
            elif rest:
                total += rec(rest, k - 1)
        return total

    full = (1 << (n * n)) - 1
    if q == 1:
        return n * n
    return rec(full, q)


def count_series(moves, q, n_max):
    return CountSeries(
        tuple(moves), q, tuple(count(moves, q, n) for n in range(n_max + 1))
    )


def count_pairs_formula(moves, n):
    """Independent q = 2 check: all pairs minus collinear pairs.

    A pair attacking along both moves would have difference parallel to
    two independent vectors, so no pair is subtracted twice.
    """

    total = comb(n * n, 2)
    for move in moves:
        for cells in _line_groups(move, n).values():
            total -= comb(len(cells), 2)
    return total


# ---------------------------------------------------------------------------
# Exact quasipolynomial fitting.


@dataclass(frozen=True)
class QuasipolynomialFit:
    degree: int
    period: int
    constituents: tuple  # per residue class: Fraction coeffs, ascending
    verified_range: tuple


def _newton_fit(xs, ys):
    """Interpolating polynomial through (xs, ys), ascending coefficients."""
    k = len(xs)
    table = [[Fraction(y) for y in ys]]
    for j in range(1, k):
        prev = table[-1]
        table.append(
            [
                (prev[i + 1] - prev[i]) / (xs[i + j] - xs[i])
                for i in range(k - j)
            ]
        )
    poly = [Fraction(0)] * k
    basis = [Fraction(1)] + [Fraction(0)] * (k - 1)
    for j in range(k):
        lead = table[j][0]
        for idx in range(j + 1):
            poly[idx] += lead * basis[idx]
        if j < k - 1:
            shifted = [Fraction(0)] * k
            for idx in range(j + 1):
                shifted[idx + 1] += basis[idx]
                shifted[idx] -= xs[j] * basis[idx]
            basis = shifted
    return poly


def _eval_poly(coeffs, n):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


def fit(series, period, degree=None):
    """Fit one quasipolynomial of the given period, or None if refuted.

    Counts for n >= 1 are used (the empty board is not governed by the
    counting function).  Each residue class needs degree + 2 samples:
    degree + 1 to interpolate and at least one checked exactly; all
    surplus samples are validated, and any mismatch refutes the period.
    """

    if period < 1:
        raise ValueError(f"period must be positive, got {period}")
    if degree is None:
        degree = 2 * series.q
    n_max = len(series.values) - 1
    needed = period * (degree + 2)
    if n_max < needed:
        raise InsufficientData(
            f"period {period} at degree {degree} needs counts up to "
            f"n = {needed}, have {n_max}",
            required_n_max=needed,
        )
    constituents = []
    for r in range(period):
        ns = [n for n in range(1, n_max + 1) if n % period == r]
        head = ns[: degree + 1]
        coeffs = _newton_fit(head, [series.values[n] for n in head])
        for n in ns[degree + 1:]:
            if _eval_poly(coeffs, n) != series.values[n]:
                return None
        constituents.append(tuple(coeffs))
    return QuasipolynomialFit(degree, period, tuple(constituents), (1, n_max))


def evaluate_fit(fitted, n):
    return _eval_poly(fitted.constituents[n % fitted.period], n)


def minimal_period(series, degree=None):
    """Smallest period whose fit validates, or None when undecided.

    None means every attemptable period was refuted by the data — the
    sequence is too short to reveal its period, not periodic-free.
    """

    if degree is None:
        degree = 2 * series.q
    n_max = len(series.values) - 1
    period = 1
    while period * (degree + 2) <= n_max:
        if fit(series, period, degree) is not None:
            return period
        period += 1
    return None


@dataclass(frozen=True)
class ConjectureReport:
    q: int
    period: int
    denominator: int
    divides: bool
    equal: bool


def conjecture_report(moves, q, n_max):
    """Compare the fitted minimal period against the exact denominator.

    The period must divide the denominator; a violation is a bug in
    this library, not a data point, and raises accordingly.  Whether
    they are equal is the open question this report exists to probe.
    """

    series = count_series(moves, q, n_max)
    report = denominator(Board.square(), moves, q)
    period = minimal_period(series)
    if period is None:
        raise InsufficientData(
            f"no period up to the data limit fits; extending counts to "
            f"n = {report.value * (2 * q + 2)} would cover the "
            f"denominator itself",
            required_n_max=report.value * (2 * q + 2),
        )
    if report.value % period != 0:
        raise InternalInvariantError(
            f"fitted period {period} does not divide denominator "
            f"{report.value}"
        )
    return ConjectureReport(
        q, period, report.value, True, period == report.value
    )
