"""Pareto dominance, nondominated filtering and convex-hull membership.

Every objective is maximized. Time and fuel enter as negative numbers, so
there are no per-objective direction flags.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

VERTEX = "vertex"
INTERIOR = "interior"


def _check_dims(a, b):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def dominates(a: Sequence, b: Sequence) -> bool:
    """Strict Pareto dominance: ``a >= b`` everywhere and ``a != b``."""
    _check_dims(a, b)
    better = False
    for x, y in zip(a, b):
        if x < y:
            return False
        if x > y:
            better = True
    return better


def nondominated_filter(points: Iterable[Sequence]) -> list[tuple]:
    """The maximal set of ``points``, deduplicated and sorted descending.

    A point can only be dominated by points that sort before it in
    descending lexicographic order, so one sweep suffices.
    """
    pts = sorted({tuple(p) for p in points}, reverse=True)
    if not pts:
        raise ValueError("nondominated_filter needs at least one point")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points have mixed dimensions")
    front: list[tuple] = []
    for p in pts:
        if not any(dominates(q, p) for q in front):
            front.append(p)
    return front


def to_rational(v) -> Fraction:
    if isinstance(v, float):
        return Fraction(repr(v))
    return Fraction(v)


def _phase_one_feasible(A: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Is ``{x >= 0 : A x = b}`` nonempty? Exact two-phase simplex, phase one only.

    Bland's rule keeps the pivoting finite without any tolerance.
    """
    m, n = len(A), len(A[0]) if A else 0
    rows = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [sign * a for a in A[i]] + [Fraction(int(k == i)) for k in range(m)] + [sign * b[i]]
        rows.append(row)
    basis = [n + i for i in range(m)]
    width = n + m
    # reduced costs of the phase-one objective: minimise sum of artificials
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for k in range(n):
            cost[k] -= row[k]
        cost[width] -= row[width]
    while True:
        enter = next((k for k in range(width) if cost[k] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # unbounded; cannot happen for phase one
            break
        piv = rows[leave]
        pv = piv[enter]
        rows[leave] = piv = [x / pv for x in piv]
        for i, row in enumerate(rows):
            if i != leave and row[enter] != 0:
                f = row[enter]
                rows[i] = [x - f * y for x, y in zip(row, piv)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, piv)]
        basis[leave] = enter
    return cost[width] == 0


def in_convex_hull(p: Sequence, others: Sequence[Sequence]) -> bool:
    """True iff ``p`` is a convex combination of ``others`` (exact)."""
    if not others:
        return False
    dim = len(p)
    cols = [[to_rational(v) for v in q] for q in others]
    A = [[c[d] for c in cols] for d in range(dim)] + [[Fraction(1)] * len(cols)]
    b = [to_rational(v) for v in p] + [Fraction(1)]
    return _phase_one_feasible(A, b)


def hull_classify(points: Sequence[Sequence]) -> list[str]:
    """Label each point ``vertex`` or ``interior`` of the convex hull of the set.

    A point is interior when it is a convex combination of the other points.
    """
    pts = [tuple(p) for p in points]
    if pts:
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise ValueError("points have mixed dimensions")
    labels = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        labels.append(INTERIOR if in_convex_hull(p, others) else VERTEX)
    return labels


def local_concavity_count_2d(points: Sequence[Sequence]) -> int:
    """Number of points of a two-objective front lying inside its convex hull."""
    if any(len(p) != 2 for p in points):
        raise ValueError("local_concavity_count_2d needs 2-dimensional points")
    return hull_classify(points).count(INTERIOR)
