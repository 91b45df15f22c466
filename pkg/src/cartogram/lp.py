"""exact low-dimensional linear programming (randomized incremental, lexicographic objective)"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Vec = Tuple[Fraction, ...]
# a . x <= b
Constraint = Tuple[Vec, Fraction]


def dot(a: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((ai * xi for ai, xi in zip(a, x)), Fraction(0))


def _box_optimum(objectives: Sequence[Vec], d: int, bound: Fraction) -> List[Fraction]:
    x = []
    for j in range(d):
        sign = next((o[j] for o in objectives if o[j] != 0), Fraction(0))
        x.append(bound if sign > 0 else -bound)
    return x


def _drop(vec: Vec, k: int, pivot: Vec) -> Vec:
    """vec restricted to pivot . x = const, with x_k eliminated"""
    factor = vec[k] / pivot[k]
    return tuple(vec[j] - factor * pivot[j] for j in range(len(vec)) if j != k)


def _seidel(
    objectives: List[Vec], constraints: List[Constraint], d: int, bound: Fraction, rng: random.Random
) -> Optional[List[Fraction]]:
    if d == 0:
        return [] if all(b >= 0 for _, b in constraints) else None
    x = _box_optimum(objectives, d, bound)
    order = list(constraints)
    rng.shuffle(order)
    for i, (a, b) in enumerate(order):
        if dot(a, x) <= b:
            continue
        k = next((j for j in range(d) if a[j] != 0), None)
        if k is None:
            return None
        sub: List[Constraint] = []
        for c, e in order[:i]:
            sub.append((_drop(c, k, a), e - c[k] * b / a[k]))
        # box on the eliminated coordinate
        unit = tuple(Fraction(1 if j == k else 0) for j in range(d))
        sub.append((_drop(unit, k, a), bound - b / a[k]))
        sub.append((tuple(-v for v in _drop(unit, k, a)), bound + b / a[k]))
        y = _seidel([_drop(o, k, a) for o in objectives], sub, d - 1, bound, rng)
        if y is None:
            return None
        xk = (b - sum((a[j] * y[j if j < k else j - 1] for j in range(d) if j != k), Fraction(0))) / a[k]
        x = y[:k] + [xk] + y[k:]
    return x


def solve_lp(
    objective: Sequence[Fraction],
    constraints: Sequence[Constraint],
    bound: Fraction,
    rng: Optional[random.Random] = None,
) -> Optional[List[Fraction]]:
    """maximize objective . x over a . x <= b and |x_j| <= bound; ties broken lexicographically by x.

    None when infeasible. Expected linear time in the number of constraints for fixed dimension.
    """
    d = len(objective)
    rng = rng or random.Random(0)
    objectives: List[Vec] = [tuple(Fraction(v) for v in objective)]
    objectives += [tuple(Fraction(1 if i == j else 0) for i in range(d)) for j in range(d)]
    cons = [(tuple(Fraction(v) for v in a), Fraction(b)) for a, b in constraints]
    return _seidel(objectives, cons, d, Fraction(bound), rng)
