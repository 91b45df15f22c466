"""area cartograms: solve for segment coordinates whose rectangles have prescribed areas"""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass
from typing import Literal, Mapping, Optional, Tuple, Union

import numpy as np

from ..core.config import SolverSettings
from ..core.errors import NoConvergence, OutsidePolytope
from ..rel.equivalence import random_order_equivalent
from ..rel.layout import Layout
from .frame import SegmentFrame
from .weights import Value, WeightFunction

logger = logging.getLogger(__name__)

Method = Literal["newton", "continuation"]


@dataclass(frozen=True)
class AreaResult:
    layout: Layout
    coords: Tuple[float, ...]
    residual: float
    iterations: int
    method: Method


@dataclass(frozen=True)
class AreaUniqueness:
    trials: int
    spread: float  # largest distance between two solutions
    residual: float  # worst residual over the trials


def area_vector(frame: SegmentFrame, c: np.ndarray, side: float) -> np.ndarray:
    w, h = frame.extents(c, side)
    if np.any(w <= 0) or np.any(h <= 0):
        raise OutsidePolytope("segment coordinates leave the order polytope")
    return w * h


def area_jacobian(frame: SegmentFrame, c: np.ndarray, side: float) -> np.ndarray:
    """derivative of all areas but the last (the total is fixed by the box)"""
    w, h = frame.extents(c, side)
    if np.any(w <= 0) or np.any(h <= 0):
        raise OutsidePolytope("segment coordinates leave the order polytope")
    n = len(frame.ids)
    jac = np.zeros((n - 1, frame.size))
    for k, rid in enumerate(frame.ids[:-1]):
        left, right, bottom, top = frame.sides[rid]
        if right >= 0:
            jac[k, right] += h[k]
        if left >= 0:
            jac[k, left] -= h[k]
        if top >= 0:
            jac[k, top] += w[k]
        if bottom >= 0:
            jac[k, bottom] -= w[k]
    return jac


def _residual(areas: np.ndarray, target: np.ndarray) -> float:
    return float(np.max(np.abs(areas - target) / target))


def _newton(
    frame: SegmentFrame, c: np.ndarray, side: float, target: np.ndarray, settings: SolverSettings
) -> Tuple[np.ndarray, int, float, bool]:
    """damped Newton; every accepted iterate stays inside the polytope and lowers the residual norm"""
    areas = area_vector(frame, c, side)
    res = _residual(areas, target)
    for it in range(settings.max_iter):
        if res <= settings.tol:
            return c, it, res, True
        f = areas[:-1] - target[:-1]
        try:
            step = np.linalg.solve(area_jacobian(frame, c, side), -f)
        except np.linalg.LinAlgError:
            return c, it, res, False
        norm = float(np.linalg.norm(f))
        t = 1.0
        while t >= settings.min_step:
            trial = c + t * step
            if frame.inside(trial, side):
                trial_areas = area_vector(frame, trial, side)
                if float(np.linalg.norm(trial_areas[:-1] - target[:-1])) < norm:
                    break
            t /= 2
        else:
            logger.debug("newton stalled at iteration %d, residual %.3e", it, res)
            return c, it, res, False
        c, areas = trial, trial_areas
        res = _residual(areas, target)
        logger.debug("newton iteration %d: step %.3g, residual %.3e", it, t, res)
    return c, settings.max_iter, res, res <= settings.tol


def _as_weights(w: Union[WeightFunction, Mapping[str, Value]]) -> WeightFunction:
    return w if isinstance(w, WeightFunction) else WeightFunction.of(w, "area")


def realize_areas(
    l: Layout,
    weights: Union[WeightFunction, Mapping[str, Value]],
    settings: Optional[SolverSettings] = None,
    start: Optional[Layout] = None,
) -> AreaResult:
    """order-equivalent layout in a square box whose rectangle areas are the weights"""
    settings = settings or SolverSettings()
    w = _as_weights(weights)
    w.check_ids(l)
    frame = SegmentFrame.of(l)
    target = np.array([float(w[rid]) for rid in frame.ids])
    side = math.sqrt(float(np.sum(target)))
    c0 = frame.coords(start or l, side)
    if frame.size == 0:
        return AreaResult(frame.layout(c0, side), (), 0.0, 0, "newton")

    c, iters, res, ok = _newton(frame, c0, side, target, settings)
    if ok:
        logger.info("areas realized by newton in %d iterations (residual %.2e)", iters, res)
        return AreaResult(frame.layout(c, side), tuple(float(v) for v in c), res, iters, "newton")

    logger.warning("newton stalled (residual %.2e); following the path from the start areas", res)
    start_areas = area_vector(frame, c0, side)
    c, total = c0, 0
    steps = settings.continuation_steps
    for k in range(1, steps + 1):
        goal = start_areas + (target - start_areas) * (k / steps)
        c, iters, res, ok = _newton(frame, c, side, goal, settings)
        total += iters
        if not ok:
            raise NoConvergence(total, res)
    res = _residual(area_vector(frame, c, side), target)
    logger.info("areas realized by continuation in %d iterations (residual %.2e)", total, res)
    return AreaResult(frame.layout(c, side), tuple(float(v) for v in c), res, total, "continuation")


def check_area_uniqueness(
    l: Layout,
    weights: Union[WeightFunction, Mapping[str, Value]],
    trials: int = 10,
    seed: int = 0,
    settings: Optional[SolverSettings] = None,
) -> AreaUniqueness:
    """solve from several random order-equivalent starts and measure how far apart the answers land"""
    rng = random.Random(seed)
    starts = [l] + [random_order_equivalent(l, rng) for _ in range(max(trials, 1) - 1)]
    results = [realize_areas(l, weights, settings, start=s) for s in starts]
    spread = 0.0
    for a, b in itertools.combinations(results, 2):
        spread = max(spread, float(np.linalg.norm(np.array(a.coords) - np.array(b.coords))))
    return AreaUniqueness(trials=len(results), spread=spread, residual=max(r.residual for r in results))
