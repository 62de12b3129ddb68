# File: TukeyDepthHub/apps/depth/rcom.py
"""
Refined combinatorial depth: minimize the planar depth over every projection
onto the orthogonal complement of p-2 observations.

For an arity-(p-2) combination the members project onto the origin and are
therefore inside every closed halfplane; subtracting p-2 from the smallest
planar count gives the depth numerator of the full cloud.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

import joblib
import numpy as np

from .bivariate import depth2_origin
from .conf import get_setting
from .exceptions import DegenerateInputError, GeneralPositionError
from .geometry import (
    PointCloud,
    Tolerance,
    chunk_ranges,
    complement_basis,
    count_closed,
    iter_combinations,
    lift_direction,
    project2,
    resolve_tolerance,
)

logger = logging.getLogger(__name__)


@dataclass
class DepthResult:
    """Exact depth of a query as numerator over the total number of observations."""

    numerator: int
    n: int
    witness_combination: Optional[tuple] = None
    witness_direction: Optional[np.ndarray] = None
    algorithm: str = ''
    stats: dict = field(default_factory=dict)

    @property
    def depth(self):
        return Fraction(self.numerator, self.n)

    @property
    def fraction(self):
        return f'{self.numerator}/{self.n}'

    def __float__(self):
        return self.numerator / self.n


class SubspaceDepth(NamedTuple):
    combination: tuple
    numerator: int
    witnesses: frozenset
    direction: np.ndarray


def evaluate_subspace(cloud, combo, tol, strict=True):
    """
    Planar depth of the projection onto the complement of the combination.

    The numerator counts the members themselves. The direction is a unit
    p-vector orthogonal to the members attaining the planar minimum.
    """
    basis = complement_basis(cloud, combo, tol)
    projected = project2(cloud, basis)
    try:
        planar = depth2_origin(projected, tol, strict=strict)
    except GeneralPositionError as exc:
        raise GeneralPositionError(
            sorted(set(combo) | set(exc.combination)), 'points on a common hyperplane'
        ) from exc
    if strict and planar.n - planar.m != len(combo):
        flat = np.flatnonzero(np.linalg.norm(projected, axis=1) <= tol.eps * cloud.norms.max())
        raise GeneralPositionError(sorted(set(flat.tolist()) | set(combo)), 'points in the span')
    direction = planar.witness_direction @ basis.matrix
    return SubspaceDepth(tuple(combo), planar.numerator, planar.witnesses, direction)


class SubspaceEvaluator:
    """Memoized subspace depths of one cloud."""

    def __init__(self, cloud, tol=None, strict=True):
        self.cloud = cloud
        self.tol = resolve_tolerance(tol)
        self.strict = strict
        self.cache = {}
        self.evaluations = 0

    def __call__(self, combo):
        result = self.cache.get(combo)
        if result is None:
            result = evaluate_subspace(self.cloud, combo, self.tol, self.strict)
            self.cache[combo] = result
            self.evaluations += 1
        return result


def _scan_chunk(coords, points, arity, start, count, eps):
    cloud = PointCloud(coords)
    tol = Tolerance(eps)
    best = (math.inf, None)
    evaluated = 0
    for local in iter_combinations(len(points), arity, start, count):
        combo = tuple(int(points[i]) for i in local)
        value = evaluate_subspace(cloud, combo, tol).numerator
        evaluated += 1
        if value < best[0]:
            best = (value, combo)
    return best[0], best[1], evaluated


def minimize_combinations(cloud, tol, points=None, threads=1):
    """
    Smallest subspace numerator over arity-(p-2) combinations of `points`.

    Returns (value, combination, evaluated). Ties keep the lexicographically
    first combination, also when the work is split across workers.
    """
    arity = cloud.p - 2
    points = np.arange(cloud.n) if points is None else np.asarray(sorted(points), dtype=int)
    total = math.comb(len(points), arity)
    if total == 0:
        return math.inf, None, 0
    ranges = chunk_ranges(total, threads * 4 if threads > 1 else 1)
    if len(ranges) == 1:
        parts = [_scan_chunk(cloud.coords, points, arity, 0, total, tol.eps)]
    else:
        parts = joblib.Parallel(n_jobs=threads)(
            joblib.delayed(_scan_chunk)(cloud.coords, points, arity, start, count, tol.eps)
            for start, count in ranges
        )
    evaluated = sum(part[2] for part in parts)
    value, combo = min(((part[0], part[1]) for part in parts if part[1] is not None),
                       default=(math.inf, None))
    return value, combo, evaluated


def check_size(cloud):
    if cloud.total <= cloud.p:
        raise DegenerateInputError(
            f'need more than p={cloud.p} observations, got {cloud.total}'
        )
    if cloud.n < cloud.p - 1:
        raise DegenerateInputError(
            f'only {cloud.n} observation(s) differ from the query in dimension {cloud.p}'
        )


def witness_result(cloud, subspace, tol, algorithm, stats):
    """Depth result for an attaining subspace, direction lifted off its members."""
    arity = cloud.p - 2
    direction = lift_direction(cloud.coords, subspace.combination, subspace.direction, tol)
    numerator = subspace.numerator - arity + cloud.zero_count
    recount = count_closed(cloud.coords, direction, tol, cloud.norms) + cloud.zero_count
    if recount != numerator:
        logger.warning(
            f'{algorithm}: witness direction holds {recount} observations, '
            f'numerator is {numerator} at {subspace.combination}'
        )
    return DepthResult(
        numerator=numerator,
        n=cloud.total,
        witness_combination=subspace.combination,
        witness_direction=direction,
        algorithm=algorithm,
        stats={**stats, 'recount': recount},
    )


def depth_rcom(cloud, tol=None, threads=None):
    """Exact depth by exhaustive enumeration of arity-(p-2) combinations."""
    tol = resolve_tolerance(tol)
    threads = int(threads or get_setting('THREADS'))
    check_size(cloud)

    value, combo, evaluated = minimize_combinations(cloud, tol, threads=threads)
    logger.debug(f'rcom: {evaluated} combinations, minimum {value} at {combo}')
    subspace = evaluate_subspace(cloud, combo, tol)
    return witness_result(cloud, subspace, tol, 'rcom', {'evaluations': evaluated})


def screen_general_position(cloud, tol=None, threads=1):
    """Raise GeneralPositionError if any p observations share a hyperplane through 0."""
    minimize_combinations(cloud, resolve_tolerance(tol), threads=threads)
