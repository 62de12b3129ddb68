# File: TukeyDepthHub/apps/depth/oracle.py
"""
Reference depth computations used to check the fast algorithms.

depth_critical enumerates every hyperplane through the origin and p-1
observations; the depth is attained at one of those critical directions.
Its cost grows like n**p, so inputs above ORACLE_MAX_WORK are refused unless
forced. depth_random_upper samples directions and only gives an upper bound.
"""

import logging
import math
from typing import NamedTuple

import joblib
import numpy as np

from .bivariate import depth2_origin
from .conf import get_setting
from .exceptions import DegenerateInputError, DepthInputError, GeneralPositionError, OracleBudgetError
from .geometry import (
    PointCloud,
    Tolerance,
    chunk_ranges,
    complement_vectors,
    iter_combinations,
    lift_direction,
    make_combination,
    resolve_tolerance,
    zero_mask,
)
from .rcom import DepthResult

logger = logging.getLogger(__name__)

RANDOM_BATCH = 1024


class CriticalDirection(NamedTuple):
    u: np.ndarray
    combination: tuple


def oracle_work(n, p):
    return math.comb(n, p - 1) * n


def critical_direction(cloud, combo, tol=None):
    """Unit normal of the hyperplane through the origin and p-1 observations."""
    tol = resolve_tolerance(tol)
    combo = make_combination(combo, cloud.n, cloud.p - 1)
    (u,) = complement_vectors(cloud.coords[list(combo)], 1, tol, combo)
    return CriticalDirection(u, combo)


def _side_counts(cloud, direction, tol):
    signs = tol.signs(cloud.coords @ direction.u, cloud.norms)
    on_plane = np.flatnonzero(signs == 0)
    if on_plane.size != len(direction.combination):
        raise GeneralPositionError(
            sorted(set(on_plane.tolist()) | set(direction.combination)),
            'points on a common hyperplane',
        )
    return int(np.count_nonzero(signs < 0)), int(np.count_nonzero(signs > 0))


def _critical_chunk(coords, start, count, eps):
    cloud = PointCloud(coords)
    tol = Tolerance(eps)
    best = (math.inf, None)
    for combo in iter_combinations(cloud.n, cloud.p - 1, start, count):
        negative, positive = _side_counts(cloud, critical_direction(cloud, combo, tol), tol)
        value = min(negative, positive)
        if value < best[0]:
            best = (value, combo)
    return best


def depth_critical(cloud, tol=None, force=False, threads=None, max_work=None):
    """Exact depth by enumerating all critical directions."""
    tol = resolve_tolerance(tol)
    threads = int(threads or get_setting('THREADS'))
    limit = int(max_work or get_setting('ORACLE_MAX_WORK'))
    if cloud.n < cloud.p - 1:
        raise DegenerateInputError(
            f'only {cloud.n} observation(s) differ from the query in dimension {cloud.p}'
        )
    work = oracle_work(cloud.n, cloud.p)
    if work > limit and not force:
        raise OracleBudgetError(work, limit)

    total = math.comb(cloud.n, cloud.p - 1)
    ranges = chunk_ranges(total, threads * 4 if threads > 1 else 1)
    if len(ranges) == 1:
        parts = [_critical_chunk(cloud.coords, 0, total, tol.eps)]
    else:
        parts = joblib.Parallel(n_jobs=threads)(
            joblib.delayed(_critical_chunk)(cloud.coords, start, count, tol.eps)
            for start, count in ranges
        )
    value, combo = min(parts)

    direction = critical_direction(cloud, combo, tol)
    negative, positive = _side_counts(cloud, direction, tol)
    u = direction.u if negative <= positive else -direction.u
    logger.debug(f'oracle: {total} critical directions, minimum {value} at {combo}')
    return DepthResult(
        numerator=int(value) + cloud.zero_count,
        n=cloud.total,
        witness_combination=combo,
        witness_direction=lift_direction(cloud.coords, combo, u, tol),
        algorithm='oracle',
        stats={'evaluations': total},
    )


def subspace_depth(cloud, combo, tol=None):
    """
    Depth numerator of the origin in the complement of the combination's span.

    Rows are projected onto the complement; members land on the origin and
    are counted, as are the observations equal to the original query.
    """
    tol = resolve_tolerance(tol)
    combo = make_combination(combo, cloud.n)
    remaining = cloud.p - len(combo)
    if remaining < 1:
        raise DepthInputError(f'combination of arity {len(combo)} leaves no complement')
    vectors = complement_vectors(cloud.coords[list(combo)], remaining, tol, combo)
    projected = cloud.coords @ vectors.T
    zeros = zero_mask(np.linalg.norm(projected, axis=1), tol)

    if remaining == 1:
        values = projected[~zeros, 0]
        value = min(int(np.count_nonzero(values < 0)), int(np.count_nonzero(values > 0)))
        return value + int(zeros.sum()) + cloud.zero_count
    if remaining == 2:
        return depth2_origin(projected, tol).numerator + cloud.zero_count
    inner = PointCloud(projected[~zeros], int(zeros.sum()))
    return depth_critical(inner, tol, force=True, threads=1).numerator + cloud.zero_count


def depth_random_upper(cloud, trials=None, seed=0, tol=None):
    """Smallest closed-halfspace count over random directions; an upper bound."""
    tol = resolve_tolerance(tol)
    trials = int(get_setting('RANDOM_TRIALS') if trials is None else trials)
    if trials < 1:
        raise DepthInputError(f'trials must be at least 1, got {trials}')
    rng = np.random.default_rng(seed)
    best = cloud.n
    remaining = trials
    while remaining:
        batch = min(remaining, RANDOM_BATCH)
        directions = rng.standard_normal((batch, cloud.p))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
        dots = cloud.coords @ directions.T
        counts = np.count_nonzero(dots <= tol.eps * cloud.norms[:, None], axis=0)
        best = min(best, int(counts.min()))
        remaining -= batch
    return best + cloud.zero_count
