# File: TukeyDepthHub/apps/depth/runner.py
"""
Algorithm dispatch shared by the management commands, the benchmark grid and
the API.
"""

import logging
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .adia import depth_adia
from .bivariate import depth2_origin
from .conf import get_setting
from .exceptions import AllPointsCoincideError, DepthInputError, GeneralPositionError
from .geometry import Tolerance, center_at, lift_direction
from .oracle import depth_critical, depth_random_upper
from .rcom import DepthResult, depth_rcom

logger = logging.getLogger(__name__)

ALGORITHMS = ('rcom', 'adia', 'oracle', 'bivariate', 'random-upper')
EXACT_ALGORITHMS = ('rcom', 'adia', 'oracle', 'bivariate')


@dataclass
class RunConfig:
    algorithm: str = 'rcom'
    tolerance: Optional[float] = None
    threads: Optional[int] = None
    seed: int = 0
    trials: Optional[int] = None
    force: bool = False
    strict: bool = False

    @property
    def tol(self):
        if self.tolerance is None:
            return Tolerance.default()
        return Tolerance(self.tolerance)

    @property
    def workers(self):
        return int(self.threads or get_setting('THREADS'))


def _bivariate(cloud, config):
    if cloud.p != 2:
        raise DepthInputError(f'the bivariate algorithm needs p=2, got p={cloud.p}')
    planar = depth2_origin(cloud.coords, config.tol, strict=config.strict)
    return DepthResult(
        numerator=planar.numerator + cloud.zero_count,
        n=cloud.total,
        witness_combination=(),
        witness_direction=lift_direction(cloud.coords, [], planar.witness_direction, config.tol),
        algorithm='bivariate',
        stats={'evaluations': 1},
    )


def _random_upper(cloud, config):
    numerator = depth_random_upper(cloud, config.trials, config.seed, config.tol)
    return DepthResult(numerator=numerator, n=cloud.total, algorithm='random-upper')


def run_algorithm(cloud, config):
    """DepthResult of the configured algorithm on a centered cloud."""
    name = config.algorithm
    if name == 'rcom':
        return depth_rcom(cloud, config.tol, threads=config.workers)
    if name == 'adia':
        return depth_adia(
            cloud, config.tol, threads=config.workers, verify_general_position=config.strict
        )
    if name == 'oracle':
        return depth_critical(cloud, config.tol, force=config.force, threads=config.workers)
    if name == 'bivariate':
        return _bivariate(cloud, config)
    if name == 'random-upper':
        return _random_upper(cloud, config)
    raise DepthInputError(f'unknown algorithm {name!r}')


def compute_depth(data, query, config):
    """Depth of one query; a query equal to every observation has depth n/n."""
    try:
        cloud = center_at(data, query, config.tol)
    except AllPointsCoincideError as exc:
        return DepthResult(numerator=exc.n, n=exc.n, algorithm=config.algorithm)
    try:
        return run_algorithm(cloud, config)
    except GeneralPositionError as exc:
        logger.warning(f'{config.algorithm}: {exc}')
        raise


def build_record(index, result, elapsed_ns):
    direction = result.witness_direction
    combination = result.witness_combination
    return {
        'query_index': index,
        'algorithm': result.algorithm,
        'numerator': int(result.numerator),
        'n': int(result.n),
        'fraction': result.fraction,
        'depth': float(result),
        'witness_combination': None if combination is None else [int(i) for i in combination],
        'witness_direction': None if direction is None else [float(v) for v in direction],
        'elapsed_ns': int(elapsed_ns),
    }


def timed_depth(data, query, config):
    started = time.perf_counter_ns()
    result = compute_depth(data, query, config)
    return result, time.perf_counter_ns() - started


def depth_records(data, queries, config):
    """One record per query row, in query order."""
    data = np.asarray(data, dtype=float)
    queries = np.atleast_2d(np.asarray(queries, dtype=float))
    if queries.shape[1] != data.shape[1]:
        raise DepthInputError(
            f'queries have {queries.shape[1]} columns, data has {data.shape[1]}'
        )
    records = []
    for index, query in enumerate(queries):
        result, elapsed = timed_depth(data, query, config)
        records.append(build_record(index, result, elapsed))
        logger.debug(f'query {index}: {result.fraction} by {config.algorithm}')
    return records
