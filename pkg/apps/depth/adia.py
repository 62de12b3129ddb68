# File: TukeyDepthHub/apps/depth/adia.py
"""
Depth-adaptive search over critical hyperplanes.

The search walks from hyperplane to hyperplane: a visited arity-(p-1)
combination is split into its p-1 arity-(p-2) sub-combinations, each
sub-combination's planar sweep names the observations (witnesses) that
complete it into a minimizing hyperplane, and every new completion is pushed
onto a depth-first frontier. A completion never has a larger subspace depth
than the sub-combination it came from, so the incumbent only goes down.
Frontier entries whose stored depth exceeds the incumbent are pruned.

When the frontier is empty the surviving hyperplanes are used once more: the
observations on them or on their smaller side form the envelope point set,
and every arity-(p-2) combination drawn from it is evaluated exhaustively.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from .conf import get_setting
from .exceptions import DegenerateInputError, DescentViolationError, GeneralPositionError
from .geometry import complement_vectors, iter_combinations, resolve_tolerance
from .rcom import (
    DepthResult,
    SubspaceDepth,
    SubspaceEvaluator,
    check_size,
    minimize_combinations,
    screen_general_position,
    witness_result,
)

logger = logging.getLogger(__name__)

SCAN_BLOCK = 1024


@dataclass
class FrontierRegistry:
    """Visited hyperplanes, the pending frontier and the incumbent."""

    offset: int
    visited: dict = field(default_factory=dict)
    frontier: list = field(default_factory=list)
    pruned: set = field(default_factory=set)
    expanded: set = field(default_factory=set)
    incumbent: float = math.inf
    best: Optional[SubspaceDepth] = None
    history: list = field(default_factory=list)
    envelope_size: int = 0

    @property
    def bound(self):
        """Largest stored subspace numerator that can still tie the incumbent."""
        return self.incumbent + self.offset

    def admit(self, combo, value):
        if combo in self.visited:
            return False
        self.visited[combo] = value
        return True

    def push(self, combo, cursor=0):
        self.frontier.append((combo, cursor))

    def pop(self):
        return self.frontier.pop()

    def offer(self, subspace):
        """Lower the incumbent if the subspace beats it; True when it did."""
        value = subspace.numerator - self.offset
        if value < self.incumbent:
            self.incumbent = value
            self.best = subspace
            self.history.append(value)
            return True
        return False

    def active(self):
        return [combo for combo in self.visited if combo not in self.pruned]


class EnvelopePointSet(NamedTuple):
    indices: np.ndarray
    hyperplanes: int


class ScanResult(NamedTuple):
    d0: int
    seed: tuple
    base: tuple
    scan_count: int
    direction: np.ndarray


def _scan_counts(cloud, tol):
    X, norms = cloud.coords, cloud.norms
    plus = np.empty(cloud.n, dtype=np.int64)
    minus = np.empty(cloud.n, dtype=np.int64)
    for start in range(0, cloud.n, SCAN_BLOCK):
        rows = slice(start, start + SCAN_BLOCK)
        signs = tol.signs(X[rows] @ X.T, norms[rows, None] * norms[None, :])
        plus[rows] = np.count_nonzero(signs <= 0, axis=1)
        minus[rows] = np.count_nonzero(signs >= 0, axis=1)
    return np.column_stack([plus, minus]).ravel()


def initial_scan(cloud, tol=None, evaluator=None):
    """
    Seed hyperplane from the best of the 2n directions +-x_j/|x_j|.

    The p-2 observations with the smallest nonnegative projection on that
    direction form the base sub-combination; its smallest planar witness
    completes the seed.
    """
    tol = resolve_tolerance(tol)
    if cloud.p < 3:
        raise DegenerateInputError('the adaptive scan needs p >= 3')
    evaluator = evaluator or SubspaceEvaluator(cloud, tol)
    arity = cloud.p - 2

    counts = _scan_counts(cloud, tol)
    k = int(np.argmin(counts))
    j, sign = divmod(k, 2)
    direction = (1.0 if sign == 0 else -1.0) * cloud.coords[j] / cloud.norms[j]

    projections = cloud.coords @ direction
    order = np.lexsort((np.arange(cloud.n), projections))
    nonnegative = order[tol.signs(projections[order], cloud.norms[order]) >= 0]
    if nonnegative.size >= arity:
        chosen = nonnegative[:arity]
    else:
        chosen = np.lexsort((np.arange(cloud.n), np.abs(projections)))[:arity]
    base = tuple(sorted(int(i) for i in chosen))

    subspace = evaluator(base)
    if not subspace.witnesses:
        raise DegenerateInputError(f'sub-combination {list(base)} has no completing witness')
    seed = tuple(sorted(base + (min(subspace.witnesses),)))
    logger.debug(f'adia: scan count {counts[k]}, seed {seed}, d0 {subspace.numerator}')
    return ScanResult(subspace.numerator, seed, base, int(counts[k]), direction)


def _push_children(registry, children):
    for _, child in sorted(children, reverse=True):
        registry.push(child)


def expand(evaluator, registry, combo, start=0, check_descent=False):
    """
    Evaluate the sub-combinations of combo from position `start` on.

    New completions are admitted and pushed, lowest stored value on top.
    Returns True when the incumbent improved; combo is then pushed back with
    its cursor so the remaining sub-combinations are evaluated later.
    """
    stored = registry.visited[combo]
    subs = [combo[:i] + combo[i + 1:] for i in reversed(range(len(combo)))]
    registry.expanded.add(combo)
    children = []
    for position in range(start, len(subs)):
        subspace = evaluator(subs[position])
        if check_descent and subspace.numerator > stored:
            raise DescentViolationError(combo, subs[position], stored, subspace.numerator)
        for t in sorted(subspace.witnesses):
            child = tuple(sorted(subspace.combination + (t,)))
            if registry.admit(child, subspace.numerator):
                children.append((subspace.numerator, child))
        if registry.offer(subspace):
            if position + 1 < len(subs):
                registry.push(combo, position + 1)
            _push_children(registry, children)
            return True
    _push_children(registry, children)
    return False


def prune(registry, d0=None):
    """Drop frontier entries whose stored value exceeds d0 + (p-2)."""
    bound = (registry.incumbent if d0 is None else d0) + registry.offset
    for combo, value in registry.visited.items():
        if value > bound:
            registry.pruned.add(combo)
    registry.frontier = [
        (combo, cursor) for combo, cursor in registry.frontier if registry.visited[combo] <= bound
    ]
    return registry


def envelope_points(evaluator, registry):
    """Observations on or on the smaller side of every active hyperplane."""
    cloud, tol = evaluator.cloud, evaluator.tol
    active = registry.active()
    if not active:
        return EnvelopePointSet(np.zeros(0, dtype=np.int64), 0)
    normals = np.array([
        complement_vectors(cloud.coords[list(combo)], 1, tol, combo)[0] for combo in active
    ])
    signs = tol.signs(cloud.coords @ normals.T, cloud.norms[:, None])
    on_plane = signs == 0
    planar_counts = on_plane.sum(axis=0)
    if np.any(planar_counts != cloud.p - 1):
        bad = int(np.flatnonzero(planar_counts != cloud.p - 1)[0])
        raise GeneralPositionError(np.flatnonzero(on_plane[:, bad]), 'points on a common hyperplane')
    negative = np.count_nonzero(signs < 0, axis=0)
    positive = np.count_nonzero(signs > 0, axis=0)
    keep = on_plane.copy()
    keep |= (signs < 0) & (negative <= positive)
    keep |= (signs > 0) & (positive <= negative)
    return EnvelopePointSet(np.flatnonzero(keep.any(axis=1)), len(active))


def final_sweep(evaluator, registry, d0=None, threads=1):
    """Exhaustive pass over the envelope point set; returns the final numerator."""
    cloud = evaluator.cloud
    if d0 is not None and d0 < registry.incumbent:
        registry.incumbent = d0
    if registry.incumbent > 0:
        envelope = envelope_points(evaluator, registry)
        registry.envelope_size = len(envelope.indices)
        arity = cloud.p - 2
        if threads > 1:
            _, combo, _ = minimize_combinations(cloud, evaluator.tol, envelope.indices, threads)
            if combo is not None:
                registry.offer(evaluator(combo))
        else:
            points = envelope.indices
            for local in iter_combinations(len(points), arity):
                registry.offer(evaluator(tuple(int(points[i]) for i in local)))
                if registry.incumbent == 0:
                    break
        logger.debug(
            f'adia: envelope of {envelope.hyperplanes} hyperplanes, '
            f'{len(envelope.indices)} points'
        )
    return int(registry.incumbent) + cloud.zero_count


def _scan_result(cloud, scan, evaluator):
    return DepthResult(
        numerator=cloud.zero_count,
        n=cloud.total,
        witness_combination=None,
        witness_direction=scan.direction,
        algorithm='adia',
        stats={'evaluations': evaluator.evaluations, 'expansions': 0},
    )


def depth_adia(cloud, tol=None, threads=None, check_descent=None, verify_general_position=False):
    """Exact depth by the adaptive hyperplane search."""
    tol = resolve_tolerance(tol)
    threads = int(threads or get_setting('THREADS'))
    if check_descent is None:
        check_descent = bool(get_setting('CHECK_DESCENT'))
    check_size(cloud)
    if verify_general_position:
        screen_general_position(cloud, tol, threads)

    evaluator = SubspaceEvaluator(cloud, tol)
    if cloud.p == 2:
        subspace = evaluator(())
        return witness_result(cloud, subspace, tol, 'adia', {'evaluations': 1})

    scan = initial_scan(cloud, tol, evaluator)
    if scan.scan_count == 0:
        return _scan_result(cloud, scan, evaluator)

    registry = FrontierRegistry(offset=cloud.p - 2)
    registry.admit(scan.seed, scan.d0)
    registry.offer(evaluator(scan.base))
    registry.push(scan.seed)

    while registry.frontier and registry.incumbent > 0:
        combo, cursor = registry.pop()
        if combo in registry.pruned:
            continue
        if expand(evaluator, registry, combo, cursor, check_descent):
            prune(registry)

    final_sweep(evaluator, registry, threads=threads)
    stats = {
        'evaluations': evaluator.evaluations,
        'expansions': len(registry.expanded),
        'visited': len(registry.visited),
        'pruned': len(registry.pruned),
        'envelope': registry.envelope_size,
        'incumbents': list(registry.history),
    }
    logger.debug(f'adia: {stats}')
    return witness_result(cloud, registry.best, tol, 'adia', stats)
