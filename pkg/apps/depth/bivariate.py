# File: TukeyDepthHub/apps/depth/bivariate.py
"""
Exact depth of the origin for planar point sets by a circular-sequence sweep.

Every nonzero point y flips side exactly once while a direction u turns
through half a circle: at the angle where u is orthogonal to y. Folding those
angles into [0, pi) and sorting them once gives every distinct open-halfplane
split; the depth is the smallest side over all splits plus the points that
sit on the origin.

The sweep starts just after u0 = (1, 0). Between two consecutive blocks of
equal folded angle ("arcs") S1 counts the points with u.y > 0 and S2 the
points with u.y < 0, so min(S1, S2) is the count of the better of u and -u.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DegenerateInputError, DepthInputError, GeneralPositionError
from .geometry import resolve_tolerance, zero_mask

logger = logging.getLogger(__name__)

BRUTE_CHUNK = 2048


@dataclass(frozen=True)
class BivariateDepth:
    numerator: int
    n: int
    m: int
    witnesses: frozenset = field(default_factory=frozenset)
    witness_direction: np.ndarray = field(default_factory=lambda: np.array([1.0, 0.0]))


@dataclass
class SweepState:
    """Sorted sweep of the nonzero points, one entry per arc between blocks."""

    L: np.ndarray
    theta_fold: np.ndarray
    order: np.ndarray
    block_starts: np.ndarray
    S1: np.ndarray
    m: int

    @property
    def S2(self):
        return self.m - self.S1

    @property
    def S0(self):
        return np.minimum(self.S1, self.S2)


def _as_planar(points):
    try:
        Y = np.asarray(points, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DepthInputError(f'planar points are not numeric: {exc}') from exc
    if Y.size == 0:
        raise DegenerateInputError('bivariate depth needs at least one point')
    Y = Y.reshape(-1, 2) if Y.ndim == 1 else Y
    if Y.ndim != 2 or Y.shape[1] != 2:
        raise DepthInputError(f'planar points must be n x 2, got shape {Y.shape}')
    if not np.all(np.isfinite(Y)):
        raise DepthInputError('planar points contain non-finite values')
    return Y


def build_sweep(P, norms, tol):
    """
    Sort the nonzero points P by folded critical angle and run the sweep.

    Points on the vertical axis have critical angle 0: they are already past
    their flip at the start of the sweep and never flip again.
    """
    x, y = P[:, 0], P[:, 1]
    on_axis = np.abs(x) <= tol.eps * norms
    L = np.where(on_axis, y > 0, x > 0)
    theta = np.mod(np.arctan2(y, x) + np.pi / 2, np.pi)

    events = np.flatnonzero(~on_axis)
    order = events[np.lexsort((events, theta[events]))]

    if order.size:
        a, b = P[order[:-1]], P[order[1:]]
        cross = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
        tied = np.abs(cross) <= tol.eps * norms[order[:-1]] * norms[order[1:]]
        block_starts = np.flatnonzero(np.r_[True, ~tied])
        flips = 1 - 2 * L[order].astype(np.int64)
        deltas = np.add.reduceat(flips, block_starts)
    else:
        block_starts = np.zeros(0, dtype=np.int64)
        deltas = np.zeros(0, dtype=np.int64)

    start = int(L.sum())
    S1 = np.concatenate(([start], start + np.cumsum(deltas)))
    return SweepState(L, theta, order, block_starts, S1, len(P)), on_axis


def _attains(state, arcs, positive, minimum):
    # a point is a witness through an arc when the minimizing side excludes it
    S1 = state.S1[arcs]
    return (positive & (state.m - S1 == minimum)) | (~positive & (S1 == minimum))


def _witnesses(state, on_axis, minimum):
    blocks = len(state.block_starts)
    found = []
    if state.order.size:
        block_of = np.cumsum(np.isin(np.arange(state.order.size), state.block_starts)) - 1
        before = state.L[state.order]
        hit = _attains(state, block_of, before, minimum) | _attains(
            state, block_of + 1, ~before, minimum
        )
        found.append(state.order[hit])
    axis = np.flatnonzero(on_axis)
    if axis.size:
        positive = state.L[axis]
        first = np.zeros(axis.size, dtype=np.int64)
        last = np.full(axis.size, blocks, dtype=np.int64)
        hit = _attains(state, first, positive, minimum) | _attains(state, last, positive, minimum)
        found.append(axis[hit])
    return np.concatenate(found) if found else np.zeros(0, dtype=np.int64)


def _arc_direction(state, arc, minimum):
    blocks = len(state.block_starts)
    angles = state.theta_fold[state.order[state.block_starts]] if blocks else np.zeros(0)
    lo = 0.0 if arc == 0 else angles[arc - 1]
    hi = np.pi if arc == blocks else angles[arc]
    mid = 0.5 * (lo + hi)
    u = np.array([np.cos(mid), np.sin(mid)])
    return u if state.m - state.S1[arc] == minimum else -u


def _check_general_position(state, on_axis, idx):
    sizes = np.diff(np.r_[state.block_starts, state.order.size])
    if np.any(sizes > 1):
        b = int(np.flatnonzero(sizes > 1)[0])
        start = state.block_starts[b]
        tied = state.order[start:start + sizes[b]]
        raise GeneralPositionError(sorted(idx[tied]), 'points collinear with the origin')
    if on_axis.sum() > 1:
        raise GeneralPositionError(sorted(idx[on_axis]), 'points collinear with the origin')


def depth2_origin(points, tol=None, strict=False):
    """
    Depth numerator of the origin among planar points, with witnesses.

    With strict=True any two nonzero points collinear with the origin raise
    GeneralPositionError (indices refer to the input rows).
    """
    tol = resolve_tolerance(tol)
    Y = _as_planar(points)
    n = Y.shape[0]
    norms = np.hypot(Y[:, 0], Y[:, 1])
    idx = np.flatnonzero(~zero_mask(norms, tol))
    m = idx.size
    if m == 0:
        return BivariateDepth(numerator=n, n=n, m=0)

    state, on_axis = build_sweep(Y[idx], norms[idx], tol)
    if strict:
        _check_general_position(state, on_axis, idx)

    S0 = state.S0
    minimum = int(S0.min())
    arc = int(np.argmin(S0))
    witnesses = frozenset(int(i) for i in idx[_witnesses(state, on_axis, minimum)])
    return BivariateDepth(
        numerator=minimum + (n - m),
        n=n,
        m=m,
        witnesses=witnesses,
        witness_direction=_arc_direction(state, arc, minimum),
    )


def sweep_brute_check(points, tol=None):
    """
    Reference count: evaluate every critical angle and every midpoint.

    Quadratic in the number of points; used to cross-check depth2_origin.
    """
    tol = resolve_tolerance(tol)
    Y = _as_planar(points)
    n = Y.shape[0]
    norms = np.hypot(Y[:, 0], Y[:, 1])
    zeros = zero_mask(norms, tol)
    if zeros.all():
        return n
    P, pn = Y[~zeros], norms[~zeros]

    alpha = np.arctan2(P[:, 1], P[:, 0])
    critical = np.unique(np.mod(np.r_[alpha + np.pi / 2, alpha - np.pi / 2], 2 * np.pi))
    following = np.r_[critical[1:], critical[0] + 2 * np.pi]
    angles = np.r_[critical, 0.5 * (critical + following)]

    best = P.shape[0]
    for start in range(0, angles.size, BRUTE_CHUNK):
        chunk = angles[start:start + BRUTE_CHUNK]
        U = np.vstack([np.cos(chunk), np.sin(chunk)])
        dots = P @ U
        counts = np.count_nonzero(dots <= tol.eps * pn[:, None], axis=0)
        best = min(best, int(counts.min()))
    return best + int(zeros.sum())
