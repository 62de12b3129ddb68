# File: TukeyDepthHub/apps/depth/geometry.py
"""
Linear-algebra substrate shared by every depth algorithm.

Points are centered at the query before anything else happens, so all
algorithms compute the depth of the origin. Observations equal to the query
are dropped at ingestion and reported through PointCloud.zero_count; every
closed halfspace through the query contains them, so callers add the count
back to their final numerator.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from .conf import get_setting
from .exceptions import (
    AllPointsCoincideError,
    DepthInputError,
    GeneralPositionError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tolerance:
    """Relative tolerance for sign classification of dot products."""

    eps: float = 1e-9

    def __post_init__(self):
        if not (self.eps >= 0 and math.isfinite(self.eps)):
            raise DepthInputError(f'tolerance must be a finite value >= 0, got {self.eps}')

    @classmethod
    def default(cls):
        return cls(float(get_setting('TOLERANCE')))

    def signs(self, dots, scale):
        """Return -1, 0 or +1 per dot product, zero inside the eps*scale band."""
        band = self.eps * np.asarray(scale, dtype=float)
        out = np.zeros(np.shape(dots), dtype=np.int8)
        out[dots > band] = 1
        out[dots < -band] = -1
        return out


def resolve_tolerance(tol):
    if tol is None:
        return Tolerance.default()
    if isinstance(tol, Tolerance):
        return tol
    return Tolerance(float(tol))


@dataclass(frozen=True, eq=False)
class PointCloud:
    """Observations centered at the query point, coincident rows removed."""

    coords: np.ndarray
    zero_count: int = 0
    norms: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float)
        if coords.ndim != 2:
            raise DepthInputError('point cloud must be a 2-D array')
        coords.setflags(write=False)
        object.__setattr__(self, 'coords', coords)
        norms = np.linalg.norm(coords, axis=1)
        norms.setflags(write=False)
        object.__setattr__(self, 'norms', norms)

    @property
    def n(self):
        """Number of stored (nonzero) rows."""
        return self.coords.shape[0]

    @property
    def p(self):
        return self.coords.shape[1]

    @property
    def total(self):
        """Number of observations including the ones equal to the query."""
        return self.n + self.zero_count

    def take(self, indices):
        """Sub-cloud of the given rows; zero_count is carried over."""
        return PointCloud(self.coords[np.asarray(indices, dtype=int)], self.zero_count)


def _as_matrix(raw_points, name):
    try:
        array = np.asarray(raw_points, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DepthInputError(f'{name} is not numeric: {exc}') from exc
    if not np.all(np.isfinite(array)):
        raise DepthInputError(f'{name} contains non-finite values')
    return array


def zero_mask(norms, tol):
    """Rows whose norm falls inside the tolerance band of the largest norm."""
    scale = float(norms.max()) if norms.size else 0.0
    if scale == 0:
        return np.ones(len(norms), dtype=bool)
    return norms <= tol.eps * scale


def center_at(raw_points, z, tol=None):
    """
    Shift raw observations so that the query z sits at the origin.

    Rows equal to z within tolerance are removed and counted in zero_count.
    Raises AllPointsCoincideError when nothing is left.
    """
    tol = resolve_tolerance(tol)
    raw = _as_matrix(raw_points, 'data')
    query = _as_matrix(z, 'query').reshape(-1)
    if raw.ndim != 2 or raw.shape[0] < 1:
        raise DepthInputError('data must be a non-empty n x p matrix')
    if raw.shape[1] < 2:
        raise DepthInputError(f'dimension must be at least 2, got {raw.shape[1]}')
    if query.shape[0] != raw.shape[1]:
        raise DepthInputError(
            f'query has {query.shape[0]} coordinates, data has {raw.shape[1]}'
        )

    shifted = raw - query
    norms = np.linalg.norm(shifted, axis=1)
    scale = max(1.0, float(np.abs(raw).max()), float(np.abs(query).max()))
    coincident = norms <= tol.eps * scale
    zero_count = int(coincident.sum())
    if zero_count == raw.shape[0]:
        raise AllPointsCoincideError(raw.shape[0])
    if zero_count:
        logger.debug(f'{zero_count} observation(s) coincide with the query')
    return PointCloud(shifted[~coincident], zero_count)


# ---------------------------------------------------------------------------
# Combinations
# ---------------------------------------------------------------------------

def make_combination(indices, n, arity=None):
    combo = tuple(int(i) for i in indices)
    if arity is not None and len(combo) != arity:
        raise DepthInputError(f'combination {list(combo)} must have {arity} indices')
    if any(b <= a for a, b in zip(combo, combo[1:])):
        raise DepthInputError(f'combination {list(combo)} is not strictly increasing')
    if combo and (combo[0] < 0 or combo[-1] >= n):
        raise DepthInputError(f'combination {list(combo)} out of range for n={n}')
    return combo


def next_combination(combo, n):
    """Lexicographic successor of combo among k-subsets of range(n), or None."""
    k = len(combo)
    items = list(combo)
    i = k - 1
    while i >= 0 and items[i] == n - k + i:
        i -= 1
    if i < 0:
        return None
    items[i] += 1
    for j in range(i + 1, k):
        items[j] = items[j - 1] + 1
    return tuple(items)


def unrank_combination(rank, n, k):
    """The k-subset of range(n) at position rank in lexicographic order."""
    if not 0 <= rank < math.comb(n, k):
        raise ValueError(f'rank {rank} out of range for C({n}, {k})')
    combo = []
    x = 0
    for i in range(k):
        while True:
            count = math.comb(n - x - 1, k - i - 1)
            if rank < count:
                break
            rank -= count
            x += 1
        combo.append(x)
        x += 1
    return tuple(combo)


def iter_combinations(n, k, start=0, count=None) -> Iterator[tuple]:
    """Yield k-subsets of range(n) lexicographically from rank `start`."""
    total = math.comb(n, k)
    if count is None:
        count = total - start
    if count <= 0 or start >= total:
        return
    combo = unrank_combination(start, n, k)
    for _ in range(count):
        yield combo
        combo = next_combination(combo, n)
        if combo is None:
            return


def chunk_ranges(total, chunks):
    """Split range(total) into at most `chunks` contiguous (start, count) pieces."""
    chunks = max(1, min(chunks, total))
    size, extra = divmod(total, chunks)
    ranges = []
    start = 0
    for c in range(chunks):
        count = size + (1 if c < extra else 0)
        if count:
            ranges.append((start, count))
        start += count
    return ranges


# ---------------------------------------------------------------------------
# Orthogonal complements
# ---------------------------------------------------------------------------

class ComplementBasis(NamedTuple):
    e1: np.ndarray
    e2: np.ndarray

    @property
    def matrix(self):
        return np.vstack([self.e1, self.e2])


def _orthonormal_rows(rows, tol, combination):
    basis = []
    for row in rows:
        vector = np.array(row, dtype=float)
        length = np.linalg.norm(vector)
        for _ in range(2):
            for q in basis:
                vector -= (q @ vector) * q
        residual = np.linalg.norm(vector)
        if residual == 0 or residual <= tol.eps * length:
            raise GeneralPositionError(combination, 'combination rows are linearly dependent')
        basis.append(vector / residual)
    return basis


def complement_vectors(rows, count, tol, combination=()):
    """
    Orthonormal vectors orthogonal to every row.

    The standard basis is orthogonalized against the rows; the survivor with
    the largest residual is taken, the rest are orthogonalized against it, and
    so on until `count` vectors are collected.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    p = rows.shape[1]
    if rows.shape[0] + count > p:
        raise GeneralPositionError(combination, f'no {count}-dimensional complement in R^{p}')
    basis = _orthonormal_rows(rows, tol, combination)

    residuals = np.eye(p)
    for q in basis:
        residuals -= np.outer(q, q @ residuals)
    chosen = []
    for _ in range(count):
        lengths = np.linalg.norm(residuals, axis=0)
        j = int(np.argmax(lengths))
        vector = residuals[:, j] / lengths[j]
        for q in basis + chosen:
            vector -= (q @ vector) * q
        vector /= np.linalg.norm(vector)
        chosen.append(vector)
        residuals -= np.outer(vector, vector @ residuals)
    return np.array(chosen)


def complement_basis(cloud, combo, tol=None):
    """Two orthonormal vectors spanning the complement of the combination's span."""
    tol = resolve_tolerance(tol)
    combo = make_combination(combo, cloud.n, cloud.p - 2)
    e1, e2 = complement_vectors(cloud.coords[list(combo)], 2, tol, combo)
    return ComplementBasis(e1, e2)


def project2(cloud, basis):
    """Coordinates (e1.x, e2.x) of every row, in row order."""
    return cloud.coords @ basis.matrix.T


# ---------------------------------------------------------------------------
# Direction witnesses
# ---------------------------------------------------------------------------

def count_closed(coords, u, tol, norms=None):
    """#{i : u.x_i <= 0} with tolerance-classified signs."""
    if norms is None:
        norms = np.linalg.norm(coords, axis=1)
    signs = tol.signs(coords @ u, norms * np.linalg.norm(u))
    return int(np.count_nonzero(signs <= 0))


def lift_direction(coords, members, u, tol):
    """
    Tilt u inside the span of the members so they leave the hyperplane.

    u is orthogonal to every member row. The returned unit vector has every
    member strictly on its positive side and leaves the sign of every other
    row unchanged.
    """
    u = np.asarray(u, dtype=float)
    u = u / np.linalg.norm(u)
    members = list(members)
    if not members:
        return u
    rows = coords[members]
    v = rows.T @ np.linalg.solve(rows @ rows.T, np.ones(len(members)))
    others = np.ones(coords.shape[0], dtype=bool)
    others[members] = False
    a = coords[others] @ u
    b = coords[others] @ v
    norms = np.linalg.norm(coords[others], axis=1)
    moving = (a * b < 0) & (np.abs(a) > tol.eps * norms)
    limit = float(np.min(np.abs(a[moving]) / np.abs(b[moving]))) if moving.any() else math.inf
    step = 0.5 * min(limit, 1.0 / np.linalg.norm(v))
    lifted = u + step * v
    return lifted / np.linalg.norm(lifted)
