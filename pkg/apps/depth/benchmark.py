# File: TukeyDepthHub/apps/depth/benchmark.py
"""
Benchmark grid over dimension, sample size, query offset and algorithm.

Data are standard normal samples seeded by (seed, p, n); the query is
alpha * (1, ..., 1). A cell whose repetitions exceed the time budget is
reported as skipped, and so is every larger sample size for the same
(p, alpha, algorithm), mirroring "not computable within the budget".
"""

import logging
from dataclasses import replace

import numpy as np

from .conf import get_setting
from .exceptions import DegenerateInputError, OracleBudgetError
from .oracle import oracle_work
from .runner import EXACT_ALGORITHMS, RunConfig, timed_depth

logger = logging.getLogger(__name__)

BENCH_FIELDS = [
    'p',
    'n',
    'alpha',
    'algorithm',
    'status',
    'reps',
    'numerator',
    'total',
    'depth',
    'min_ns',
    'mean_ns',
    'max_ns',
    'evaluations',
]


def normal_sample(seed, p, n):
    rng = np.random.default_rng([seed, p, n])
    return rng.standard_normal((n, p))


def query_point(alpha, p):
    return np.full(p, float(alpha))


def _row(p, n, alpha, algorithm, status, **values):
    row = {field: '' for field in BENCH_FIELDS}
    row.update(p=p, n=n, alpha=alpha, algorithm=algorithm, status=status)
    row.update(values)
    return row


def _timings(times):
    return {
        'min_ns': min(times),
        'mean_ns': int(round(sum(times) / len(times))),
        'max_ns': max(times),
    }


def time_cell(data, queries, config, reps, budget_ns):
    """
    Run every query `reps` times; returns (status, values).

    values holds the numerator of the first query and the timings over all
    runs. Exceeding the budget or the oracle guard reports the cell as skipped.
    """
    times = []
    values = {}
    spent = 0
    for query in queries:
        for _ in range(reps):
            try:
                result, elapsed = timed_depth(data, query, config)
            except OracleBudgetError:
                return 'skipped', {}
            except DegenerateInputError as exc:
                logger.warning(f'{config.algorithm}: {exc}')
                return 'degenerate', {}
            spent += elapsed
            times.append(elapsed)
            if not values:
                values = {
                    'numerator': result.numerator,
                    'total': result.n,
                    'depth': f'{result.numerator / result.n:.6f}',
                    'evaluations': result.stats.get('evaluations', ''),
                }
            if budget_ns is not None and spent > budget_ns:
                return 'skipped', {}
    values.update(_timings(times))
    return 'ok', values


def _verify(rows):
    exact = [row for row in rows if row['status'] == 'ok' and row['algorithm'] in EXACT_ALGORITHMS]
    if len({row['numerator'] for row in exact}) > 1:
        logger.error(
            'numerators disagree: '
            + ', '.join(f"{row['algorithm']}={row['numerator']}" for row in exact)
        )
        for row in exact:
            row['status'] = 'mismatch'


def budget_nanoseconds(budget):
    """Per-cell budget in ns. None reads DEPTH["BENCH_BUDGET"]; 0 disables the budget."""
    if budget is None:
        budget = float(get_setting('BENCH_BUDGET'))
    return int(budget * 1e9) if budget > 0 else None


def run_grid(dims, sizes, alphas, algorithms, reps, seed=0, budget=None, config=None):
    """Rows of the timing table, in (p, n, alpha, algorithm) order."""
    config = config or RunConfig()
    budget_ns = budget_nanoseconds(budget)
    exhausted = set()
    rows = []
    for p in dims:
        for n in sizes:
            data = normal_sample(seed, p, n)
            for alpha in alphas:
                cell = []
                for algorithm in algorithms:
                    key = (p, alpha, algorithm)
                    if algorithm == 'bivariate' and p != 2:
                        cell.append(_row(p, n, alpha, algorithm, 'unsupported'))
                        continue
                    if key in exhausted or (
                        algorithm == 'oracle'
                        and oracle_work(n, p) > int(get_setting('ORACLE_MAX_WORK'))
                    ):
                        cell.append(_row(p, n, alpha, algorithm, 'skipped'))
                        continue
                    run_config = replace(config, algorithm=algorithm, seed=seed)
                    status, values = time_cell(
                        data, [query_point(alpha, p)], run_config, reps, budget_ns
                    )
                    if status == 'skipped':
                        exhausted.add(key)
                    cell.append(_row(p, n, alpha, algorithm, status, reps=reps, **values))
                    logger.info(f'bench p={p} n={n} alpha={alpha} {algorithm}: {status}')
                _verify(cell)
                rows.extend(cell)
    return rows


def run_dataset(data, queries, algorithms, reps, budget=None, config=None):
    """Rows for a user-supplied dataset; timings are taken over all queries."""
    config = config or RunConfig()
    budget_ns = budget_nanoseconds(budget)
    n, p = data.shape
    cell = []
    for algorithm in algorithms:
        if algorithm == 'bivariate' and p != 2:
            cell.append(_row(p, n, '', algorithm, 'unsupported'))
            continue
        run_config = replace(config, algorithm=algorithm)
        status, values = time_cell(data, queries, run_config, reps, budget_ns)
        cell.append(_row(p, n, '', algorithm, status, reps=reps, **values))
    _verify(cell)
    return cell
