"""
File: scripts/management/commands/bench.py
Time the depth algorithms over a grid of seeded normal datasets, or over a
user-supplied dataset, and write the timing table as CSV.
"""

import logging

from decouple import Csv
from django.core.management.base import CommandError

from apps.depth.benchmark import BENCH_FIELDS, run_dataset, run_grid
from apps.depth.dataio import dump_table, read_matrix
from apps.depth.exceptions import DepthError, OracleBudgetError
from apps.depth.runner import RunConfig
from apps.depth.serializers import BenchConfigSerializer
from scripts.management.base import DepthCommand

logger = logging.getLogger(__name__)


class Command(DepthCommand):
    help = 'Benchmark the depth algorithms and write a timing table'

    def add_arguments(self, parser):
        parser.add_argument(
            '--dims',
            type=Csv(int),
            help='Comma-separated dimensions, e.g. 3,4'
        )
        parser.add_argument(
            '--sizes',
            type=Csv(int),
            help='Comma-separated, strictly increasing sample sizes'
        )
        parser.add_argument(
            '--alphas',
            type=Csv(float),
            help='Query offsets alpha for z = alpha * (1, ..., 1) (default: 0,0.4,0.8,1.2)'
        )
        parser.add_argument(
            '--algorithms',
            type=Csv(str),
            help='Comma-separated algorithms (default: rcom,adia)'
        )
        parser.add_argument(
            '--reps',
            type=int,
            default=3,
            help='Repetitions per cell (default: 3)'
        )
        parser.add_argument(
            '--budget',
            type=float,
            help=(
                'Seconds per cell before it is marked skipped; 0 disables the budget '
                '(default: DEPTH["BENCH_BUDGET"])'
            )
        )
        parser.add_argument(
            '--seed',
            type=int,
            default=0,
            help='Random seed (default: 0)'
        )
        parser.add_argument(
            '--tolerance',
            type=float,
            help='Relative sign tolerance'
        )
        parser.add_argument(
            '--threads',
            type=int,
            help='Worker threads inside each algorithm'
        )
        parser.add_argument(
            '--dataset',
            help='Benchmark this CSV file instead of generated normal data'
        )
        parser.add_argument(
            '--queries',
            help='Query CSV for --dataset (default: the origin)'
        )
        parser.add_argument(
            '--all-observations',
            action='store_true',
            help='With --dataset, use every observation as a query'
        )
        parser.add_argument(
            '--out',
            help='Write the table to this file instead of stdout'
        )

    def handle(self, *args, **options):
        payload = {
            key: options[key]
            for key in ('dims', 'sizes', 'alphas', 'algorithms', 'budget', 'tolerance', 'threads')
            if options[key] is not None
        }
        payload.update(reps=options['reps'], seed=options['seed'])
        serializer = BenchConfigSerializer(
            data=payload, context={'dataset': options['dataset']}
        )
        if not serializer.is_valid():
            raise self.invalid(serializer.errors)
        grid = serializer.validated_data
        config = RunConfig(
            tolerance=grid.get('tolerance'), threads=grid.get('threads'), seed=grid['seed']
        )

        try:
            if options['dataset']:
                rows = self.bench_dataset(grid, config, options)
            else:
                rows = run_grid(
                    grid['dims'],
                    grid['sizes'],
                    grid['alphas'],
                    grid['algorithms'],
                    grid['reps'],
                    seed=grid['seed'],
                    budget=grid.get('budget'),
                    config=config,
                )
        except DepthError as exc:
            raise self.fail(exc)

        self.emit(dump_table(rows, BENCH_FIELDS), options['out'])

        statuses = {row['status'] for row in rows}
        if 'mismatch' in statuses:
            raise CommandError('exact algorithms disagree; see the mismatch rows', returncode=1)
        if 'skipped' in statuses and statuses <= {'skipped', 'unsupported'}:
            raise CommandError(
                'every cell was skipped within the budget',
                returncode=OracleBudgetError.exit_code,
            )

    def bench_dataset(self, grid, config, options):
        data = read_matrix(options['dataset'], 'dataset')
        if options['all_observations']:
            queries = data
        elif options['queries']:
            queries = read_matrix(options['queries'], 'queries')
        else:
            queries = data[:1] * 0.0
        logger.info(f'bench {options["dataset"]}: {data.shape[0]} x {data.shape[1]}')
        return run_dataset(
            data, queries, grid['algorithms'], grid['reps'], grid.get('budget'), config
        )
