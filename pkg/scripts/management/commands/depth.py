"""
File: scripts/management/commands/depth.py
Compute the exact halfspace depth of query points with respect to a data file.
Emits one record per query as JSON or CSV.
"""

import logging

from apps.depth.dataio import dump_records, read_matrix
from apps.depth.exceptions import DepthError
from apps.depth.runner import ALGORITHMS, depth_records
from apps.depth.serializers import RunConfigSerializer
from scripts.management.base import DepthCommand

logger = logging.getLogger(__name__)


class Command(DepthCommand):
    help = 'Compute the halfspace depth of query points'

    def add_arguments(self, parser):
        parser.add_argument(
            '--algorithm',
            choices=ALGORITHMS,
            default='rcom',
            help='Depth algorithm (default: rcom)'
        )
        parser.add_argument(
            '--data',
            required=True,
            help='CSV file with one observation per row'
        )
        queries = parser.add_mutually_exclusive_group(required=True)
        queries.add_argument(
            '--queries',
            help='CSV file with one query point per row'
        )
        queries.add_argument(
            '--all-observations',
            action='store_true',
            help='Use every observation of the data file as a query'
        )
        parser.add_argument(
            '--tolerance',
            type=float,
            help='Relative sign tolerance (default: DEPTH["TOLERANCE"])'
        )
        parser.add_argument(
            '--threads',
            type=int,
            help='Worker threads for combination sweeps'
        )
        parser.add_argument(
            '--trials',
            type=int,
            help='Random directions for random-upper'
        )
        parser.add_argument(
            '--seed',
            type=int,
            default=0,
            help='Seed for random-upper (default: 0)'
        )
        parser.add_argument(
            '--force',
            action='store_true',
            help='Run the oracle beyond its work guard'
        )
        parser.add_argument(
            '--strict',
            action='store_true',
            help='Reject inputs that violate general position before searching'
        )
        parser.add_argument(
            '--format',
            choices=['json', 'csv'],
            help='Output format (default: from the --out suffix, else json)'
        )
        parser.add_argument(
            '--out',
            help='Write records to this file instead of stdout'
        )

    def handle(self, *args, **options):
        serializer = RunConfigSerializer(data={
            key: options[key]
            for key in ('algorithm', 'tolerance', 'threads', 'trials', 'seed', 'force', 'strict')
        })
        if not serializer.is_valid():
            raise self.invalid(serializer.errors)
        config = serializer.to_config()

        try:
            data = read_matrix(options['data'], 'data')
            if options['all_observations']:
                queries = data
            else:
                queries = read_matrix(options['queries'], 'queries')
            records = depth_records(data, queries, config)
        except DepthError as exc:
            raise self.fail(exc)

        logger.info(f'{len(records)} queries evaluated with {config.algorithm}')
        fmt = options['format']
        if fmt is None:
            fmt = 'csv' if str(options['out'] or '').lower().endswith('.csv') else 'json'
        self.emit(dump_records(records, fmt), options['out'])
