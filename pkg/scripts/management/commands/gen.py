"""
File: scripts/management/commands/gen.py
Generate seeded standard normal datasets and alpha * (1, ..., 1) query files
for the benchmark grid.
"""

from pathlib import Path

import numpy as np
from decouple import Csv
from django.core.management.base import CommandError

from apps.depth.benchmark import normal_sample, query_point
from apps.depth.dataio import write_matrix
from apps.depth.serializers import BenchConfigSerializer
from scripts.management.base import INPUT_EXIT_CODE, DepthCommand


class Command(DepthCommand):
    help = 'Generate standard normal datasets and query files'

    def add_arguments(self, parser):
        parser.add_argument(
            '--dims',
            type=Csv(int),
            required=True,
            help='Comma-separated dimensions, e.g. 3,4,5'
        )
        parser.add_argument(
            '--sizes',
            type=Csv(int),
            required=True,
            help='Comma-separated, strictly increasing sample sizes'
        )
        parser.add_argument(
            '--alphas',
            type=Csv(float),
            help='Query offsets written to queries_p{p}.csv (default: 0,0.4,0.8,1.2)'
        )
        parser.add_argument(
            '--seed',
            type=int,
            default=0,
            help='Random seed (default: 0)'
        )
        parser.add_argument(
            '--out',
            default='.',
            help='Output directory (default: current directory)'
        )

    def handle(self, *args, **options):
        payload = {key: options[key] for key in ('dims', 'sizes', 'seed')}
        if options['alphas'] is not None:
            payload['alphas'] = options['alphas']
        serializer = BenchConfigSerializer(data=payload)
        if not serializer.is_valid():
            raise self.invalid(serializer.errors)
        grid = serializer.validated_data

        out = Path(options['out'])
        try:
            out.mkdir(parents=True, exist_ok=True)
            for p in grid['dims']:
                for n in grid['sizes']:
                    path = out / f'normal_p{p}_n{n}.csv'
                    write_matrix(path, normal_sample(grid['seed'], p, n))
                    self.stdout.write(f'  {path}')
                queries = np.array([query_point(alpha, p) for alpha in grid['alphas']])
                path = out / f'queries_p{p}.csv'
                write_matrix(path, queries)
                self.stdout.write(f'  {path}')
        except OSError as exc:
            raise CommandError(f'cannot write to {out}: {exc.strerror}', returncode=INPUT_EXIT_CODE)

        self.stdout.write(
            self.style.SUCCESS(
                f'Generated {len(grid["dims"]) * len(grid["sizes"])} datasets in {out}'
            )
        )
