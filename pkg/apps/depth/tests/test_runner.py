# File: TukeyDepthHub/apps/depth/tests/test_runner.py

import numpy as np
from django.test import SimpleTestCase, override_settings

from apps.depth.dataio import RECORD_FIELDS
from apps.depth.exceptions import DepthInputError, OracleBudgetError
from apps.depth.runner import RunConfig, compute_depth, depth_records, timed_depth

from .factories import SIMPLEX


class ComputeDepthTest(SimpleTestCase):
    def test_every_algorithm_on_simplex(self):
        for algorithm in ('rcom', 'adia', 'oracle'):
            with self.subTest(algorithm=algorithm):
                result = compute_depth(SIMPLEX, np.zeros(3), RunConfig(algorithm=algorithm))
                self.assertEqual(result.fraction, '1/4')
                self.assertEqual(result.algorithm, algorithm)

    def test_bivariate(self):
        data = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
        result = compute_depth(data, np.array([0.1, 0.2]), RunConfig(algorithm='bivariate'))
        self.assertEqual(result.fraction, '1/4')
        self.assertEqual(result.witness_combination, ())

    def test_bivariate_needs_planar_data(self):
        with self.assertRaises(DepthInputError):
            compute_depth(SIMPLEX, np.zeros(3), RunConfig(algorithm='bivariate'))

    def test_random_upper_bounds_exact(self):
        rng = np.random.default_rng(8)
        data = rng.standard_normal((25, 3))
        query = np.full(3, 0.3)
        exact = compute_depth(data, query, RunConfig()).numerator
        upper = compute_depth(data, query, RunConfig(algorithm='random-upper', trials=500))
        self.assertGreaterEqual(upper.numerator, exact)
        self.assertIsNone(upper.witness_direction)

    def test_all_points_coincide(self):
        data = np.tile([1.0, 2.0, 3.0], (5, 1))
        result = compute_depth(data, np.array([1.0, 2.0, 3.0]), RunConfig())
        self.assertEqual((result.numerator, result.n), (5, 5))

    def test_unknown_algorithm(self):
        with self.assertRaises(DepthInputError):
            compute_depth(SIMPLEX, np.zeros(3), RunConfig(algorithm='simplex'))

    @override_settings(DEPTH={'ORACLE_MAX_WORK': 10})
    def test_oracle_guard_and_force(self):
        with self.assertRaises(OracleBudgetError):
            compute_depth(SIMPLEX, np.zeros(3), RunConfig(algorithm='oracle'))
        result = compute_depth(SIMPLEX, np.zeros(3), RunConfig(algorithm='oracle', force=True))
        self.assertEqual(result.numerator, 1)

    def test_timed_depth(self):
        result, elapsed = timed_depth(SIMPLEX, np.zeros(3), RunConfig())
        self.assertEqual(result.numerator, 1)
        self.assertGreater(elapsed, 0)


class DepthRecordsTest(SimpleTestCase):
    def test_record_fields(self):
        records = depth_records(SIMPLEX, np.zeros((1, 3)), RunConfig())
        self.assertEqual(len(records), 1)
        self.assertEqual(list(records[0]), RECORD_FIELDS)
        record = records[0]
        self.assertEqual(record['numerator'], 1)
        self.assertEqual(record['n'], 4)
        self.assertEqual(record['depth'], 0.25)
        self.assertEqual(len(record['witness_combination']), 1)
        self.assertEqual(len(record['witness_direction']), 3)

    def test_query_order(self):
        queries = np.array([[0.0, 0.0, 0.0], [5.0, 5.0, 5.0]])
        records = depth_records(SIMPLEX, queries, RunConfig())
        self.assertEqual([r['query_index'] for r in records], [0, 1])
        self.assertEqual([r['numerator'] for r in records], [1, 0])

    def test_observation_as_query(self):
        """A query at an observation counts that observation"""
        rng = np.random.default_rng(21)
        data = rng.standard_normal((12, 3))
        records = depth_records(data, data, RunConfig())
        self.assertTrue(all(record['numerator'] >= 1 for record in records))

    def test_query_width_mismatch(self):
        with self.assertRaises(DepthInputError):
            depth_records(SIMPLEX, np.zeros((1, 2)), RunConfig())
