# File: TukeyDepthHub/apps/depth/tests/test_oracle.py

import itertools

import numpy as np
from django.test import SimpleTestCase, override_settings

from apps.depth.exceptions import DepthInputError, GeneralPositionError, OracleBudgetError
from apps.depth.geometry import PointCloud, Tolerance, center_at, count_closed
from apps.depth.oracle import (
    critical_direction,
    depth_critical,
    depth_random_upper,
    oracle_work,
    subspace_depth,
)
from apps.depth.rcom import depth_rcom

from .factories import degenerate_cloud, normal_cloud, simplex_cloud


class DepthCriticalTest(SimpleTestCase):
    def test_planar_triangle(self):
        cloud = PointCloud(np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, -1.0]]))
        self.assertEqual(depth_critical(cloud).numerator, 1)

    def test_regular_simplex(self):
        result = depth_critical(simplex_cloud())
        self.assertEqual(result.numerator, 1)
        self.assertEqual(result.stats['evaluations'], 6)
        self.assertEqual(len(result.witness_combination), 2)

    def test_query_outside_hull(self):
        data = np.random.default_rng(2).standard_normal((12, 3))
        cloud = center_at(data, np.full(3, 50.0))
        self.assertEqual(depth_critical(cloud).numerator, 0)

    def test_witness_direction_recount(self):
        cloud = normal_cloud(seed=17, n=15, p=3, alpha=0.4)
        result = depth_critical(cloud)
        self.assertEqual(
            count_closed(cloud.coords, result.witness_direction, Tolerance()), result.numerator
        )

    def test_critical_direction_is_normal(self):
        cloud = simplex_cloud()
        direction = critical_direction(cloud, (0, 1))
        np.testing.assert_allclose(cloud.coords[[0, 1]] @ direction.u, 0.0, atol=1e-12)
        self.assertAlmostEqual(float(np.linalg.norm(direction.u)), 1.0)

    def test_general_position_violation(self):
        with self.assertRaises(GeneralPositionError):
            depth_critical(degenerate_cloud())


class OracleBudgetTest(SimpleTestCase):
    def test_work(self):
        self.assertEqual(oracle_work(4, 3), 24)

    def test_guard_refuses(self):
        cloud = normal_cloud(seed=1, n=12, p=3)
        with self.assertRaises(OracleBudgetError) as ctx:
            depth_critical(cloud, max_work=100)
        self.assertEqual(ctx.exception.work, oracle_work(12, 3))
        self.assertEqual(ctx.exception.exit_code, 4)

    def test_force_overrides_guard(self):
        cloud = normal_cloud(seed=1, n=12, p=3)
        forced = depth_critical(cloud, force=True, max_work=100)
        self.assertEqual(forced.numerator, depth_rcom(cloud).numerator)

    @override_settings(DEPTH={'ORACLE_MAX_WORK': 10})
    def test_guard_reads_settings(self):
        with self.assertRaises(OracleBudgetError):
            depth_critical(simplex_cloud())


class SubspaceDepthTest(SimpleTestCase):
    def assertSubspaceMinimum(self, cloud, numerator):
        """Minimum over arity-r combinations of subspace depth minus r equals the depth"""
        for r in range(1, cloud.p):
            values = [
                subspace_depth(cloud, combo) - r
                for combo in itertools.combinations(range(cloud.n), r)
            ]
            self.assertEqual(min(values), numerator, f'arity {r}')

    def test_minimum_over_arities(self):
        for seed in range(20):
            p = 3 + seed % 2
            cloud = normal_cloud(seed, n=9 + seed % 7, p=p, alpha=0.4 * (seed % 4))
            with self.subTest(seed=seed, p=p, n=cloud.n):
                self.assertSubspaceMinimum(cloud, depth_critical(cloud).numerator)

    def test_members_counted(self):
        cloud = simplex_cloud()
        self.assertGreaterEqual(subspace_depth(cloud, (0, 1)), 2)

    def test_no_complement(self):
        with self.assertRaises(DepthInputError):
            subspace_depth(simplex_cloud(), (0, 1, 2))


class RandomUpperTest(SimpleTestCase):
    def test_upper_bound(self):
        for seed in range(5):
            cloud = normal_cloud(seed, n=20, p=3)
            exact = depth_rcom(cloud).numerator
            self.assertGreaterEqual(depth_random_upper(cloud, trials=200, seed=seed), exact)

    def test_converges_on_simplex(self):
        self.assertEqual(depth_random_upper(simplex_cloud(), trials=20000, seed=0), 1)

    def test_deterministic(self):
        cloud = normal_cloud(seed=5, n=30, p=4)
        self.assertEqual(
            depth_random_upper(cloud, trials=500, seed=9),
            depth_random_upper(cloud, trials=500, seed=9),
        )

    def test_invalid_trials(self):
        with self.assertRaises(DepthInputError):
            depth_random_upper(simplex_cloud(), trials=-3)

    def test_zero_trials_rejected(self):
        with self.assertRaises(DepthInputError):
            depth_random_upper(simplex_cloud(), trials=0)
