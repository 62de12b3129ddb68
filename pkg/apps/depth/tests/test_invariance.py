# File: TukeyDepthHub/apps/depth/tests/test_invariance.py
"""Depth does not depend on the coordinate system or on the row order."""

import numpy as np
from django.test import SimpleTestCase

from apps.depth.adia import depth_adia
from apps.depth.geometry import center_at
from apps.depth.oracle import depth_critical
from apps.depth.rcom import depth_rcom

EXACT = (
    ('rcom', depth_rcom),
    ('adia', depth_adia),
    ('oracle', depth_critical),
)


def random_affine(rng, p):
    """Nonsingular map with singular values in [0.5, 2] and a translation."""
    left = np.linalg.qr(rng.standard_normal((p, p)))[0]
    right = np.linalg.qr(rng.standard_normal((p, p)))[0]
    A = left @ np.diag(rng.uniform(0.5, 2.0, size=p)) @ right
    return A, 3.0 * rng.standard_normal(p)


class AffineInvarianceTest(SimpleTestCase):
    def test_fifty_maps(self):
        rng = np.random.default_rng(31)
        samples = {p: (rng.standard_normal((n, p)), np.full(p, 0.4)) for p, n in ((3, 14), (4, 11))}
        bases = {
            p: depth_critical(center_at(data, query)).numerator
            for p, (data, query) in samples.items()
        }
        for k in range(50):
            p = 3 + k % 2
            data, query = samples[p]
            A, b = random_affine(rng, p)
            moved = center_at(data @ A.T + b, A @ query + b)
            for name, algorithm in EXACT:
                with self.subTest(map=k, p=p, algorithm=name):
                    self.assertEqual(algorithm(moved).numerator, bases[p])

    def test_translation_of_query_and_data(self):
        rng = np.random.default_rng(32)
        data = rng.standard_normal((15, 3))
        query = np.array([0.8, -0.2, 0.1])
        base = depth_rcom(center_at(data, query)).numerator
        shift = np.array([1e3, -2e3, 5e2])
        self.assertEqual(depth_rcom(center_at(data + shift, query + shift)).numerator, base)


class PermutationInvarianceTest(SimpleTestCase):
    def test_row_order(self):
        rng = np.random.default_rng(41)
        for p, n in ((3, 16), (4, 12)):
            data = rng.standard_normal((n, p))
            query = np.full(p, 0.4)
            base = depth_critical(center_at(data, query)).numerator
            for trial in range(10):
                shuffled = center_at(data[rng.permutation(n)], query)
                for name, algorithm in EXACT:
                    with self.subTest(p=p, trial=trial, algorithm=name):
                        self.assertEqual(algorithm(shuffled).numerator, base)

    def test_witness_refers_to_permuted_rows(self):
        rng = np.random.default_rng(42)
        data = rng.standard_normal((14, 3))
        order = rng.permutation(14)
        result = depth_rcom(center_at(data[order], np.zeros(3)))
        members = [int(order[i]) for i in result.witness_combination]
        direction = result.witness_direction
        self.assertTrue(np.all(data[members] @ direction > 0))
