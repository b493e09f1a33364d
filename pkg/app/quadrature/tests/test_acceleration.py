import math

import numpy as np
from django.test import SimpleTestCase

from quadrature.acceleration import iterated_average, wynn_epsilon


def alternating_harmonic(count):
    terms = (-1.0) ** np.arange(count) / np.arange(1, count + 1)
    return np.cumsum(terms)


class AccelerationTests(SimpleTestCase):
    """Test series acceleration on the alternating harmonic series"""

    def test_iterated_average(self):
        """Test that repeated averaging reaches ln 2 from 30 partial sums"""
        sums = alternating_harmonic(30)
        self.assertGreater(abs(sums[-1] - math.log(2.0)), 1e-2)
        self.assertAlmostEqual(iterated_average(sums), math.log(2.0), places=7)

    def test_wynn_epsilon(self):
        """Test the epsilon table on 12 partial sums"""
        self.assertAlmostEqual(wynn_epsilon(alternating_harmonic(12)), math.log(2.0), places=7)

    def test_single_sum(self):
        """Test that a single partial sum is returned unchanged"""
        self.assertEqual(iterated_average([0.25]), 0.25)
        with self.assertRaises(ValueError):
            iterated_average([])
