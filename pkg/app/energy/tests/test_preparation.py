import math

from django.test import SimpleTestCase

from energy.preparation import QubitPreparation, d0
from utils.exceptions import DomainError


class PreparationAmplitudeTests(SimpleTestCase):
    """Test the preparation amplitude d0"""

    def test_unpolarized_state(self):
        """Test z = 0 gives 2 at any temperature"""
        for temperature in (0.1, 1.0, 50.0):
            self.assertAlmostEqual(d0(QubitPreparation(1.0, 0.0, temperature)), 2.0)

    def test_sigma3_eigenstates_vanish(self):
        """Test d0 = 0 for z = +1 and z = -1"""
        self.assertEqual(d0(QubitPreparation(1.0, 1.0, 1.0)), 0.0)
        self.assertEqual(d0(QubitPreparation(1.0, -1.0, 1.0)), 0.0)

    def test_reference_value(self):
        """Test z = 0.5, omega0/T_prep = 1"""
        self.assertAlmostEqual(d0(QubitPreparation(2.0, 0.5, 2.0)), 2.42247, places=5)

    def test_positive_inside_bloch_ball(self):
        """Test d0 > 0 for |z| < 1"""
        for z in (-0.99, -0.5, 0.0, 0.3, 0.99):
            for x in (0.01, 1.0, 30.0):
                with self.subTest(z=z, x=x):
                    self.assertGreater(d0(QubitPreparation(x, z, 1.0)), 0.0)

    def test_zero_temperature_limit(self):
        """Test T_prep -> 0 gives 2 (1 + z), with no overflow at large x"""
        self.assertEqual(d0(QubitPreparation(1.0, 0.25, 0.0)), 2.5)
        self.assertAlmostEqual(d0(QubitPreparation(1e3, 0.25, 1e-3)), 2.5, places=12)

    def test_matches_hyperbolic_form(self):
        """Test the tanh form against sinh/cosh at moderate x"""
        z, x = -0.4, 0.8
        ch, sh = math.cosh(x), math.sinh(x)
        expected = 2.0 * (1.0 + z * (sh - z * ch) / (ch - z * sh))
        self.assertAlmostEqual(d0(QubitPreparation(x, z, 1.0)), expected, places=12)

    def test_invalid_projection(self):
        """Test |z| > 1 is rejected"""
        with self.assertRaises(DomainError):
            QubitPreparation(1.0, 1.5, 1.0)
