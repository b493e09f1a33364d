from django.test import SimpleTestCase

from spectral.choices import SpectralClass
from spectral.densities import SpectralModel
from spectral.validators import derivative_order, validate


class ValidateTests(SimpleTestCase):
    """Test the admissibility checks of spectral models"""

    def test_canonical_model(self):
        """Test that the exponential-cutoff family passes every check"""
        report = validate(SpectralModel.exp_cutoff(2.0), grid_points=500)
        self.assertTrue(report.is_valid, report.failures())
        self.assertFalse(report.conditions_assumed)

    def test_negative_leading_coefficient(self):
        """Test that c0 < 0 fails and the remaining checks still run"""
        model = SpectralModel.general(SpectralClass.CLASS1, [(2.0, 0, -1.0)])
        report = validate(model, grid_points=500)

        self.assertFalse(report.get("leading_coefficient").passed)
        self.assertFalse(report.get("non_negativity").passed)
        self.assertTrue(report.get("ordering").passed)
        self.assertTrue(report.conditions_assumed)

    def test_unordered_exponents(self):
        """Test that a decreasing exponent sequence fails the ordering check"""
        model = SpectralModel.general(SpectralClass.CLASS1, [(3.0, 0, 1.0), (2.0, 0, 1.0)])
        self.assertFalse(validate(model, grid_points=500).get("ordering").passed)

    def test_class1_log_powers(self):
        """Test that class-1 models reject fractional log powers"""
        model = SpectralModel.general(SpectralClass.CLASS1, [(1.0, 0.5, 1.0)])
        self.assertFalse(validate(model, grid_points=500).get("log_powers").passed)

    def test_class2_derivatives(self):
        """Test the derivative check of a class-2 log-modulated model"""
        model = SpectralModel.log_exp_cutoff(1.0, 0.5, sd_class=SpectralClass.CLASS2)
        report = validate(model, grid_points=500)
        self.assertTrue(report.get("expansion_derivatives").passed)
        self.assertEqual(derivative_order(model), 1)
        general = SpectralModel.general(SpectralClass.CLASS2, [(0.5, 1, 1), (2.5, 0, 1)])
        self.assertEqual(derivative_order(general), 3)
