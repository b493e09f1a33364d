from django.test import SimpleTestCase

from asymptotics.indices import contributes, is_odd_natural, odd_natural, select_indices
from spectral.densities import LowFreqTerm, SpectralModel
from utils.exceptions import ExpansionRefused


def _model(*alphas, log_power=0):
    return SpectralModel.general("class1", [(alpha, log_power, 1.0) for alpha in alphas])


class OddNaturalTests(SimpleTestCase):
    """Test the odd-natural detection"""

    def test_exact_and_tolerant_matches(self):
        """Test values within 1e-9 of an odd integer are odd"""
        self.assertEqual(odd_natural(1.0), 0)
        self.assertEqual(odd_natural(5.0), 2)
        self.assertEqual(odd_natural(3.0 + 1e-11), 1)

    def test_non_odd_values(self):
        """Test even, fractional and near-miss values"""
        for alpha in (0.5, 2.0, 4.0, 1.0 + 1e-6, -1.0):
            self.assertFalse(is_odd_natural(alpha))

    def test_contributes(self):
        """Test odd exponents need a logarithmic factor"""
        self.assertTrue(contributes(LowFreqTerm(2.0, 0.0, 1.0)))
        self.assertTrue(contributes(LowFreqTerm(3.0, 1.0, 1.0)))
        self.assertFalse(contributes(LowFreqTerm(3.0, 0.0, 1.0)))


class SelectIndicesTests(SimpleTestCase):
    """Test k0, k1 and k2"""

    def test_leading_term_contributes(self):
        """Test alpha = (2, 3, 4) keeps k1 on alpha0"""
        indices = select_indices(_model(2.0, 3.0, 4.0))
        self.assertEqual((indices.k0, indices.k1, indices.k2), (2, 0, 2))
        self.assertFalse(indices.shifted)

    def test_odd_leading_term_shifts_to_k0(self):
        """Test alpha = (1, 2) with n0 = 0 uses the second term"""
        indices = select_indices(_model(1.0, 2.0))
        self.assertEqual((indices.k0, indices.k1, indices.k2), (1, 1, None))
        self.assertTrue(indices.shifted)

    def test_odd_leading_term_with_log_contributes(self):
        """Test an odd alpha0 with n0 > 0 stays at index 0"""
        indices = select_indices(_model(3.0, 5.0, log_power=1))
        self.assertEqual(indices.k1, 0)

    def test_refusal(self):
        """Test alpha = (3,) with n0 = 0 has no admissible index"""
        with self.assertRaises(ExpansionRefused):
            select_indices(_model(3.0))

    def test_canonical_family(self):
        """Test the exponential cutoff at alpha0 = 3 shifts to alpha = 4"""
        model = SpectralModel.exp_cutoff(3.0)
        indices = select_indices(model)
        self.assertEqual(model.terms[indices.k1].alpha, 4.0)
