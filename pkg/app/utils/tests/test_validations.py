import math

from django.test import SimpleTestCase

from utils.exceptions import DomainError, LabError
from utils.validations import (
    validate_frequencies,
    validate_non_negative,
    validate_positive,
    validate_projection,
)


class ValidationTests(SimpleTestCase):
    """Test the shared argument checks"""

    def test_accepted(self):
        """Test that valid values are returned unchanged"""
        self.assertEqual(validate_non_negative(0.0, "T"), 0.0)
        self.assertEqual(validate_positive(2.0, "T"), 2.0)
        self.assertEqual(validate_projection(-1.0), -1.0)
        self.assertEqual(validate_frequencies([0.0, 1.0]).tolist(), [0.0, 1.0])

    def test_rejected(self):
        """Test that rejected values raise a domain error naming the argument"""
        with self.assertRaisesMessage(DomainError, "T must be"):
            validate_positive(0.0, "T")
        with self.assertRaises(DomainError):
            validate_non_negative(math.inf, "T")
        with self.assertRaises(DomainError):
            validate_projection(1.5)
        with self.assertRaises(DomainError):
            validate_frequencies([1.0, math.nan])

    def test_hierarchy(self):
        """Test that domain errors are lab errors and value errors"""
        self.assertTrue(issubclass(DomainError, LabError))
        self.assertTrue(issubclass(DomainError, ValueError))
