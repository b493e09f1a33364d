import numpy as np
from django.test import SimpleTestCase

from asymptotics.choices import EnergyRegime
from asymptotics.fitting import observed_trend
from asymptotics.regimes import (
    classify_energy_regime,
    energy_regime_report,
    in_upper_band,
    table_energy_regime,
)
from energy.preparation import QubitPreparation
from energy.services import bath_energy
from spectral.densities import SpectralModel

GRID = (0.3, 0.5, 0.9, 1.5, 2.0, 2.5, 3.2, 4.0, 4.8, 5.5, 6.0, 7.5, 8.2)
INCREASING = {0.3, 0.5, 0.9, 3.2, 4.0, 4.8, 7.5, 8.2}


class EnergyRegimeTests(SimpleTestCase):
    """Test the long-time energy regime classifier"""

    def setUp(self):
        self.prep = QubitPreparation(omega0=1.0, z=0.0, prep_temperature=1.0)

    def test_reference_cases(self):
        """Test alpha0 = 0.5, 2 and 3.5"""
        expected = {
            0.5: EnergyRegime.INCREASE,
            2.0: EnergyRegime.DECREASE,
            3.5: EnergyRegime.INCREASE,
        }
        for alpha, regime in expected.items():
            self.assertEqual(
                classify_energy_regime(self.prep, SpectralModel.exp_cutoff(alpha)), regime
            )

    def test_interval_table_grid(self):
        """Test coefficient signs reproduce the interval table for n0 = 0"""
        for alpha in GRID:
            with self.subTest(alpha=alpha):
                regime = classify_energy_regime(self.prep, SpectralModel.exp_cutoff(alpha))
                expected = (
                    EnergyRegime.INCREASE if alpha in INCREASING else EnergyRegime.DECREASE
                )
                self.assertEqual(regime, expected)
                reading = table_energy_regime(SpectralModel.exp_cutoff(alpha))
                self.assertEqual(reading.broad, expected)

    def test_constant_for_eigenstate(self):
        """Test d0 = 0 gives a constant bath energy"""
        prep = QubitPreparation(omega0=1.0, z=1.0, prep_temperature=1.0)
        self.assertEqual(
            classify_energy_regime(prep, SpectralModel.exp_cutoff(2.0)), EnergyRegime.CONSTANT
        )

    def test_refused(self):
        """Test odd alpha0 without further terms is refused"""
        self.assertEqual(
            classify_energy_regime(self.prep, SpectralModel.finite_support(3.0)),
            EnergyRegime.REFUSED,
        )
        report = energy_regime_report(self.prep, SpectralModel.finite_support(3.0))
        self.assertIsNone(report.expansion)
        self.assertEqual(report.table.broad, EnergyRegime.REFUSED)

    def test_observed_trend_agrees(self):
        """Test sampled eps_E over tau in [1e2, 1e4] follows the classifier"""
        times = np.geomspace(1e2, 1e4, 30)
        for alpha in (0.3, 0.5, 1.5, 2.0, 3.2, 4.0, 4.8, 5.5, 6.0, 7.5, 8.2):
            with self.subTest(alpha=alpha):
                model = SpectralModel.exp_cutoff(alpha)
                trajectory = bath_energy(self.prep, model, times)
                self.assertEqual(
                    observed_trend(trajectory.distance),
                    classify_energy_regime(self.prep, model),
                )


class IntervalTableTests(SimpleTestCase):
    """Test both readings of the interval table"""

    def test_upper_band(self):
        """Test (3 + 4n, 5 + 4n) membership and the closed right end"""
        self.assertTrue(in_upper_band(3.5))
        self.assertTrue(in_upper_band(7.01))
        self.assertFalse(in_upper_band(5.0))
        self.assertTrue(in_upper_band(5.0, closed_right=True))
        self.assertFalse(in_upper_band(3.0, closed_right=True))
        self.assertFalse(in_upper_band(6.0))

    def test_strict_reading_needs_log_power(self):
        """Test the strict reading drops (3, 5) when n0 = 0"""
        reading = table_energy_regime(SpectralModel.exp_cutoff(3.5))
        self.assertEqual(reading.broad, EnergyRegime.INCREASE)
        self.assertEqual(reading.strict, EnergyRegime.DECREASE)
        self.assertTrue(reading.ambiguous)

        with_log = table_energy_regime(SpectralModel.log_exp_cutoff(3.5, 1.0))
        self.assertFalse(with_log.ambiguous)

    def test_sub_ohmic_unambiguous(self):
        """Test (0, 1) increases under both readings"""
        self.assertFalse(table_energy_regime(SpectralModel.exp_cutoff(0.5)).ambiguous)

    def test_odd_with_log_power(self):
        """Test alpha0 = 1 + 4l increases and alpha0 = 3 + 4l decreases when n0 > 0"""
        self.assertEqual(
            table_energy_regime(SpectralModel.log_exp_cutoff(5.0, 1.0)).broad,
            EnergyRegime.INCREASE,
        )
        self.assertEqual(
            table_energy_regime(SpectralModel.log_exp_cutoff(3.0, 1.0)).broad,
            EnergyRegime.DECREASE,
        )

    def test_odd_without_log_uses_k0(self):
        """Test alpha0 = 3 with next term 4 lies in (3, 5]"""
        model = SpectralModel.general("class1", [(3.0, 0, 1.0), (4.0, 0, 1.0)])
        self.assertEqual(table_energy_regime(model).broad, EnergyRegime.INCREASE)

    def test_disagreement_is_reported(self):
        """Test a negative c_k0 flips the coefficient sign against the table"""
        prep = QubitPreparation(omega0=1.0, z=0.0, prep_temperature=1.0)
        report = energy_regime_report(prep, SpectralModel.exp_cutoff(1.0))

        self.assertEqual(report.regime, EnergyRegime.INCREASE)
        self.assertEqual(report.table.broad, EnergyRegime.DECREASE)
        self.assertFalse(report.table_agrees)
        self.assertTrue(report.notes)
