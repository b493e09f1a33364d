from django.test import SimpleTestCase, override_settings

from asymptotics.choices import EnergyRegime
from energy.preparation import QubitPreparation
from infoflow.choices import Basis, FlowDirection, Verdict
from infoflow.services import CSV_HEADER, correspondence_report, verdict_for
from spectral.densities import SpectralModel
from utils.exceptions import ExpansionRefused


class VerdictTests(SimpleTestCase):
    """Test the pairing of flow direction and energy regime"""

    def test_pairings(self):
        """Test match, mismatch, sub-ohmic pairing and not applicable"""
        self.assertEqual(
            verdict_for(4.0, FlowDirection.BACKFLOW, EnergyRegime.INCREASE), Verdict.MATCH
        )
        self.assertEqual(
            verdict_for(2.0, FlowDirection.LOSS, EnergyRegime.DECREASE), Verdict.MATCH
        )
        self.assertEqual(
            verdict_for(2.0, FlowDirection.LOSS, EnergyRegime.INCREASE), Verdict.MISMATCH
        )
        self.assertEqual(
            verdict_for(0.5, FlowDirection.LOSS, EnergyRegime.INCREASE),
            Verdict.SUB_OHMIC_PAIRING,
        )
        self.assertEqual(
            verdict_for(4.0, FlowDirection.BACKFLOW, EnergyRegime.CONSTANT),
            Verdict.NOT_APPLICABLE,
        )


class CorrespondenceReportTests(SimpleTestCase):
    """Test the joined flow and energy report"""

    def setUp(self):
        self.prep = QubitPreparation(omega0=1.0, z=0.0, prep_temperature=2.0)

    @override_settings(SCAN_GRID_POINTS=100)
    def test_super_ohmic_accordance(self):
        """Test loss with decrease and backflow with increase at T = 1, T_prep = 2"""
        expected = {
            1.5: (FlowDirection.LOSS, EnergyRegime.DECREASE),
            2.0: (FlowDirection.LOSS, EnergyRegime.DECREASE),
            2.5: (FlowDirection.LOSS, EnergyRegime.DECREASE),
            3.5: (FlowDirection.BACKFLOW, EnergyRegime.INCREASE),
            4.0: (FlowDirection.BACKFLOW, EnergyRegime.INCREASE),
            4.5: (FlowDirection.BACKFLOW, EnergyRegime.INCREASE),
        }
        for alpha, (direction, regime) in expected.items():
            with self.subTest(alpha=alpha):
                report = correspondence_report(
                    self.prep, SpectralModel.exp_cutoff(alpha), 1.0, t_max=1e3
                )
                self.assertEqual(report.direction, direction)
                self.assertEqual(report.energy_regime, regime)
                self.assertEqual(report.verdict, Verdict.MATCH)
                self.assertEqual(report.basis, Basis.TABLE)

                late = [i for i in report.intervals if i.t_end >= 10.0]
                if direction == FlowDirection.BACKFLOW:
                    self.assertTrue(late)
                    self.assertGreater(report.measure.value, 0.0)
                else:
                    self.assertEqual(late, [])
                self.assertTrue(report.scan_agrees)

    @override_settings(SCAN_GRID_POINTS=100)
    def test_sub_ohmic_pairing(self):
        """Test alpha0 = 0.5 is reported as the sub-ohmic pairing"""
        report = correspondence_report(
            self.prep, SpectralModel.exp_cutoff(0.5), 1.0, t_max=1e2
        )
        self.assertEqual(report.direction, FlowDirection.LOSS)
        self.assertEqual(report.energy_regime, EnergyRegime.INCREASE)
        self.assertEqual(report.verdict, Verdict.SUB_OHMIC_PAIRING)
        self.assertEqual(report.measure.value, 0.0)

    def test_eigenstate_not_applicable(self):
        """Test d0 = 0 gives a constant energy and no verdict"""
        prep = QubitPreparation(omega0=1.0, z=1.0, prep_temperature=2.0)
        report = correspondence_report(prep, SpectralModel.exp_cutoff(2.0), 0.0)
        self.assertEqual(report.energy_regime, EnergyRegime.CONSTANT)
        self.assertEqual(report.verdict, Verdict.NOT_APPLICABLE)

    def test_zero_temperature_is_numerics_only(self):
        """Test T = 0 carries no table claim and N does not depend on z"""
        model = SpectralModel.exp_cutoff(3.0)
        first = correspondence_report(self.prep, model, 0.0)
        other = QubitPreparation(omega0=1.0, z=0.5, prep_temperature=0.3)
        second = correspondence_report(other, model, 0.0)

        self.assertEqual(first.basis, Basis.NUMERICS)
        self.assertIsNone(first.table)
        self.assertEqual(first.direction, FlowDirection.BACKFLOW)
        self.assertEqual(first.measure.value, second.measure.value)
        self.assertGreater(first.measure.value, 0.0)

    def test_csv_row(self):
        """Test the row lines up with the header"""
        report = correspondence_report(self.prep, SpectralModel.exp_cutoff(2.0), 0.0)
        row = report.csv_row()

        self.assertEqual(len(row), len(CSV_HEADER))
        self.assertEqual(row[:4], (2.0, 0.0, 0.0, 2.0))
        self.assertEqual(row[5:], (0, "loss", "long_time_decrease", "match"))

    def test_refused(self):
        """Test refusal propagates"""
        with self.assertRaises(ExpansionRefused):
            correspondence_report(self.prep, SpectralModel.finite_support(3.0), 1.0)
