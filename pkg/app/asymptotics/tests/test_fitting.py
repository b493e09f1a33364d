import math

import numpy as np
from django.test import SimpleTestCase, override_settings

from asymptotics.choices import EnergyRegime
from asymptotics.expansions import long_time_expansion
from asymptotics.fitting import (
    LOG_POWER_CANDIDATES,
    fit_power_law,
    fit_power_log,
    fit_short_time,
    fit_window,
    observed_trend,
    select_log_power,
)
from energy.preparation import QubitPreparation
from energy.services import bath_energy
from spectral.densities import SpectralModel
from utils.exceptions import DomainError


class SyntheticFitTests(SimpleTestCase):
    """Test the fitters on exact power laws"""

    def setUp(self):
        self.tau = np.geomspace(1e2, 1e4, 25)

    def test_power_law(self):
        """Test an exact negative power law is recovered"""
        fit = fit_power_law(self.tau, -3.0 * self.tau**-0.75)
        self.assertAlmostEqual(fit.power, 0.75, places=10)
        self.assertAlmostEqual(fit.coeff, -3.0, places=8)
        self.assertLess(fit.residual, 1e-10)

    def test_power_log(self):
        """Test tau^-p (a L + b) is recovered with q fixed"""
        logs = np.log(self.tau)
        values = self.tau**-1.5 * (2.0 * logs + 0.5)
        fit = fit_power_log(self.tau, values, 1.0)

        self.assertAlmostEqual(fit.power, 1.5, places=4)
        self.assertAlmostEqual(fit.coeff, 2.0, delta=1e-3)
        self.assertAlmostEqual(fit.sub_coeff, 0.5, delta=1e-2)

    def test_log_power_selected(self):
        """Test that q is recovered from 0, 1, 2 when it is not given"""
        tau = np.geomspace(1e2, 1e10, 40)
        logs = np.log(tau)
        for q in LOG_POWER_CANDIDATES:
            values = -1.3 * tau**-0.5 * (logs**q + 0.4 * logs ** (q - 1.0))
            with self.subTest(q=q):
                fit = fit_power_log(tau, values)
                self.assertEqual(fit.log_power, q)
                self.assertAlmostEqual(fit.power, 0.5, places=4)
                self.assertAlmostEqual(fit.coeff, -1.3, delta=1e-3)

    def test_log_power_candidates_restricted(self):
        """Test the best fit among explicit candidates"""
        logs = np.log(self.tau)
        values = self.tau**-1.0 * (logs**2 + logs)
        self.assertEqual(select_log_power(self.tau, values, candidates=(0, 2)).log_power, 2.0)

    def test_window(self):
        """Test samples outside the window are ignored"""
        values = np.where(self.tau < 1e3, 1.0, self.tau**-2.0)
        fit = fit_power_law(self.tau, values, window=(1e3, 1e4))
        self.assertAlmostEqual(fit.power, 2.0, places=10)

    @override_settings(FIT_WINDOW=(10.0, 20.0))
    def test_window_setting(self):
        """Test the default window comes from settings"""
        self.assertEqual(fit_window(), (10.0, 20.0))

    def test_rejects_mixed_signs(self):
        """Test sign changes cannot be fitted by a power law"""
        values = np.cos(self.tau)
        with self.assertRaises(DomainError):
            fit_power_law(self.tau, values)

    def test_rejects_short_samples(self):
        """Test fewer than three samples are rejected"""
        with self.assertRaises(DomainError):
            fit_power_law(self.tau, self.tau**-1.0, window=(1e2, 1.1e2))

    def test_short_time(self):
        """Test short-time increments give a positive exponent"""
        tau = np.geomspace(1e-6, 1e-3, 20)
        exponent, coeff = fit_short_time(tau, 4.0 * tau**2)
        self.assertAlmostEqual(exponent, 2.0, places=10)
        self.assertAlmostEqual(coeff, 4.0, places=8)


class ObservedTrendTests(SimpleTestCase):
    """Test the monotone-trend reading of sampled distances"""

    def test_trends(self):
        """Test increase, decrease, constant and mixed samples"""
        self.assertEqual(observed_trend([-3.0, -2.0, -1.0]), EnergyRegime.INCREASE)
        self.assertEqual(observed_trend([3.0, 2.0, 1.0]), EnergyRegime.DECREASE)
        self.assertEqual(observed_trend([0.0, 0.0]), EnergyRegime.CONSTANT)
        self.assertIsNone(observed_trend([-1.0, 1.0, 0.5]))


class LongTimeLawTests(SimpleTestCase):
    """Test sampled bath energies against the long-time expansion"""

    def setUp(self):
        # d0 = 2
        self.prep = QubitPreparation(omega0=1.0, z=0.0, prep_temperature=1.0)

    def _distance(self, model, lo=1e2, hi=1e4, count=30):
        tau = np.geomspace(lo, hi, count)
        trajectory = bath_energy(self.prep, model, tau / model.scale_freq)
        return tau, trajectory.distance

    def test_sub_ohmic_power_law(self):
        """Test alpha0 = 0.5 decays as tau^-1/2 with coefficient u'0"""
        model = SpectralModel.exp_cutoff(0.5)
        tau, distance = self._distance(model)
        fit = fit_power_law(tau, distance)
        expected = -2.0 * math.cos(math.pi / 4) * math.gamma(0.5)

        self.assertAlmostEqual(fit.power, 0.5, delta=0.01)
        self.assertLess(abs(fit.coeff / expected - 1.0), 0.05)
        self.assertAlmostEqual(
            long_time_expansion(self.prep, model).leading.coeff, expected, places=12
        )

    def test_logarithmic_relaxation(self):
        """Test alpha0 = 0.5, n0 = 1 fits tau^-1/2 (u0 L + u'0)"""
        model = SpectralModel.log_exp_cutoff(0.5, 1.0)
        tau, distance = self._distance(model)
        fit = fit_power_log(tau, distance, 1.0)
        leading = long_time_expansion(self.prep, model).leading

        self.assertEqual((leading.power, leading.log_power), (0.5, 1.0))
        self.assertAlmostEqual(fit.power, 0.5, delta=0.02)
        self.assertLess(abs(fit.coeff / leading.coeff - 1.0), 0.05)

    def test_odd_case(self):
        """Test alpha0 = 1, n0 = 1 decays as -pi / tau"""
        model = SpectralModel.log_exp_cutoff(1.0, 1.0)
        tau, distance = self._distance(model, lo=1e3)
        fit = fit_power_law(tau, distance)

        self.assertAlmostEqual(fit.power, 1.0, delta=0.02)
        self.assertLess(abs(fit.coeff / -math.pi - 1.0), 0.05)
        self.assertLess(fit.coeff, 0.0)
        self.assertEqual(observed_trend(distance), EnergyRegime.INCREASE)
