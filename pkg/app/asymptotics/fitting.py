"""
Least-squares fits of sampled energies against asymptotic forms.
"""

import math
from dataclasses import dataclass

import numpy as np
from django.conf import settings
from scipy.optimize import curve_fit

from utils.exceptions import DomainError

from .choices import EnergyRegime

# log powers tried when the fit has to find q itself
LOG_POWER_CANDIDATES = (0, 1, 2)


@dataclass(frozen=True)
class PowerFit:
    power: float
    coeff: float
    log_power: float = 0.0
    sub_coeff: float = 0.0
    residual: float = 0.0


def fit_window():
    lo, hi = settings.FIT_WINDOW
    return float(lo), float(hi)


def _window(tau, values, window):
    tau = np.asarray(tau, dtype=float)
    values = np.asarray(values, dtype=float)
    if window is not None:
        keep = (tau >= window[0]) & (tau <= window[1])
        tau, values = tau[keep], values[keep]
    if tau.size < 3:
        raise DomainError("at least three samples are needed inside the fit window")
    return tau, values


def fit_power_law(tau, values, window=None):
    """values ~ coeff * tau^-power from a log-log line"""
    tau, values = _window(tau, values, window)
    if np.any(values == 0) or np.any(np.sign(values) != np.sign(values[-1])):
        raise DomainError("a power law needs samples of one sign")
    slope, intercept = np.polyfit(np.log(tau), np.log(np.abs(values)), 1)
    residual = np.polyval([slope, intercept], np.log(tau)) - np.log(np.abs(values))
    return PowerFit(
        power=-slope,
        coeff=float(np.sign(values[-1])) * math.exp(intercept),
        residual=float(np.sqrt(np.mean(residual**2))),
    )


def fit_power_log(tau, values, log_power=None, window=None):
    """
    values ~ tau^-power (a L^q + b L^(q-1)) with relative weights.

    Without a log_power every LOG_POWER_CANDIDATES entry is fitted and the
    smallest residual wins.
    """
    if log_power is None:
        return select_log_power(tau, values, window=window)
    tau, values = _window(tau, values, window)
    guess = fit_power_law(tau, values)
    q = float(log_power)
    log_tau = np.log(tau)

    def model(x, power, a, b):
        logs = np.log(x)
        return x ** (-power) * (a * logs**q + b * logs ** (q - 1.0))

    start = (guess.power, guess.coeff / np.mean(log_tau) ** q, 0.0)
    params, _ = curve_fit(
        model, tau, values, p0=start, sigma=np.abs(values), maxfev=20000
    )
    residual = (model(tau, *params) - values) / values
    return PowerFit(
        power=float(params[0]),
        coeff=float(params[1]),
        log_power=q,
        sub_coeff=float(params[2]),
        residual=float(np.sqrt(np.mean(residual**2))),
    )


def select_log_power(tau, values, candidates=LOG_POWER_CANDIDATES, window=None):
    fits = []
    for q in candidates:
        try:
            fits.append(fit_power_log(tau, values, q, window))
        except RuntimeError:
            # curve_fit gave up on this candidate
            continue
    if not fits:
        raise DomainError(f"no log power in {tuple(candidates)} could be fitted")
    return min(fits, key=lambda fit: fit.residual)


def fit_short_time(tau, increments):
    """increments ~ coeff * tau^exponent on short times; returns (exponent, coeff)"""
    fit = fit_power_law(tau, increments)
    return -fit.power, fit.coeff


def observed_trend(distance):
    """
    Regime read off sampled eps_E - eps_E(inf): increase when the samples stay
    below the asymptote and rise monotonically, decrease in the mirrored case.
    Returns None when the samples do neither.
    """
    distance = np.asarray(distance, dtype=float)
    steps = np.diff(distance)
    if np.all(distance < 0) and np.all(steps > 0):
        return EnergyRegime.INCREASE
    if np.all(distance > 0) and np.all(steps < 0):
        return EnergyRegime.DECREASE
    if np.all(distance == 0):
        return EnergyRegime.CONSTANT
    return None
