import logging
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from utils.exceptions import DomainError

from .densities import evaluate

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ModeDiscretization:
    """Finite set of bath modes; couplings |g_k|^2 = weight_k * J(omega_k)"""

    frequencies: np.ndarray
    weights: np.ndarray
    couplings: np.ndarray
    # lim J(omega)/omega, used for a mode sitting at omega = 0
    zero_ratio: float = 0.0

    def ratios(self):
        """|g_k|^2 / omega_k per mode"""
        ratios = np.empty_like(self.frequencies)
        zero = self.frequencies == 0
        ratios[~zero] = self.couplings[~zero] / self.frequencies[~zero]
        ratios[zero] = self.weights[zero] * self.zero_ratio
        return ratios

    def lambda_of_t(self, t):
        return float(np.dot(self.ratios(), np.cos(self.frequencies * t)))

    def eta1(self):
        return float(self.ratios().sum())


def zero_frequency_ratio(model):
    tol = settings.ODD_INTEGER_TOLERANCE
    if model.alpha0 > 1.0 + tol:
        return 0.0
    if abs(model.alpha0 - 1.0) <= tol and model.log_power0 == 0:
        return model.leading_coeff
    logger.warning(
        "J/omega diverges at 0 for alpha0=%g; the zero mode is dropped", model.alpha0
    )
    return 0.0


def discretize_modes(model, count, omega_max):
    """Trapezoid discretization of the spectral density on [0, omega_max]"""
    if int(count) != count or count < 2:
        raise DomainError(f"count must be an integer >= 2, got {count!r}")
    if not omega_max > 0:
        raise DomainError(f"omega_max must be positive, got {omega_max!r}")
    frequencies = np.linspace(0.0, omega_max, int(count))
    spacing = frequencies[1] - frequencies[0]
    weights = np.full(frequencies.size, spacing)
    weights[[0, -1]] = 0.5 * spacing
    couplings = weights * evaluate(model, frequencies)
    return ModeDiscretization(
        frequencies=frequencies,
        weights=weights,
        couplings=couplings,
        zero_ratio=zero_frequency_ratio(model),
    )
