"""
Long-time behavior of the dephasing rate and the backflow decision table.

A term c * nu**alpha * (-ln nu)**q of Omega contributes to gamma(t) through
the sine transform of nu**(a-1):

    T = 0:  a = alpha,      prefactor omega_s * c
    T > 0:  a = alpha - 1,  prefactor 2T * c               (coth ~ 2T/w)
            a = alpha + 1,  prefactor omega_s**2 * c / 6T  (coth ~ w/6T)

each giving prefactor * tau**-a * (G(a) L**q - q G'(a) L**(q-1) + ...)
with G(a) = Gamma(a) sin(pi a / 2) and L = ln(tau).
"""

import logging
import math
from dataclasses import dataclass, replace

import numpy as np
from django.conf import settings
from scipy.special import digamma, gamma

from asymptotics.indices import odd_natural, select_indices
from asymptotics.regimes import in_upper_band
from spectral.densities import low_frequency_terms
from utils.exceptions import ExpansionRefused

from .choices import FlowDirection

logger = logging.getLogger(__name__)


def even_natural(a):
    """k with a = 2k, k >= 0, within tolerance, else None"""
    nearest = round(a)
    if nearest < 0 or nearest % 2 or abs(a - nearest) > settings.ODD_INTEGER_TOLERANCE:
        return None
    return nearest // 2


def sine_factor(a):
    """G(a) = Gamma(a) sin(pi a/2) and G'(a); G(0) = pi/2, G(2k) = 0 for k >= 1"""
    k = even_natural(a)
    if k == 0:
        return 0.5 * math.pi, -0.5 * math.pi * np.euler_gamma
    if k is not None:
        return 0.0, gamma(a) * 0.5 * math.pi * (-1) ** k
    g = gamma(a)
    s, c = math.sin(0.5 * math.pi * a), math.cos(0.5 * math.pi * a)
    return g * s, g * (digamma(a) * s + 0.5 * math.pi * c)


@dataclass(frozen=True)
class RateTerm:
    """coeff * tau**-power * ln(tau)**log_power"""

    coeff: float
    power: float
    log_power: float
    source_index: int

    @property
    def direction(self):
        return FlowDirection.BACKFLOW if self.coeff < 0 else FlowDirection.LOSS


def _candidates(state):
    model = state.model
    omega_s = model.scale_freq
    temperature = state.temperature
    for index, term in enumerate(low_frequency_terms(model)):
        if temperature > 0:
            yield index, term, term.alpha - 1.0, 2.0 * temperature * term.coeff
            yield index, term, term.alpha + 1.0, omega_s**2 * term.coeff / (6.0 * temperature)
        else:
            yield index, term, term.alpha, omega_s * term.coeff


def _contribution(index, term, a, prefactor):
    value, slope = sine_factor(a)
    q = term.log_power
    if value != 0.0:
        return RateTerm(prefactor * value, a, q, index)
    if q != 0:
        return RateTerm(-q * prefactor * slope, a, q - 1.0, index)
    return None


def rate_leading_term(state):
    """Dominant long-time term of gamma(t); ExpansionRefused when none survives"""
    merged = {}
    for index, term, a, prefactor in _candidates(state):
        contribution = _contribution(index, term, a, prefactor)
        if contribution is None or contribution.coeff == 0.0:
            continue
        key = (round(a / settings.ODD_INTEGER_TOLERANCE), contribution.log_power)
        if key in merged:
            previous = merged[key]
            contribution = RateTerm(
                previous.coeff + contribution.coeff, previous.power,
                previous.log_power, previous.source_index,
            )
        merged[key] = contribution

    survivors = [term for term in merged.values() if term.coeff != 0.0]
    if not survivors:
        raise ExpansionRefused(
            f"no term of gamma survives at alpha0={state.model.alpha0:g}, "
            f"T={state.temperature:g}"
        )
    # smallest power first, then the highest logarithm
    leading = min(survivors, key=lambda term: (term.power, -term.log_power))
    logger.debug(
        "rate leading term %.6g * tau^-%g * L^%g from term %d",
        leading.coeff,
        leading.power,
        leading.log_power,
        leading.source_index,
    )
    return leading


def _direction(backflow):
    return FlowDirection.BACKFLOW if backflow else FlowDirection.LOSS


@dataclass(frozen=True)
class FlowTable:
    """Backflow rule under the broad and the strict reading of n0"""

    broad: str
    strict: str

    @property
    def ambiguous(self):
        return self.broad != self.strict


def flow_table(model):
    alpha0, n0 = model.alpha0, model.log_power0
    m = odd_natural(alpha0)
    if m is None:
        broad = in_upper_band(alpha0)
        return FlowTable(_direction(broad), _direction(broad and n0 != 0))
    if n0 != 0:
        # alpha0 = 1 + 4l with l >= 1
        label = _direction(m >= 2 and m % 2 == 0)
        return FlowTable(label, label)
    indices = select_indices(model)
    alpha = low_frequency_terms(model)[indices.k0].alpha
    label = _direction(in_upper_band(alpha, closed_right=True))
    return FlowTable(label, label)


def classify_flow_direction(state, model=None):
    """Long-time flow direction from the sign of the leading rate coefficient"""
    if model is not None and model is not state.model:
        state = replace(state, model=model)
    return rate_leading_term(state).direction
