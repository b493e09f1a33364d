"""
Leading short- and long-time behavior of the bath energy.

Long-time terms describe eps_E(t) - eps_E(inf) as
coeff * tau**(-power) * ln(tau)**log_power with tau = omega_s * t. They come
from the term alpha_k1 of the low-frequency expansion of the spectral
density.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.special import digamma, gamma

from energy.preparation import d0
from energy.services import short_time_coefficient
from spectral.choices import SpectralClass
from spectral.densities import low_frequency_terms

from .choices import CaseTag, Regime
from .indices import IndexSelection, odd_natural, select_indices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AsymptoticTerm:
    coeff: float
    power: float
    log_power: float = 0.0

    def __call__(self, tau):
        tau = np.asarray(tau, dtype=float)
        values = self.coeff * tau ** (-self.power)
        if self.log_power:
            values = values * np.log(tau) ** self.log_power
        return values


@dataclass(frozen=True)
class ExpansionSpec:
    regime: str
    terms: tuple
    case: str
    indices: Optional[IndexSelection] = None
    warnings: tuple = field(default=())

    @property
    def leading(self):
        return self.terms[0]

    @property
    def source_case(self):
        if self.indices is not None and self.indices.shifted:
            return f"{self.case}_shifted"
        return str(self.case)

    def evaluate(self, tau):
        return sum(term(tau) for term in self.terms)

    def rows(self):
        k0 = k1 = k2 = None
        if self.indices is not None:
            k0, k1, k2 = self.indices.k0, self.indices.k1, self.indices.k2
        for term in self.terms:
            yield (self.source_case, term.power, term.log_power, term.coeff, k0, k1, k2)


def cosine_factor(alpha):
    """Gamma(a) cos(pi a/2) and its a-derivative; exact at odd naturals"""
    m = odd_natural(alpha)
    if m is not None:
        return 0.0, -0.5 * math.pi * math.factorial(2 * m) * (-1) ** m
    g = gamma(alpha)
    c, s = math.cos(0.5 * math.pi * alpha), math.sin(0.5 * math.pi * alpha)
    return g * c, g * (digamma(alpha) * c - 0.5 * math.pi * s)


def leading_pair(term, amplitude):
    """
    Coefficients of tau^-a L^q and tau^-a L^(q-1) in eps_E - eps_E(inf)
    contributed by coeff * nu^a * (-ln nu)^q, with amplitude = omega_s * d0
    """
    value, slope = cosine_factor(term.alpha)
    scale = amplitude * term.coeff
    return -scale * value, scale * term.log_power * slope


def long_time_expansion(prep, model):
    indices = select_indices(model)
    term = low_frequency_terms(model)[indices.k1]
    amplitude = model.scale_freq * d0(prep)
    first, second = leading_pair(term, amplitude)
    q = term.log_power
    odd = odd_natural(term.alpha) is not None

    if model.expansion_class == SpectralClass.CLASS2:
        if odd:
            terms = (AsymptoticTerm(second, term.alpha, q - 1.0),)
            case = CaseTag.REAL_LOG_ODD
        else:
            terms = (AsymptoticTerm(first, term.alpha, q),)
            if q != 0:
                terms += (AsymptoticTerm(second, term.alpha, q - 1.0),)
            case = CaseTag.REAL_LOG
    elif odd:
        terms = (AsymptoticTerm(second, term.alpha, q - 1.0),)
        case = CaseTag.ODD_LOG if q > 1 else CaseTag.ODD_POWER
    else:
        terms = (AsymptoticTerm(first, term.alpha, q),)
        case = CaseTag.POWER_LOG if q > 0 else CaseTag.POWER

    logger.debug(
        "long-time case %s from term %d (alpha=%g, q=%g)", case, indices.k1, term.alpha, q
    )
    return ExpansionSpec(
        regime=Regime.LONG_TIME, terms=terms, case=case, indices=indices
    )


def short_time_expansion(prep, model, tolerance=None):
    """eps_E(t) - eps_E(0) ~ l_E t^2, written in tau = omega_s t"""
    coefficient = short_time_coefficient(prep, model, tolerance)
    term = AsymptoticTerm(coefficient.value / model.scale_freq**2, -2.0, 0.0)
    return ExpansionSpec(
        regime=Regime.SHORT_TIME,
        terms=(term,),
        case=CaseTag.QUADRATIC,
        warnings=coefficient.warnings,
    )
