"""
Spectral densities J(omega) of the pure-dephasing environment.

All families share the scaling J(omega) = omega_s * Omega(omega / omega_s).
The canonical families are

    exp_cutoff       J = lam * wc * x**a0 * exp(-x)
    finite_support   J = lam * wc * x**a0            (x <= 1, zero beyond)
    log_exp_cutoff   J = lam * wc * x**a0 * exp(-x) * ln(1 + 1/x)**q

with x = omega / wc. General class-1/class-2 models are realized as the
term series damped by exp(-omega/wc), or by a tabulated J(omega).
"""

import math
from dataclasses import dataclass, field, replace

import mpmath
import numpy as np
from django.conf import settings
from scipy.interpolate import PchipInterpolator

from quadrature.engine import default_upper
from utils.exceptions import DomainError
from utils.validations import validate_frequencies, validate_positive

from .choices import SpectralClass

CANONICAL_CLASSES = (
    SpectralClass.EXP_CUTOFF,
    SpectralClass.FINITE_SUPPORT,
    SpectralClass.LOG_EXP_CUTOFF,
)


@dataclass(frozen=True)
class LowFreqTerm:
    """One term coeff * nu**alpha * (-ln nu)**log_power of Omega near 0"""

    alpha: float
    log_power: float
    coeff: float


@dataclass(frozen=True)
class SpectralModel:
    class_tag: str
    terms: tuple
    scale_freq: float = 1.0
    cutoff_freq: float = 1.0
    high_freq_decay: float = math.inf
    amplitude: float = 1.0
    # expansion class of log_exp_cutoff models
    log_class: str = SpectralClass.CLASS1
    # ((omega, J), ...) for tabulated models
    table: tuple = field(default=(), repr=False)

    @classmethod
    def exp_cutoff(cls, alpha0, amplitude=1.0, cutoff=1.0, scale=None):
        return cls._cutoff_family(
            SpectralClass.EXP_CUTOFF, alpha0, 0.0, amplitude, cutoff, scale
        )

    @classmethod
    def log_exp_cutoff(
        cls, alpha0, log_power, amplitude=1.0, cutoff=1.0, scale=None,
        sd_class=SpectralClass.CLASS1,
    ):
        return cls._cutoff_family(
            SpectralClass.LOG_EXP_CUTOFF,
            alpha0,
            log_power,
            amplitude,
            cutoff,
            scale,
            log_class=sd_class,
        )

    @classmethod
    def finite_support(cls, alpha0, amplitude=1.0, cutoff=1.0, scale=None):
        scale = cutoff if scale is None else scale
        ratio = scale / cutoff
        term = LowFreqTerm(alpha0, 0.0, amplitude * ratio ** (alpha0 - 1.0))
        return cls(
            class_tag=SpectralClass.FINITE_SUPPORT,
            terms=(term,),
            scale_freq=scale,
            cutoff_freq=cutoff,
            amplitude=amplitude,
        )

    @classmethod
    def _cutoff_family(
        cls, tag, alpha0, log_power, amplitude, cutoff, scale, log_class=SpectralClass.CLASS1
    ):
        # Top log-power coefficients of exp(-r nu) * (r nu)**a0 expanded in nu
        scale = cutoff if scale is None else scale
        ratio = scale / cutoff
        lead = amplitude * ratio ** (alpha0 - 1.0)
        terms = tuple(
            LowFreqTerm(alpha0 + k, log_power, lead * (-ratio) ** k / math.factorial(k))
            for k in range(settings.SPECTRAL_EXPANSION_TERMS)
        )
        return cls(
            class_tag=tag,
            terms=terms,
            scale_freq=scale,
            cutoff_freq=cutoff,
            amplitude=amplitude,
            log_class=log_class,
        )

    @classmethod
    def general(
        cls, class_tag, terms, amplitude=1.0, cutoff=1.0, scale=None,
        high_freq_decay=math.inf, table=(),
    ):
        """Class-1/class-2 model from user terms (alpha, log_power, coeff)"""
        if class_tag not in (SpectralClass.CLASS1, SpectralClass.CLASS2):
            raise DomainError(f"general models are class1 or class2, not {class_tag!r}")
        scale = cutoff if scale is None else scale
        built = tuple(
            LowFreqTerm(float(alpha), float(log_power), amplitude * float(coeff))
            for alpha, log_power, coeff in terms
        )
        return cls(
            class_tag=class_tag,
            terms=built,
            scale_freq=scale,
            cutoff_freq=cutoff,
            high_freq_decay=high_freq_decay,
            amplitude=amplitude,
            table=tuple((float(w), float(j)) for w, j in table),
        )

    @property
    def alpha0(self):
        return self.terms[0].alpha

    @property
    def log_power0(self):
        return self.terms[0].log_power

    @property
    def leading_coeff(self):
        return self.terms[0].coeff

    @property
    def expansion_class(self):
        if self.class_tag == SpectralClass.CLASS2:
            return SpectralClass.CLASS2
        if self.class_tag == SpectralClass.LOG_EXP_CUTOFF:
            return self.log_class
        return SpectralClass.CLASS1

    @property
    def is_canonical(self):
        return self.class_tag in CANONICAL_CLASSES

    @property
    def conditions_assumed(self):
        """Uniform-convergence conditions cannot be checked for general models"""
        return not self.is_canonical

    @property
    def is_compact(self):
        return self.class_tag == SpectralClass.FINITE_SUPPORT or bool(self.table)

    def scaled(self, factor):
        """Same shape with the amplitude multiplied by factor"""
        terms = tuple(replace(term, coeff=term.coeff * factor) for term in self.terms)
        table = tuple((w, j * factor) for w, j in self.table)
        return replace(self, amplitude=self.amplitude * factor, terms=terms, table=table)


def low_frequency_terms(model):
    """Terms c nu**alpha (-ln nu)**q of Omega near 0, exponents increasing"""
    return model.terms


def log_factor(x):
    """ln(1 + 1/x) for x > 0 without overflow at small x"""
    return np.log1p(x) - np.log(x)


def _cutoff_shape(model, omega, power):
    """J(omega) * omega**power for the closed-form families, omega > 0"""
    x = omega / model.cutoff_freq
    exponent = model.alpha0 + power
    if model.class_tag == SpectralClass.FINITE_SUPPORT:
        inside = x <= 1.0
        values = np.where(inside, np.exp(exponent * np.log(np.where(inside, x, 1.0))), 0.0)
    else:
        values = np.exp(exponent * np.log(x) - x)
        if model.class_tag == SpectralClass.LOG_EXP_CUTOFF and model.log_power0 != 0:
            values = values * log_factor(x) ** model.log_power0
    prefactor = model.amplitude * model.cutoff_freq ** (1.0 + power)
    return prefactor * values


def _series_shape(model, omega, power):
    nu = omega / model.scale_freq
    total = np.zeros_like(nu)
    log_nu = np.log(nu)
    for term in model.terms:
        piece = term.coeff * np.exp((term.alpha + power) * log_nu)
        if term.log_power != 0:
            piece = piece * log_factor(nu) ** term.log_power
        total = total + piece
    damping = np.exp(-omega / model.cutoff_freq)
    return model.scale_freq ** (1.0 + power) * damping * total


def _table_interpolant(model):
    grid = np.asarray([0.0] + [w for w, _ in model.table if w > 0])
    values = np.asarray([0.0] + [j for w, j in model.table if w > 0])
    return PchipInterpolator(grid, values, extrapolate=False)


def _table_shape(model, omega, power):
    values = np.nan_to_num(_table_interpolant(model)(omega), nan=0.0)
    return values * omega**power


def weighted_density(model, omega, power=0.0):
    """J(omega) * omega**power for strictly positive frequencies"""
    omega = np.asarray(omega, dtype=float)
    if model.table:
        return _table_shape(model, omega, power)
    if model.is_canonical:
        return _cutoff_shape(model, omega, power)
    return _series_shape(model, omega, power)


def evaluate(model, omega):
    """J(omega); J(0) = 0 and negative frequencies are rejected"""
    values = validate_frequencies(omega)
    result = np.zeros_like(values)
    positive = values > 0
    if positive.any():
        result[positive] = weighted_density(model, values[positive])
    if np.ndim(omega) == 0:
        return float(result)
    return result


def thermal_ratio_limit(model, temperature):
    """
    J_T(0), the omega -> 0 limit of J(omega) coth(omega / 2T).

    The ohmic case (alpha0 = 1, no log factor) deliberately returns the
    finite limit 2T * c0 instead of 0, so J_T stays continuous at the
    origin. Every other density gives 0, including the divergent sub-ohmic
    and log-perturbed ohmic ones.
    """
    tol = settings.ODD_INTEGER_TOLERANCE
    if model.alpha0 > 1.0 + tol:
        return 0.0
    if abs(model.alpha0 - 1.0) <= tol and model.log_power0 == 0:
        return 2.0 * temperature * model.leading_coeff
    return 0.0


def coth(x):
    return 1.0 / np.tanh(x)


def thermal_weighted_density(model, omega, temperature, power=0.0):
    """J_T(omega) * omega**power for strictly positive frequencies"""
    omega = np.asarray(omega, dtype=float)
    return weighted_density(model, omega, power) * coth(omega / (2.0 * temperature))


def evaluate_thermal(model, omega, temperature):
    """J_T(omega) = J(omega) coth(omega / 2T)"""
    validate_positive(temperature, "temperature")
    values = validate_frequencies(omega)
    result = np.full_like(values, thermal_ratio_limit(model, temperature))
    positive = values > 0
    if positive.any():
        result[positive] = thermal_weighted_density(model, values[positive], temperature)
    if np.ndim(omega) == 0:
        return float(result)
    return result


def upper_frequency(model, tolerance):
    """Support edge, or where the exponential envelope drops below tolerance"""
    if model.table:
        return max(w for w, _ in model.table)
    if model.class_tag == SpectralClass.FINITE_SUPPORT:
        return model.cutoff_freq
    growth = max(term.alpha + max(0.0, -term.log_power) for term in model.terms)
    return default_upper(model.cutoff_freq, tolerance, growth)


def omega_mp(model, nu):
    """Omega(nu) at mpmath precision for the analytic families"""
    nu = mpmath.mpf(nu)
    if model.is_canonical:
        x = nu * model.scale_freq / model.cutoff_freq
        value = model.amplitude * (model.cutoff_freq / model.scale_freq) * x**model.alpha0
        if model.class_tag == SpectralClass.FINITE_SUPPORT:
            return value if x <= 1 else mpmath.mpf(0)
        value *= mpmath.exp(-x)
        if model.class_tag == SpectralClass.LOG_EXP_CUTOFF and model.log_power0 != 0:
            value *= mpmath.log(1 + 1 / x) ** model.log_power0
        return value
    total = mpmath.mpf(0)
    for term in model.terms:
        piece = term.coeff * nu**term.alpha
        if term.log_power != 0:
            piece *= mpmath.log(1 + 1 / nu) ** term.log_power
        total += piece
    return total * mpmath.exp(-nu * model.scale_freq / model.cutoff_freq)
