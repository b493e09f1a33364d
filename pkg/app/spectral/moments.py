import logging
import math
from dataclasses import dataclass

from django.conf import settings
from scipy.special import gamma

from quadrature.engine import integrate_moment

from .choices import SpectralClass
from .densities import upper_frequency, weighted_density

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentResult:
    value: float
    warnings: tuple = ()


def _tolerance(tolerance):
    return tolerance if tolerance is not None else settings.QUADRATURE_RTOL


def spectral_moment(model, power, tolerance=None):
    """Quadrature of J(omega) * omega**power over [0, inf)"""
    tolerance = _tolerance(tolerance)
    result = integrate_moment(
        lambda omega: weighted_density(model, omega, power),
        tolerance,
        endpoint_exponent=model.alpha0 + power,
        scale=model.cutoff_freq,
        upper=upper_frequency(model, tolerance),
        compact=model.is_compact,
        splits=tuple(w for w, _ in model.table),
    )
    return result.value


def moment_eta1(model, tolerance=None, method="auto"):
    """eta_1, the first negative moment of the spectral density"""
    if method == "auto":
        if model.class_tag == SpectralClass.EXP_CUTOFF:
            return model.amplitude * model.cutoff_freq * gamma(model.alpha0)
        if model.class_tag == SpectralClass.FINITE_SUPPORT:
            return model.amplitude * model.cutoff_freq / model.alpha0
    return spectral_moment(model, -1.0, tolerance)


def short_time_warnings(model):
    """Short-time law needs chi0 > 1 (class 1) or chi0 > 3 (class 2)"""
    threshold = 3.0 if model.expansion_class == SpectralClass.CLASS2 else 1.0
    if model.high_freq_decay > threshold:
        return ()
    message = (
        f"high-frequency decay chi0={model.high_freq_decay:g} does not exceed "
        f"{threshold:g}; the quadratic short-time law is not guaranteed"
    )
    logger.warning(message)
    return (message,)


def moment_omega1(model, tolerance=None, method="auto"):
    """Integral of omega * J(omega), flagged when the decay is too slow"""
    warnings = short_time_warnings(model)
    alpha0 = model.alpha0
    scale = model.amplitude * model.cutoff_freq**3
    if method == "auto" and model.class_tag == SpectralClass.EXP_CUTOFF:
        value = scale * gamma(alpha0 + 2.0)
    elif method == "auto" and model.class_tag == SpectralClass.FINITE_SUPPORT:
        value = scale / (alpha0 + 2.0)
    else:
        value = spectral_moment(model, 1.0, tolerance)
    if not math.isfinite(value):
        warnings += ("first positive moment is not finite",)
    return MomentResult(value=value, warnings=warnings)
