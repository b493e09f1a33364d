"""
Mellin transform of the energy kernel K(tau) = Lambda(tau / omega_s) / omega_s.

For the exponential-cutoff family with r = omega_s / omega_c

    K^(s) = cos(pi s / 2) Gamma(s) Omega^(-s),  Omega^(-s) = lam r^(s-1) Gamma(a0 - s)

holomorphic in the strip 0 < Re s < min(1, a0).
"""

import logging
import math
from dataclasses import dataclass
from functools import partial
from typing import Callable, Optional

import numpy as np
from django.conf import settings
from scipy.special import gamma

from quadrature.engine import gauss_legendre
from spectral.choices import SpectralClass
from utils.exceptions import DomainError, MellinPoleError

from .indices import odd_natural

logger = logging.getLogger(__name__)

_POLE_TOLERANCE = 1e-12
_PANEL_WIDTH = 0.5
_MELLIN_RTOL = 1e-6
# e-folds of integrand decay kept at either end of the log-time axis
_DECAY_SPAN = 40.0
_MAX_LOG_TIME = 5000.0


@dataclass(frozen=True)
class MellinData:
    strip_lower: float
    strip_upper: float
    evaluation: Optional[Callable] = None

    def contains(self, s):
        return self.strip_lower < complex(s).real < self.strip_upper


@dataclass(frozen=True)
class DecayConditions:
    holds: bool
    assumed: bool
    detail: str = ""


@dataclass(frozen=True)
class MellinCheck:
    s: complex
    closed: complex
    numerical: complex

    @property
    def relative_error(self):
        return abs(self.numerical - self.closed) / abs(self.closed)

    @property
    def passed(self):
        return self.relative_error <= _MELLIN_RTOL


def _require_exp_cutoff(model):
    if model.class_tag != SpectralClass.EXP_CUTOFF:
        raise DomainError(
            f"closed-form Mellin data needs an exp_cutoff model, got {model.class_tag}"
        )


def mellin_data(model):
    evaluation = None
    if model.class_tag == SpectralClass.EXP_CUTOFF:
        evaluation = partial(mellin_K, model)
    return MellinData(0.0, min(1.0, model.alpha0), evaluation)


def pole_order(model, s):
    """Order of the pole of K^ at s, 0 where K^ is finite"""
    s = complex(s)
    if abs(s.imag) > _POLE_TOLERANCE:
        return 0
    x = s.real
    n = round(x)
    if abs(x - n) <= _POLE_TOLERANCE and n <= 0 and n % 2 == 0:
        return 1
    k = round(x - model.alpha0)
    if k >= 0 and abs(x - model.alpha0 - k) <= _POLE_TOLERANCE:
        return 0 if odd_natural(x) is not None else 1
    return 0


def mellin_K(model, s):
    _require_exp_cutoff(model)
    s = complex(s)
    order = pole_order(model, s)
    if order:
        raise MellinPoleError(f"K^ has a pole of order {order} at s={s}", s=s, order=order)

    alpha = model.alpha0
    r = model.scale_freq / model.cutoff_freq
    prefactor = model.amplitude * np.exp((s - 1.0) * math.log(r)) * gamma(s)
    k = round(s.real - alpha)
    if abs(s.imag) <= _POLE_TOLERANCE and k >= 0 and abs(s.real - alpha - k) <= _POLE_TOLERANCE:
        # removable: cos zero against the pole of Gamma(a0 - s)
        n = round(s.real)
        limit = 0.5 * math.pi * math.sin(0.5 * math.pi * n) * (-1) ** k / math.factorial(k)
        return complex(prefactor * limit)
    return complex(prefactor * np.cos(0.5 * math.pi * s) * gamma(alpha - s))


def _kernel_log_parts(model, x):
    """ln|K(e^x)| without the cosine factor, and that factor"""
    alpha = model.alpha0
    r = model.scale_freq / model.cutoff_freq
    y = x - math.log(r)
    log_magnitude = math.log(model.amplitude * gamma(alpha) / r) - 0.5 * alpha * np.logaddexp(
        0.0, 2.0 * y
    )
    small = np.exp(-np.abs(y))
    theta = np.where(y > 0, 0.5 * math.pi - np.arctan(small), np.arctan(small))
    return log_magnitude, np.cos(alpha * theta)


def numerical_mellin_K(model, s):
    """int_0^inf tau^(s-1) K(tau) dtau on the log-time axis tau = e^x"""
    _require_exp_cutoff(model)
    s = complex(s)
    data = mellin_data(model)
    if not data.contains(s):
        raise DomainError(f"s={s} lies outside the strip (0, {data.strip_upper:g})")

    decay = model.alpha0 + 1.0 if odd_natural(model.alpha0) is not None else model.alpha0
    lower = -min(_DECAY_SPAN / s.real, _MAX_LOG_TIME)
    upper = min(_DECAY_SPAN / (decay - s.real), _MAX_LOG_TIME)
    panels = int(math.ceil((upper - lower) / _PANEL_WIDTH))
    edges = np.linspace(lower, upper, panels + 1)

    nodes, weights = gauss_legendre(settings.QUADRATURE_GAUSS_NODES)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = mid[:, None] + half[:, None] * nodes
    log_magnitude, cosine = _kernel_log_parts(model, x)
    values = np.exp(s.real * x + log_magnitude) * cosine * np.exp(1j * s.imag * x)
    return complex(((values @ weights) * half).sum())


def random_strip_points(model, count=None, seed=None):
    count = count or settings.MELLIN_RANDOM_POINTS
    rng = np.random.default_rng(settings.MELLIN_SEED if seed is None else seed)
    upper = mellin_data(model).strip_upper
    real = rng.uniform(0.2 * upper, 0.8 * upper, count)
    imag = rng.uniform(-5.0, 5.0, count)
    return real + 1j * imag


def verify_mellin(model, points=None):
    """Closed form against the numerical transform at points in the strip"""
    if points is None:
        points = random_strip_points(model)
    checks = tuple(
        MellinCheck(complex(s), mellin_K(model, s), numerical_mellin_K(model, s))
        for s in points
    )
    failed = [check for check in checks if not check.passed]
    if failed:
        logger.warning(
            "Mellin cross-check failed at %d of %d points, worst relative error %.3g",
            len(failed),
            len(checks),
            max(check.relative_error for check in failed),
        )
    return checks


def decay_conditions(model):
    """Whether Omega^(1-s) decays fast enough along vertical lines"""
    if model.class_tag in (SpectralClass.EXP_CUTOFF, SpectralClass.LOG_EXP_CUTOFF):
        return DecayConditions(True, False, "exponential decay in |Im s| (Stirling)")
    if model.class_tag == SpectralClass.FINITE_SUPPORT:
        holds = model.alpha0 < 0.5
        return DecayConditions(
            holds,
            False,
            "transform decays like |Im s|^-1; needs alpha0 < 1/2",
        )
    return DecayConditions(True, True, "general model: decay conditions assumed")
