"""
Dephasing dynamics of the qubit for a given spectral density.

    Lambda(t) = int J(w)/w cos(wt) dw
    gamma0(t) = int J(w)/w sin(wt) dw           (T = 0)
    gammaT(t) = int J_T(w)/w sin(wt) dw         (T > 0)
    Xi(t)     = 2 int_0^t gamma = 2 int J_(T)(w)/w^2 (1 - cos wt) dw

The coherence factor is exp(-Xi). Exponential-cutoff models at T = 0 use the
closed forms of ``closed_forms`` unless the state asks for quadrature.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np
from django.conf import settings

from quadrature.choices import Kernel
from quadrature.engine import QuadratureRequest, integrate_weighted
from spectral.choices import SpectralClass
from spectral.densities import (
    SpectralModel,
    thermal_weighted_density,
    upper_frequency,
    weighted_density,
)
from spectral.moments import moment_eta1
from utils.exceptions import DomainError
from utils.grids import TimeGrid
from utils.validations import validate_non_negative

from . import closed_forms

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DephasingState:
    model: SpectralModel
    temperature: float = 0.0
    tolerance: Optional[float] = None
    closed_form: bool = True

    def __post_init__(self):
        validate_non_negative(self.temperature, "temperature")

    @property
    def rtol(self):
        return self.tolerance if self.tolerance is not None else settings.QUADRATURE_RTOL

    @property
    def is_thermal(self):
        return self.temperature > 0

    @property
    def uses_closed_form(self):
        return (
            self.closed_form
            and not self.is_thermal
            and self.model.class_tag == SpectralClass.EXP_CUTOFF
        )

    @cached_property
    def eta1(self):
        return moment_eta1(self.model, self.tolerance)

    @property
    def xi_bounded(self):
        """Xi(t) has a finite limit iff J_(T)/w^2 is integrable at 0"""
        threshold = 2.0 if self.is_thermal else 1.0
        return self.model.alpha0 > threshold

    @cached_property
    def warnings(self):
        if self.xi_bounded:
            return ()
        message = (
            f"Xi(t) grows without bound for alpha0={self.model.alpha0:g} at "
            f"T={self.temperature:g}; coherence decays to zero"
        )
        logger.info(message)
        return (message,)


def _check_time(t):
    if not math.isfinite(t) or t < 0:
        raise DomainError(f"t must be finite and non-negative, got {t!r}")
    return float(t)


def _elementwise(func, t):
    """Apply a scalar transform to a scalar or array of times"""
    if np.ndim(t) == 0:
        return func(_check_time(float(t)))
    times = np.asarray(t, dtype=float)
    return np.array([func(_check_time(value)) for value in times.ravel()]).reshape(
        times.shape
    )


def _transform(state, kernel, t, power, exponent, thermal=False):
    model = state.model
    if thermal:
        def integrand(omega):
            return thermal_weighted_density(model, omega, state.temperature, power)
    else:
        def integrand(omega):
            return weighted_density(model, omega, power)

    request = QuadratureRequest(
        integrand=integrand,
        kernel=kernel,
        t=t,
        endpoint_exponent=exponent,
        tolerance=state.tolerance,
        scale=model.cutoff_freq,
        upper=upper_frequency(model, state.rtol),
        compact=model.is_compact,
        splits=tuple(w for w, _ in model.table),
    )
    return integrate_weighted(request).value


def lambda_of_t(state, t):
    """Cosine transform of J/w; Lambda(0) = eta1"""
    if state.uses_closed_form:
        return _closed(closed_forms.lambda_closed, state, t)
    alpha = state.model.alpha0
    return _elementwise(
        lambda s: _transform(state, Kernel.COSINE, s, -1.0, alpha - 1.0), t
    )


def gamma0(state, t):
    if state.uses_closed_form:
        return _closed(closed_forms.gamma0_closed, state, t)
    alpha = state.model.alpha0
    return _elementwise(lambda s: _transform(state, Kernel.SINE, s, -1.0, alpha), t)


def gammaT(state, t):
    if not state.is_thermal:
        raise DomainError("gammaT needs T > 0; use gamma0 at zero temperature")
    alpha = state.model.alpha0
    return _elementwise(
        lambda s: _transform(state, Kernel.SINE, s, -1.0, alpha - 1.0, thermal=True), t
    )


def gamma(state, t):
    """Dephasing rate at the state's temperature"""
    if state.is_thermal:
        return gammaT(state, t)
    return gamma0(state, t)


def xi_of_t(state, t):
    if state.uses_closed_form:
        return _closed(closed_forms.xi_closed, state, t)
    thermal = state.is_thermal
    exponent = state.model.alpha0 - 1.0 if thermal else state.model.alpha0
    return _elementwise(
        lambda s: 2.0
        * _transform(state, Kernel.VERSINE, s, -2.0, exponent, thermal=thermal),
        t,
    )


def coherence(state, t):
    values = np.exp(-np.asarray(xi_of_t(state, t), dtype=float))
    return float(values) if np.ndim(t) == 0 else values


def kernel_derivative(state, t):
    """dLambda/dt = -int J(w) sin(wt) dw"""
    if state.uses_closed_form:
        return _closed(closed_forms.kernel_derivative_closed, state, t)
    alpha = state.model.alpha0
    return _elementwise(
        lambda s: -_transform(state, Kernel.SINE, s, 0.0, alpha + 1.0), t
    )


def _closed(formula, state, t):
    times = np.asarray(t, dtype=float)
    if np.any(~np.isfinite(times)) or np.any(times < 0):
        raise DomainError("times must be finite and non-negative")
    values = formula(state.model, times)
    return float(values) if np.ndim(t) == 0 else values


@dataclass(frozen=True, eq=False)
class TrajectorySample:
    times: np.ndarray
    lambda_values: np.ndarray
    gamma_values: np.ndarray
    xi_values: np.ndarray
    warnings: tuple = field(default=())

    @property
    def coherence_values(self):
        return np.exp(-self.xi_values)

    def rows(self):
        return zip(
            self.times,
            self.lambda_values,
            self.gamma_values,
            self.xi_values,
            self.coherence_values,
        )


def sample(state, grid):
    """Evaluate Lambda, gamma and Xi on a TimeGrid or an explicit array"""
    if isinstance(grid, TimeGrid):
        times = grid.values()
    else:
        times = np.asarray(grid, dtype=float)
    logger.debug(
        "sampling %d times for %s at T=%g", times.size, state.model.class_tag, state.temperature
    )
    return TrajectorySample(
        times=times,
        lambda_values=np.asarray(lambda_of_t(state, times), dtype=float),
        gamma_values=np.asarray(gamma(state, times), dtype=float),
        xi_values=np.asarray(xi_of_t(state, times), dtype=float),
        warnings=state.warnings,
    )
