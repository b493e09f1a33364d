"""
Bath energy of a qubit-correlated environment.

    eps_E(t) = eps_E(0) + d0 * (eta1 - Lambda(t))
    eps_E(0) = sum_k w_k / (exp(w_k/T) - 1) + eta1        (discrete modes)
             = int w r(w) / (exp(w/T) - 1) dw + eta1       (mode density)

The correlation energy changes by the opposite amount. Without a mode list or
density only variations are known and trajectories are relative-only.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from django.conf import settings

from dephasing.services import DephasingState, lambda_of_t
from quadrature.engine import default_upper, integrate_moment
from spectral.modes import ModeDiscretization
from spectral.moments import MomentResult, moment_eta1, moment_omega1
from utils.exceptions import DomainError, QuadratureError

from .densities import ModeList
from .preparation import d0

logger = logging.getLogger(__name__)

RELATIVE_ONLY = "relative-only"


@dataclass(frozen=True, eq=False)
class EnergyTrajectory:
    times: np.ndarray
    bath_energy: np.ndarray
    # eps_SE(t) - eps_SE(0)
    correlation_delta: np.ndarray
    asymptote: float
    d0: float
    eta1: float
    # eps_E(0), or RELATIVE_ONLY when bath_energy holds eps_E(t) - eps_E(0)
    initial: object = RELATIVE_ONLY
    correlation_energy: Optional[np.ndarray] = None
    lambda_values: Optional[np.ndarray] = None

    @property
    def is_relative(self):
        return self.initial == RELATIVE_ONLY

    @property
    def bath_delta(self):
        return -self.correlation_delta

    @property
    def distance(self):
        """eps_E(t) - eps_E(inf) = -d0 * Lambda(t), free of cancellation"""
        if self.lambda_values is None:
            return np.zeros_like(self.times)
        return -self.d0 * self.lambda_values


def _bose_weighted(omega, temperature):
    """w / (exp(w/T) - 1) without overflow"""
    omega = np.asarray(omega, dtype=float)
    x = omega / temperature
    safe = np.where(x > 0, x, 1.0)
    values = temperature * safe * np.exp(-safe) / -np.expm1(-safe)
    return np.where(x > 0, values, temperature)


def bath_energy_initial(prep, model, modes=None, mode_density=None, tolerance=None):
    """Absolute eps_E(0) from a discrete mode list or a continuous density"""
    if (modes is None) == (mode_density is None):
        raise DomainError("give exactly one of modes or mode_density")
    eta1 = moment_eta1(model, tolerance)
    temperature = prep.prep_temperature
    if temperature == 0:
        return eta1

    if modes is not None:
        if isinstance(modes, ModeDiscretization):
            frequencies = modes.frequencies
        elif isinstance(modes, ModeList):
            frequencies = modes.as_array()
        else:
            frequencies = ModeList(tuple(modes)).as_array()
        thermal = math.fsum(_bose_weighted(frequencies, temperature))
        return thermal + eta1

    tolerance = tolerance or settings.QUADRATURE_RTOL
    scale = min(temperature, getattr(mode_density, "scale", temperature))
    try:
        result = integrate_moment(
            lambda omega: _bose_weighted(omega, temperature) * mode_density(omega),
            tolerance,
            scale=scale,
            upper=default_upper(temperature, tolerance, 1.0),
        )
    except QuadratureError as exc:
        logger.error(
            "thermal mode integral failed at T_prep=%g: value %g, error %g after %d evaluations",
            temperature,
            exc.value,
            exc.error_estimate,
            exc.evaluations,
        )
        raise
    return result.value + eta1


def asymptotic_energy(prep, model, initial=0.0, tolerance=None):
    """eps_E(inf) = eps_E(0) + d0 * eta1"""
    return initial + d0(prep) * moment_eta1(model, tolerance)


def bath_energy(
    prep, model, times, initial=None, epsilon_env=None, tolerance=None, closed_form=True
):
    """Bath-energy trajectory on the given times"""
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise DomainError("times must be a non-empty one-dimensional sequence")
    if np.any(times < 0) or np.any(np.diff(times) <= 0):
        raise DomainError("times must be non-negative and strictly increasing")
    if epsilon_env is not None and initial is None:
        raise DomainError("absolute correlation energy needs an absolute eps_E(0)")

    amplitude = d0(prep)
    state = DephasingState(model, tolerance=tolerance, closed_form=closed_form)
    eta1 = state.eta1
    if amplitude == 0.0:
        lambdas = None
        delta = np.zeros_like(times)
    else:
        lambdas = np.asarray(lambda_of_t(state, times), dtype=float)
        delta = amplitude * (eta1 - lambdas)

    base = 0.0 if initial is None else float(initial)
    bath = base + delta
    correlation_delta = -delta
    correlation_energy = None
    if epsilon_env is not None:
        correlation_energy = epsilon_env - bath

    logger.debug(
        "bath energy over %d times: d0=%g eta1=%g relative=%s",
        times.size,
        amplitude,
        eta1,
        initial is None,
    )
    return EnergyTrajectory(
        times=times,
        bath_energy=bath,
        correlation_delta=correlation_delta,
        asymptote=base + amplitude * eta1,
        d0=amplitude,
        eta1=eta1,
        initial=RELATIVE_ONLY if initial is None else base,
        correlation_energy=correlation_energy,
        lambda_values=lambdas,
    )


def short_time_coefficient(prep, model, tolerance=None):
    """l_E = d0 * int w J(w) dw / 2, the t^2 prefactor of eps_E(t) - eps_E(0)"""
    omega1 = moment_omega1(model, tolerance)
    return MomentResult(value=0.5 * d0(prep) * omega1.value, warnings=omega1.warnings)
