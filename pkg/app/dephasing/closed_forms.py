"""
Gamma/arctan closed forms for the exponential-cutoff family at T = 0.

With u = wc*t and theta = arctan(u):
    Lambda(t) = lam*wc*Gamma(a)*(1+u^2)^(-a/2)*cos(a*theta)
    gamma0(t) = lam*wc*Gamma(a)*(1+u^2)^(-a/2)*sin(a*theta)
    Xi(t)     = 2*lam*Gamma(a-1)*[1 - (1+u^2)^(-(a-1)/2)*cos((a-1)*theta)]
"""

import numpy as np
from scipy.special import gamma


def _polar(exponent, u):
    magnitude = np.exp(-0.5 * exponent * np.log1p(u * u))
    return magnitude, exponent * np.arctan(u)


def lambda_closed(model, t):
    u = model.cutoff_freq * np.asarray(t, dtype=float)
    magnitude, angle = _polar(model.alpha0, u)
    prefactor = model.amplitude * model.cutoff_freq * gamma(model.alpha0)
    return prefactor * magnitude * np.cos(angle)


def gamma0_closed(model, t):
    u = model.cutoff_freq * np.asarray(t, dtype=float)
    magnitude, angle = _polar(model.alpha0, u)
    prefactor = model.amplitude * model.cutoff_freq * gamma(model.alpha0)
    return prefactor * magnitude * np.sin(angle)


def kernel_derivative_closed(model, t):
    """d Lambda / dt = -integral of J(omega) sin(omega t)"""
    u = model.cutoff_freq * np.asarray(t, dtype=float)
    magnitude, angle = _polar(model.alpha0 + 1.0, u)
    prefactor = model.amplitude * model.cutoff_freq**2 * gamma(model.alpha0 + 1.0)
    return -prefactor * magnitude * np.sin(angle)


def xi_closed(model, t):
    u = model.cutoff_freq * np.asarray(t, dtype=float)
    log_term = np.log1p(u * u)
    shift = model.alpha0 - 1.0
    if shift == 0.0:
        return model.amplitude * log_term
    # 1 - exp(a) cos(b) written without cancellation
    a = -0.5 * shift * log_term
    b = shift * np.arctan(u)
    bracket = -np.expm1(a) + 2.0 * np.exp(a) * np.sin(0.5 * b) ** 2
    return 2.0 * model.amplitude * gamma(shift) * bracket
