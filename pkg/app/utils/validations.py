import math

import numpy as np

from .exceptions import DomainError


def validate_non_negative(value, name):
    if not math.isfinite(value) or value < 0:
        raise DomainError(f"{name} must be a finite non-negative number, got {value!r}")
    return value


def validate_positive(value, name):
    if not math.isfinite(value) or value <= 0:
        raise DomainError(f"{name} must be a finite positive number, got {value!r}")
    return value


def validate_projection(z):
    """z = <phi0|sigma3|phi0> is an expectation value of sigma3"""
    if not math.isfinite(z) or abs(z) > 1:
        raise DomainError(f"z must lie in [-1, 1], got {z!r}")
    return z


def validate_frequencies(omega):
    """Accept a scalar or array of frequencies; reject negative entries"""
    values = np.asarray(omega, dtype=float)
    if np.any(np.isnan(values)) or np.any(values < 0):
        raise DomainError("spectral densities are defined for omega >= 0 only")
    return values
