"""
Mode densities r(omega) entering the absolute initial bath energy.
"""

from dataclasses import dataclass

import numpy as np

from utils.exceptions import DomainError
from utils.validations import validate_frequencies, validate_positive


@dataclass(frozen=True)
class ExponentialModeDensity:
    width: float = 1.0

    def __post_init__(self):
        validate_positive(self.width, "width")

    def __call__(self, omega):
        return np.exp(-np.asarray(omega, dtype=float) / self.width)

    @property
    def scale(self):
        return self.width


@dataclass(frozen=True)
class ModeList:
    """Discrete bath modes with unit weight each"""

    frequencies: tuple

    def __post_init__(self):
        if not self.frequencies:
            raise DomainError("a mode list needs at least one frequency")
        validate_frequencies(self.frequencies)

    def as_array(self):
        return np.asarray(self.frequencies, dtype=float)
