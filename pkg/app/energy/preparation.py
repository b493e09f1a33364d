import math
from dataclasses import dataclass

from utils.validations import validate_non_negative, validate_projection


@dataclass(frozen=True)
class QubitPreparation:
    """Selective measurement of the global thermal state onto |phi0>"""

    omega0: float
    # <phi0|sigma3|phi0>
    z: float
    # temperature of the equilibrium state before the measurement
    prep_temperature: float

    def __post_init__(self):
        validate_projection(self.z)
        validate_non_negative(self.omega0, "omega0")
        validate_non_negative(self.prep_temperature, "prep_temperature")


def d0(prep):
    """
    Amplitude of the bath-energy variation,
    2 * (1 + z * (tanh x - z) / (1 - z * tanh x)) with x = omega0 / T_prep.
    Zero for sigma3 eigenstates; 2 * (1 + z) in the T_prep -> 0 limit.
    """
    z = prep.z
    if abs(z) == 1.0:
        return 0.0
    if prep.prep_temperature == 0.0:
        return 2.0 * (1.0 + z)
    th = math.tanh(prep.omega0 / prep.prep_temperature)
    return 2.0 * (1.0 + z * (th - z) / (1.0 - z * th))
