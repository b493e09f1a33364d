"""
Exception hierarchy shared by every lab module
"""


class LabError(Exception):
    """Base class for all errors raised by the lab"""


class DomainError(LabError, ValueError):
    """An argument lies outside the domain of an operation"""


class ConfigurationError(LabError):
    """A scenario file could not be parsed or validated"""

    def __init__(self, message, errors=None):
        super().__init__(message)
        self.errors = errors or {}


class QuadratureError(LabError):
    """The quadrature engine failed to reach its tolerance within budget"""

    def __init__(self, message, value=float("nan"), error_estimate=float("inf"),
                 evaluations=0):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class MellinPoleError(LabError):
    """The Mellin transform was evaluated on one of its poles"""

    def __init__(self, message, s, order):
        super().__init__(message)
        self.s = s
        self.order = order


class ExpansionRefused(LabError):
    """No admissible index exists, so no expansion may be emitted"""
