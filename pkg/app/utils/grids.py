from dataclasses import dataclass, field

import numpy as np

from .choices import GridKind
from .exceptions import DomainError


@dataclass(frozen=True)
class TimeGrid:
    """Sampling times in units of 1/omega_s, shared by trajectory outputs"""

    kind: str = GridKind.LOG
    start: float = 1e-3
    stop: float = 1e3
    points: int = 200
    explicit: tuple = field(default_factory=tuple)

    def values(self):
        if self.kind == GridKind.EXPLICIT:
            times = np.asarray(self.explicit, dtype=float)
        elif self.kind == GridKind.UNIFORM:
            times = np.linspace(self.start, self.stop, self.points)
        elif self.kind == GridKind.LOG:
            if self.start <= 0:
                raise DomainError("log-spaced grids need start > 0")
            times = np.geomspace(self.start, self.stop, self.points)
        else:
            raise DomainError(f"unknown grid kind {self.kind!r}")

        if times.size == 0:
            raise DomainError("time grid is empty")
        if np.any(times < 0):
            raise DomainError("time grid must be non-negative")
        if np.any(np.diff(times) <= 0):
            raise DomainError("time grid must be strictly increasing")
        return times
