import threading
from collections import Counter


class QuadratureStats:
    """Process-wide counters reported by --quadrature-stats"""

    def __init__(self):
        self._lock = threading.Lock()
        self.reset()

    def reset(self):
        with self._lock:
            self.requests = 0
            self.evaluations = 0
            self.failures = 0
            self.strategies = Counter()

    def record(self, result):
        with self._lock:
            self.requests += 1
            self.evaluations += result.evaluations
            self.strategies[str(result.strategy_used)] += 1

    def record_failure(self, evaluations):
        with self._lock:
            self.requests += 1
            self.failures += 1
            self.evaluations += evaluations

    def snapshot(self):
        with self._lock:
            return {
                "requests": self.requests,
                "evaluations": self.evaluations,
                "failures": self.failures,
                "strategies": dict(sorted(self.strategies.items())),
            }


stats = QuadratureStats()
