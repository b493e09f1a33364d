"""
Semi-infinite quadrature against cos/sin/versine kernels.

Integrands are called with numpy arrays of frequencies (any shape) and must
return an array of the same shape. Near omega = 0 they may behave like
omega**beta * ln(1/omega)**k with beta > -1; beyond the truncation frequency
they must be negligible (exponential cutoff) or vanish (compact support).
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import mpmath
import numpy as np
from django.conf import settings

from utils.exceptions import DomainError, QuadratureError

from .acceleration import iterated_average
from .choices import Kernel, Strategy
from .stats import stats

logger = logging.getLogger(__name__)

# Smallest exponent shift used by the endpoint substitution
_LOWEST_U = -700.0
_ACCELERATION_DEPTH = 24
_PANEL_CHUNK = 32
_MAX_REFINEMENTS = 40


@dataclass(frozen=True)
class QuadratureRequest:
    integrand: Callable
    kernel: str = Kernel.NONE
    t: float = 0.0
    # exponent of integrand*kernel near omega = 0
    endpoint_exponent: float = 0.0
    tolerance: Optional[float] = None
    # characteristic frequency of the integrand (cutoff)
    scale: float = 1.0
    # truncation or support edge; derived from tolerance when omitted
    upper: Optional[float] = None
    # integrand is zero beyond upper, possibly with a jump at upper
    compact: bool = False
    splits: tuple = ()

    def __post_init__(self):
        if self.t < 0 or not math.isfinite(self.t):
            raise DomainError(f"t must be finite and non-negative, got {self.t!r}")
        if self.tolerance is not None and not self.tolerance > 0:
            raise DomainError("tolerance must be positive")
        if not self.endpoint_exponent > -1:
            raise DomainError(
                "endpoint_exponent must exceed -1 for an integrable endpoint"
            )
        if not self.scale > 0:
            raise DomainError("scale must be positive")
        if self.upper is not None and not self.upper > 0:
            raise DomainError("upper must be positive")

    @property
    def rtol(self):
        return self.tolerance if self.tolerance is not None else settings.QUADRATURE_RTOL

    @property
    def limit(self):
        if self.upper is not None:
            return float(self.upper)
        return default_upper(self.scale, self.rtol, self.endpoint_exponent)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int
    strategy_used: str


def default_upper(scale, tolerance, endpoint_exponent=0.0):
    """Frequency where an exponential-cutoff envelope drops below tolerance/100"""
    log_tol = math.log(100.0 / tolerance)
    alpha = max(endpoint_exponent + 1.0, 0.0)
    return scale * (log_tol + (alpha + 2.0) * math.log(log_tol + math.e))


@lru_cache(maxsize=16)
def gauss_legendre(nodes):
    return np.polynomial.legendre.leggauss(nodes)


def kernel_values(kernel, phase):
    if kernel == Kernel.COSINE:
        return np.cos(phase)
    if kernel == Kernel.SINE:
        return np.sin(phase)
    if kernel == Kernel.VERSINE:
        return 2.0 * np.sin(0.5 * phase) ** 2
    return np.ones_like(phase)


class _BudgetExhausted(Exception):
    pass


class _Sampler:
    """Counts integrand evaluations against the per-integral budget"""

    def __init__(self, request, budget):
        self.integrand = request.integrand
        self.t = request.t
        self.budget = budget
        self.evaluations = 0

    def bind(self, kernel):
        def weighted(omega):
            self.evaluations += omega.size
            if self.evaluations > self.budget:
                raise _BudgetExhausted
            values = np.asarray(self.integrand(omega), dtype=float)
            if kernel == Kernel.NONE:
                return values
            return values * kernel_values(kernel, omega * self.t)

        return weighted


def _panel_rule(func, lo, hi, nodes):
    """Gauss-Legendre on every panel; error from the half-order rule"""
    x, w = gauss_legendre(nodes)
    xc, wc = gauss_legendre(max(nodes // 2, 2))
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    fine = (func(mid[:, None] + half[:, None] * x) @ w) * half
    coarse = (func(mid[:, None] + half[:, None] * xc) @ wc) * half
    return fine, np.abs(fine - coarse)


def _adaptive_panels(func, edges, goal, nodes):
    """Bisect the worst panels until the summed estimate meets goal(value)"""
    lo = np.asarray(edges[:-1], dtype=float)
    hi = np.asarray(edges[1:], dtype=float)
    values, errors = _panel_rule(func, lo, hi, nodes)

    for _ in range(_MAX_REFINEMENTS):
        target = goal(values.sum())
        if errors.sum() <= target:
            break
        worst = errors > target / errors.size
        too_narrow = (hi - lo) <= 1e-15 * np.maximum(np.abs(hi), 1e-300)
        worst &= ~too_narrow
        if not worst.any():
            break
        mid = 0.5 * (lo[worst] + hi[worst])
        new_lo = np.concatenate([lo[worst], mid])
        new_hi = np.concatenate([mid, hi[worst]])
        new_values, new_errors = _panel_rule(func, new_lo, new_hi, nodes)
        keep = ~worst
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        values = np.concatenate([values[keep], new_values])
        errors = np.concatenate([errors[keep], new_errors])

    order = np.argsort(lo, kind="stable")
    return float(math.fsum(values[order])), float(errors.sum())


def _endpoint_piece(func, a, exponent, goal, nodes, rtol):
    """Integral over [0, a] after the substitution omega = a*exp(u)

    When the substitution has to stop at _LOWEST_U the integral below
    omega_min = a*exp(_LOWEST_U) is added in closed form, treating the
    integrand there as a pure power omega**exponent.
    """
    decay = exponent + 1.0
    log_tol = math.log(100.0 / rtol)
    span = (log_tol + 3.0 * math.log1p(log_tol)) / decay
    u_min = max(-span, _LOWEST_U)

    def transformed(u):
        omega = a * np.exp(u)
        return func(omega) * omega

    edges = np.linspace(u_min, 0.0, int(math.ceil(-u_min)) + 1)
    value, error = _adaptive_panels(transformed, edges, goal, nodes)
    if u_min > -span:
        remainder = float(transformed(np.array([u_min]))[0]) / decay
        # the power-law form is exact up to O(omega_min / a)
        value += remainder
        error += abs(remainder) * math.exp(u_min)
    return value, error


def _uniform_edges(lo, hi, width, splits=()):
    count = max(int(math.ceil((hi - lo) / width)), 1)
    edges = np.linspace(lo, hi, count + 1)
    extra = [s for s in splits if lo < s < hi]
    if extra:
        edges = np.unique(np.concatenate([edges, extra]))
    return edges


def _moment_edges(lo, hi, scale, splits=()):
    """Geometric panels up to the scale frequency, uniform beyond"""
    edges = [lo]
    while edges[-1] * 2.0 < min(scale, hi):
        edges.append(edges[-1] * 2.0)
    head = np.asarray(edges)
    start = head[-1]
    if start >= hi:
        return np.asarray([lo, hi])
    tail = _uniform_edges(start, hi, 0.5 * scale, splits)
    return np.concatenate([head[:-1], tail])


class QuadratureEngine:
    """Strategy selection and bookkeeping around the panel rules"""

    def __init__(self, request):
        self.request = request
        self.rtol = request.rtol
        self.floor = settings.QUADRATURE_ABS_FLOOR * request.scale
        self.nodes = settings.QUADRATURE_GAUSS_NODES
        self.sampler = _Sampler(request, settings.QUADRATURE_MAX_EVALUATIONS)
        self.partial = (float("nan"), float("inf"))

    def goal(self, value):
        return max(self.rtol * abs(value), self.floor)

    def integrate(self):
        request = self.request
        if request.t == 0 and request.kernel in (Kernel.SINE, Kernel.VERSINE):
            return QuadratureResult(0.0, 0.0, 0, Strategy.EXACT)
        if request.t == 0 or request.kernel == Kernel.NONE:
            value, error = self._moment(Kernel.NONE, 0.0, request.endpoint_exponent)
            return self._result(value, error, Strategy.PANELS)

        upper = request.limit
        periods = upper * request.t / (2.0 * math.pi)
        if periods < settings.QUADRATURE_MIN_PERIODS:
            value, error = self._few_periods(upper)
            return self._result(value, error, Strategy.PANELS)
        return self._many_periods(upper)

    def _result(self, value, error, strategy):
        return QuadratureResult(value, error, self.sampler.evaluations, strategy)

    def _moment(self, kernel, lower, exponent):
        """Plain integral of integrand*kernel from lower (0 allowed) to upper"""
        request = self.request
        upper = request.limit
        func = self.sampler.bind(kernel)
        if lower == 0.0:
            a = min(request.scale, upper)
            head, head_err = _endpoint_piece(
                func, a, exponent, self.goal, self.nodes, self.rtol
            )
        else:
            a, head, head_err = lower, 0.0, 0.0
        if a >= upper:
            return head, head_err
        edges = _moment_edges(a, upper, request.scale, request.splits)
        tail, tail_err = _adaptive_panels(func, edges, self.goal, self.nodes)
        return head + tail, head_err + tail_err

    def _few_periods(self, upper):
        request = self.request
        func = self.sampler.bind(request.kernel)
        half_period = math.pi / request.t
        a = min(request.scale, upper, half_period)
        head, head_err = _endpoint_piece(
            func, a, request.endpoint_exponent, self.goal, self.nodes, self.rtol
        )
        if a >= upper:
            return head, head_err
        width = min(half_period, 0.5 * request.scale)
        edges = _uniform_edges(a, upper, width, request.splits)
        tail, tail_err = _adaptive_panels(func, edges, self.goal, self.nodes)
        return head + tail, head_err + tail_err

    def _many_periods(self, upper):
        request = self.request
        t = request.t
        if request.kernel == Kernel.VERSINE:
            # 1 - cos: exact near zero, then moment minus cosine transform
            a = 0.5 * math.pi / t
            head, head_err = _endpoint_piece(
                self.sampler.bind(Kernel.VERSINE),
                a,
                request.endpoint_exponent,
                self.goal,
                self.nodes,
                self.rtol,
            )
            moment, moment_err = self._moment(Kernel.NONE, a, 0.0)
            cosine, cosine_err, strategy = self._partition(Kernel.COSINE, a, upper, 0.0)
            value = head + moment - cosine
            return self._result(value, head_err + moment_err + cosine_err, strategy)

        a = math.pi / t if request.kernel == Kernel.SINE else 0.5 * math.pi / t
        head, head_err = _endpoint_piece(
            self.sampler.bind(request.kernel),
            a,
            request.endpoint_exponent,
            self.goal,
            self.nodes,
            self.rtol,
        )
        self.partial = (head, head_err)
        tail, tail_err, strategy = self._partition(request.kernel, a, upper, head)
        return self._result(head + tail, head_err + tail_err, strategy)

    def _partition(self, kernel, a, upper, offset):
        """Half-period panels between consecutive kernel zeros starting at a"""
        request = self.request
        func = self.sampler.bind(kernel)
        h = math.pi / request.t
        total_panels = int(math.ceil((upper - a) / h))

        if request.compact or total_panels <= settings.QUADRATURE_DIRECT_PANELS:
            edges = a + h * np.arange(total_panels + 1)
            edges[-1] = upper
            value, error = _adaptive_panels(func, edges, self.goal, self.nodes)
            return value, error, Strategy.ZERO_PARTITION

        values = np.empty(0)
        errors = np.empty(0)
        estimate = float("nan")
        while values.size < total_panels:
            k = np.arange(values.size, values.size + _PANEL_CHUNK)
            lo = a + k * h
            chunk_values, chunk_errors = _panel_rule(func, lo, lo + h, self.nodes)
            values = np.concatenate([values, chunk_values])
            errors = np.concatenate([errors, chunk_errors])

            partial_sums = offset + np.cumsum(values)
            depth = min(_ACCELERATION_DEPTH, partial_sums.size - 2)
            estimate = iterated_average(partial_sums[-(depth + 1):])
            previous = iterated_average(partial_sums[-(depth + 2):-1])
            error = abs(estimate - previous) + float(errors.sum())
            self.partial = (estimate, error)
            if error <= self.goal(estimate):
                return estimate - offset, error, Strategy.ACCELERATED

        logger.warning(
            "acceleration did not settle at t=%g after %d panels", request.t, values.size
        )
        raise QuadratureError(
            f"series acceleration did not converge at t={request.t}",
            value=estimate,
            error_estimate=self.partial[1],
            evaluations=self.sampler.evaluations,
        )


def integrate_weighted(request):
    """Integral of integrand(omega)*kernel(omega t) over [0, inf)"""
    engine = QuadratureEngine(request)
    try:
        result = engine.integrate()
    except _BudgetExhausted:
        stats.record_failure(engine.sampler.evaluations)
        value, estimate = engine.partial
        raise QuadratureError(
            f"evaluation budget of {settings.QUADRATURE_MAX_EVALUATIONS} exhausted "
            f"(kernel={request.kernel}, t={request.t})",
            value=value,
            error_estimate=estimate,
            evaluations=engine.sampler.evaluations,
        )
    except QuadratureError as exc:
        stats.record_failure(exc.evaluations)
        raise

    if not math.isfinite(result.value):
        stats.record_failure(result.evaluations)
        raise QuadratureError(
            "integrand produced a non-finite integral",
            value=result.value,
            evaluations=result.evaluations,
        )
    stats.record(result)
    return result


def integrate_moment(
    integrand,
    tolerance=None,
    *,
    endpoint_exponent=0.0,
    scale=1.0,
    upper=None,
    compact=False,
    splits=(),
    strategy=Strategy.PANELS,
):
    """Plain semi-infinite integral; tanh_sinh gives an independent estimate"""
    request = QuadratureRequest(
        integrand=integrand,
        kernel=Kernel.NONE,
        endpoint_exponent=endpoint_exponent,
        tolerance=tolerance,
        scale=scale,
        upper=upper,
        compact=compact,
        splits=tuple(splits),
    )
    if strategy == Strategy.TANH_SINH:
        return _tanh_sinh(request)
    return integrate_weighted(request)


def _tanh_sinh(request):
    evaluations = 0

    def scalar(x):
        nonlocal evaluations
        evaluations += 1
        return float(np.asarray(request.integrand(np.array([float(x)])))[0])

    upper = request.limit
    points = [0, min(request.scale, upper), upper]
    points += sorted(s for s in request.splits if 0 < s < upper)
    points = sorted(set(points))
    with mpmath.workdps(30):
        value, error = mpmath.quad(scalar, points, method="tanh-sinh", error=True)
    result = QuadratureResult(float(value), float(error), evaluations, Strategy.TANH_SINH)
    stats.record(result)
    return result
