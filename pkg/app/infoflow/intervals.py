"""
Negative-rate intervals and the non-Markovianity measure

    N = int_{gamma(t) < 0} |gamma(t)| exp(-Xi(t)) dt
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from django.conf import settings
from scipy.integrate import quad
from scipy.optimize import bisect, minimize_scalar

from dephasing.services import gamma, xi_of_t
from utils.exceptions import ExpansionRefused
from utils.validations import validate_positive

from .rates import rate_leading_term

logger = logging.getLogger(__name__)

# scan starts this many decades below t_max, and never after 1e-3 / omega_s
_SCAN_DECADES = 6.0


@dataclass(frozen=True)
class NegativeRateInterval:
    t_start: float
    t_end: float
    min_rate: float
    # gamma is still negative at t_max
    open_ended: bool = False

    @property
    def length(self):
        return self.t_end - self.t_start


@dataclass(frozen=True)
class MeasureResult:
    value: float
    intervals: tuple = ()
    contributions: tuple = ()
    tail_estimate: float = 0.0
    lower_bound: bool = False
    warnings: tuple = field(default=())


def default_t_max(model):
    return settings.INFO_FLOW_T_MAX / model.scale_freq


def _rate(state):
    return lambda t: float(gamma(state, t))


def _scan_grid(state, t_max):
    omega_s = state.model.scale_freq
    start = min(1e-3 / omega_s, t_max * 10.0**-_SCAN_DECADES)
    return np.geomspace(start, t_max, settings.SCAN_GRID_POINTS)


def _refine_minima(rate, times, values):
    """Probe local minima of positive samples for dips the grid stepped over"""
    times, values = list(times), list(values)
    inserted = []
    for i in range(1, len(times) - 1):
        if not (0 < values[i] < values[i - 1] and values[i] < values[i + 1]):
            continue
        result = minimize_scalar(
            rate, bounds=(times[i - 1], times[i + 1]), method="bounded"
        )
        if result.success and result.fun < 0:
            inserted.append((float(result.x), float(result.fun)))
    if not inserted:
        return np.asarray(times), np.asarray(values)
    logger.debug("scan refinement found %d dips between grid points", len(inserted))
    merged = sorted(zip(times + [t for t, _ in inserted], values + [v for _, v in inserted]))
    return np.array([t for t, _ in merged]), np.array([v for _, v in merged])


def _crossing(rate, lo, hi, xtol):
    """Zero of gamma in [lo, hi] where the sign changes"""
    f_lo = rate(lo)
    if f_lo == 0.0:
        return lo
    f_hi = rate(hi)
    if f_hi == 0.0:
        return hi
    return bisect(rate, lo, hi, xtol=xtol)


def find_negative_intervals(state, t_max=None):
    """Maximal intervals inside (0, t_max] on which gamma < 0"""
    t_max = default_t_max(state.model) if t_max is None else t_max
    validate_positive(t_max, "t_max")
    rate = _rate(state)
    omega_s = state.model.scale_freq
    xtol = settings.ROOT_TOLERANCE / omega_s
    threshold = settings.TANGENT_THRESHOLD * omega_s

    times = _scan_grid(state, t_max)
    values = np.asarray(gamma(state, times), dtype=float)
    times, values = _refine_minima(rate, times, values)
    negative = values < 0

    intervals = []
    i, n = 0, len(times)
    while i < n:
        if not negative[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and negative[j + 1]:
            j += 1
        # gamma(0) = 0, so a run from the first sample starts at the origin
        t_start = 0.0 if i == 0 else _crossing(rate, times[i - 1], times[i], xtol)
        open_ended = j == n - 1
        t_end = t_max if open_ended else _crossing(rate, times[j], times[j + 1], xtol)
        min_rate = float(values[i : j + 1].min())
        if i == j:
            min_rate = min(min_rate, rate(0.5 * (t_start + t_end)))
        if min_rate > -threshold:
            logger.debug("dropping tangential zero near t=%g", times[i])
        elif t_end > t_start:
            intervals.append(NegativeRateInterval(t_start, t_end, min_rate, open_ended))
        i = j + 1

    logger.info(
        "found %d negative-rate intervals up to t=%g (alpha0=%g, T=%g)",
        len(intervals),
        t_max,
        state.model.alpha0,
        state.temperature,
    )
    return tuple(intervals)


def _interval_measure(state, interval, epsrel):
    def integrand(t):
        return abs(float(gamma(state, t))) * math.exp(-float(xi_of_t(state, t)))

    lo, hi = interval.t_start, interval.t_end
    # one breakpoint per decade
    points = None
    if lo > 0 and hi / lo > 10.0:
        points = np.geomspace(lo, hi, int(math.log10(hi / lo)) + 2)[1:-1]
    value, _ = quad(
        integrand,
        lo,
        hi,
        points=points,
        epsabs=settings.QUADRATURE_ABS_FLOOR,
        epsrel=epsrel,
        limit=200,
    )
    return value


def _tail_estimate(state, t_max):
    """Bound on the contribution beyond t_max from the leading rate term"""
    try:
        term = rate_leading_term(state)
    except ExpansionRefused:
        return math.inf
    if term.coeff > 0:
        return 0.0
    if term.power <= 1.0:
        return math.inf
    omega_s = state.model.scale_freq
    tau = omega_s * t_max
    log_factor = math.log(tau) ** term.log_power if term.log_power else 1.0
    decay = abs(term.coeff) * tau ** (1.0 - term.power) * log_factor
    return decay / ((term.power - 1.0) * omega_s) * math.exp(-float(xi_of_t(state, t_max)))


def non_markovianity(state, t_max=None, intervals=None):
    t_max = default_t_max(state.model) if t_max is None else t_max
    if intervals is None:
        intervals = find_negative_intervals(state, t_max)
    if not intervals:
        return MeasureResult(value=0.0)

    epsrel = max(state.rtol, settings.MEASURE_RTOL_FLOOR)
    contributions = tuple(_interval_measure(state, interval, epsrel) for interval in intervals)
    value = math.fsum(contributions)

    tail = 0.0
    warnings = ()
    if intervals[-1].open_ended:
        tail = _tail_estimate(state, t_max)
    lower_bound = tail > max(epsrel * value, settings.QUADRATURE_ABS_FLOOR)
    if lower_bound:
        message = (
            f"N={value:.6g} is a lower bound: the rate is still negative at t_max={t_max:g} "
            f"and the tail is estimated at {tail:.3g}"
        )
        logger.warning(message)
        warnings = (message,)
    return MeasureResult(
        value=value,
        intervals=tuple(intervals),
        contributions=contributions,
        tail_estimate=tail,
        lower_bound=lower_bound,
        warnings=warnings,
    )
