"""
Admissibility checks for spectral models.

Every check runs and is reported on its own; a failing check never stops the
remaining ones.
"""

import logging
import math
from dataclasses import dataclass

import mpmath
import numpy as np
from django.conf import settings

from utils.exceptions import LabError

from .choices import SpectralClass
from .densities import evaluate, omega_mp
from .moments import moment_eta1

logger = logging.getLogger(__name__)

# Probe frequencies (units of omega_s) for the derivative check
_DERIVATIVE_PROBES = ("1e-6", "1e-5")
_DERIVATIVE_RTOL = 0.05


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple
    conditions_assumed: bool = False

    @property
    def is_valid(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]

    def get(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def _check_terms(model):
    terms = model.terms
    if not terms:
        return [CheckResult("terms", False, "no low-frequency terms given")]

    results = []
    alphas = [term.alpha for term in terms]
    ordered = all(b > a for a, b in zip(alphas, alphas[1:]))
    results.append(
        CheckResult("ordering", ordered, "" if ordered else f"exponents {alphas}")
    )
    results.append(
        CheckResult(
            "leading_exponent", model.alpha0 > 0, f"alpha0={model.alpha0:g}"
        )
    )
    results.append(
        CheckResult(
            "leading_coefficient",
            model.leading_coeff > 0,
            f"leading coefficient {model.leading_coeff:g}",
        )
    )
    if model.expansion_class == SpectralClass.CLASS1:
        bad = [t.log_power for t in terms if t.log_power < 0 or t.log_power != int(t.log_power)]
        results.append(
            CheckResult(
                "log_powers",
                not bad,
                "" if not bad else f"class-1 log powers must be natural, got {bad}",
            )
        )
    return results


def _check_scales(model):
    ok = model.scale_freq > 0 and model.cutoff_freq > 0 and model.high_freq_decay > 0
    return CheckResult(
        "scales",
        ok,
        f"omega_s={model.scale_freq:g} omega_c={model.cutoff_freq:g} "
        f"chi0={model.high_freq_decay:g}",
    )


def _check_non_negative(model, points):
    grid = np.geomspace(1e-8, 1e3, points) * model.scale_freq
    try:
        values = evaluate(model, grid)
    except (LabError, FloatingPointError, ValueError) as exc:
        return CheckResult("non_negativity", False, str(exc))
    bad = ~np.isfinite(values) | (values < 0)
    if bad.any():
        first = grid[np.argmax(bad)]
        return CheckResult(
            "non_negativity", False, f"{int(bad.sum())} grid points fail, first at {first:g}"
        )
    return CheckResult("non_negativity", True, f"{points} log-spaced points")


def _check_summability(model):
    try:
        eta1 = moment_eta1(model, method="quadrature")
    except (LabError, ValueError) as exc:
        return CheckResult("summability", False, str(exc))
    ok = math.isfinite(eta1)
    return CheckResult("summability", ok, f"eta1={eta1:.12g}")


def derivative_order(model):
    """Least natural number >= the least exponent alpha_k >= 1"""
    candidates = [term.alpha for term in model.terms if term.alpha >= 1]
    anchor = min(candidates) if candidates else 1.0
    return int(math.ceil(anchor - settings.ODD_INTEGER_TOLERANCE))


def _check_expansion_derivatives(model):
    if model.table:
        return CheckResult(
            "expansion_derivatives", True, "tabulated model: conditions assumed"
        )
    lead = model.terms[0]
    order = derivative_order(model)

    def leading(nu):
        return lead.coeff * nu**lead.alpha * (-mpmath.log(nu)) ** lead.log_power

    def omega(nu):
        return omega_mp(model, nu)

    worst = 0.0
    with mpmath.workdps(40):
        for probe in _DERIVATIVE_PROBES:
            nu = mpmath.mpf(probe)
            scale = abs(nu ** (lead.alpha - order))
            for k in range(order + 1):
                expected = mpmath.diff(leading, nu, k)
                if abs(expected) < 1e-12 * scale:
                    continue
                actual = mpmath.diff(omega, nu, k)
                worst = max(worst, float(abs(actual / expected - 1)))
    ok = worst <= _DERIVATIVE_RTOL
    return CheckResult(
        "expansion_derivatives",
        ok,
        f"orders 0..{order}, worst relative deviation {worst:.3g}",
    )


def validate(model, grid_points=None):
    """Run every admissibility check and collect the outcomes"""
    points = grid_points or settings.SPECTRAL_GRID_POINTS
    checks = _check_terms(model)
    checks.append(_check_scales(model))
    if model.terms:
        checks.append(_check_non_negative(model, points))
        checks.append(_check_summability(model))
        if model.expansion_class == SpectralClass.CLASS2:
            checks.append(_check_expansion_derivatives(model))

    report = ValidationReport(checks=tuple(checks), conditions_assumed=model.conditions_assumed)
    for failure in report.failures():
        logger.info("spectral check %s failed: %s", failure.name, failure.detail)
    return report
