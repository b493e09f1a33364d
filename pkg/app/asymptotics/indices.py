"""
Index selection over the low-frequency terms of a spectral density.

A term contributes to the long-time behavior unless its exponent is an odd
natural number and it carries no logarithmic factor.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from django.conf import settings

from spectral.densities import low_frequency_terms
from utils.exceptions import ExpansionRefused

logger = logging.getLogger(__name__)


def odd_natural(alpha):
    """m with alpha = 1 + 2m within tolerance, else None"""
    nearest = round(alpha)
    if nearest < 1 or nearest % 2 == 0:
        return None
    if abs(alpha - nearest) > settings.ODD_INTEGER_TOLERANCE:
        return None
    return (nearest - 1) // 2


def is_odd_natural(alpha):
    return odd_natural(alpha) is not None


def contributes(term):
    return not is_odd_natural(term.alpha) or term.log_power != 0


@dataclass(frozen=True)
class IndexSelection:
    k0: Optional[int]
    k1: int
    k2: Optional[int]

    @property
    def shifted(self):
        return self.k1 != 0


def _next_contributing(terms, start):
    for index in range(start, len(terms)):
        if contributes(terms[index]):
            return index
    return None


def select_indices(model):
    terms = low_frequency_terms(model)
    if not terms:
        raise ExpansionRefused("the model has no low-frequency terms")
    k0 = _next_contributing(terms, 1)
    if contributes(terms[0]):
        k1 = 0
    elif k0 is not None:
        k1 = k0
    else:
        logger.info(
            "no contributing term after alpha0=%g among %d terms", terms[0].alpha, len(terms)
        )
        raise ExpansionRefused(
            f"alpha0={terms[0].alpha:g} is odd without a logarithmic factor and no "
            f"later term contributes; no valid k0 exists"
        )
    return IndexSelection(k0=k0, k1=k1, k2=_next_contributing(terms, k1 + 1))
