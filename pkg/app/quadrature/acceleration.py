"""
Acceleration of slowly converging alternating partial sums
"""

import mpmath
import numpy as np


def iterated_average(partial_sums):
    """Repeatedly average neighbouring partial sums down to a single value.

    For an alternating series whose terms are a smooth function of the index
    every averaging pass cancels the leading oscillation of the remainder.
    """
    sums = np.asarray(partial_sums, dtype=float)
    if sums.size == 0:
        raise ValueError("at least one partial sum is required")
    while sums.size > 1:
        sums = 0.5 * (sums[:-1] + sums[1:])
    return float(sums[0])


def wynn_epsilon(partial_sums):
    """Shanks transform via the epsilon table, best entry of the last row"""
    table = mpmath.shanks([mpmath.mpf(float(s)) for s in partial_sums])
    return float(table[-1][-1])
