"""Two-sample Kolmogorov-Smirnov test.

The statistic is the exact sup-norm distance between the two empirical
CDFs, found by sweeping the merged sorted samples. The p-value comes from
the asymptotic Kolmogorov distribution with the finite-sample adjustment
lambda = (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) * d, ne = n1*n2/(n1+n2):

    p = 2 * sum_{k>=1} (-1)^(k-1) * exp(-2 k^2 lambda^2)

truncated once a term drops below 1e-12 and clamped to [0, 1]. At very
small sample sizes the asymptotic p is an approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import EmptySample, NonFiniteValue

_TERM_EPS = 1e-12
_MAX_TERMS = 100_000


@dataclass(frozen=True)
class KSResult:
    d_statistic: float
    p_value: float
    n1: int
    n2: int


def kolmogorov_p(lam: float) -> float:
    """Two-sided tail of the Kolmogorov distribution at lambda."""
    if lam <= 0.0:
        return 1.0
    total = 0.0
    sign = 1.0
    for k in range(1, _MAX_TERMS + 1):
        term = math.exp(-2.0 * k * k * lam * lam)
        total += sign * term
        if term < _TERM_EPS:
            break
        sign = -sign
    return min(1.0, max(0.0, 2.0 * total))


def ks_two_sample(xs, ys) -> KSResult:
    """Exact D and asymptotic p for two samples of finite reals."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    n1 = x.size
    n2 = y.size
    if n1 == 0 or n2 == 0:
        raise EmptySample("both samples must be non-empty")
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise NonFiniteValue("samples must contain only finite values")

    x = np.sort(x)
    y = np.sort(y)
    points = np.concatenate([x, y])
    cdf1 = np.searchsorted(x, points, side="right") / n1
    cdf2 = np.searchsorted(y, points, side="right") / n2
    d = float(np.max(np.abs(cdf1 - cdf2)))

    ne = n1 * n2 / (n1 + n2)
    lam = (math.sqrt(ne) + 0.12 + 0.11 / math.sqrt(ne)) * d
    return KSResult(d_statistic=d, p_value=kolmogorov_p(lam), n1=n1, n2=n2)
