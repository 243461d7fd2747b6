"""Student-t critical values for integer degrees of freedom.

The two-sided CDF ``P(|T| < t)`` has a finite closed form for integer ``df``
(a trigonometric series in ``theta = atan(t / sqrt(df))``); it is inverted by
bisection. Past ``LARGE_DF`` the Cornish-Fisher style expansion around the
normal quantile is used instead, which is accurate far beyond 1e-8 there.
"""

from __future__ import annotations

import math
from statistics import NormalDist

from eventlens.errors import InvalidAlpha

LARGE_DF = 2000


def _check(df, alpha):
    if not (0.0 < alpha < 1.0):
        raise InvalidAlpha(f"alpha must lie in (0, 1), got {alpha}")
    if int(df) != df or df < 1:
        raise ValueError(f"degrees of freedom must be a positive integer, got {df}")
    return int(df)


def t_two_sided_cdf(t: float, df: int) -> float:
    """P(|T| < t) for Student's t with integer ``df``; t >= 0."""
    if t <= 0:
        return 0.0
    theta = math.atan(t / math.sqrt(df))
    s, c = math.sin(theta), math.cos(theta)
    c2 = c * c
    if df % 2 == 1:
        if df == 1:
            return 2.0 * theta / math.pi
        term = c
        total = c
        for j in range(1, (df - 3) // 2 + 1):
            term *= c2 * (2 * j) / (2 * j + 1)
            total += term
        return min(1.0, 2.0 / math.pi * (theta + s * total))
    term = 1.0
    total = 1.0
    for j in range(1, (df - 2) // 2 + 1):
        term *= c2 * (2 * j - 1) / (2 * j)
        total += term
    return min(1.0, s * total)


def _large_df_quantile(p, df):
    x = NormalDist().inv_cdf(p)
    x2 = x * x
    g1 = (x2 + 1) * x / 4
    g2 = ((5 * x2 + 16) * x2 + 3) * x / 96
    g3 = (((3 * x2 + 19) * x2 + 17) * x2 - 15) * x / 384
    g4 = ((((79 * x2 + 776) * x2 + 1482) * x2 - 1920) * x2 - 945) * x / 92160
    return x + g1 / df + g2 / df**2 + g3 / df**3 + g4 / df**4


def t_critical(df: int, alpha: float) -> float:
    """Two-tailed critical value: ``P(|T| >= t*) = alpha``."""
    df = _check(df, alpha)
    if df > LARGE_DF:
        return _large_df_quantile(1.0 - alpha / 2.0, df)
    target = 1.0 - alpha
    lo, hi = 0.0, 1.0
    while t_two_sided_cdf(hi, df) < target:
        lo, hi = hi, hi * 2.0
        if hi > 1e300:
            raise ArithmeticError("t quantile bracket overflow")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if t_two_sided_cdf(mid, df) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-14 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def critical_r(df: int, alpha: float) -> float:
    """Smallest |Pearson r| significant two-tailed at ``alpha`` with ``df`` = n - 2."""
    t = t_critical(df, alpha)
    return t / math.sqrt(t * t + df)
