"""Naive reference implementations used as test oracles.

Nothing here imports eventlens computation code; everything is plain loops
(or mpmath / scipy) so agreement with the package is evidence, not tautology.
"""

import datetime as dt
import math

from mpmath import mp, mpf, sqrt as mpsqrt
from scipy import stats


def pearson_loop(x, y):
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    if sxx == 0 or syy == 0:
        return None
    return sxy / (math.sqrt(sxx) * math.sqrt(syy))


def pearson_mp(x, y, dps=50):
    with mp.workdps(dps):
        x = [mpf(v) for v in x]
        y = [mpf(v) for v in y]
        n = len(x)
        mx, my = sum(x) / n, sum(y) / n
        sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
        sxx = sum((a - mx) ** 2 for a in x)
        syy = sum((b - my) ** 2 for b in y)
        return float(sxy / (mpsqrt(sxx) * mpsqrt(syy)))


def critical_r_scipy(df, alpha):
    t = stats.t.ppf(1 - alpha / 2, df)
    return t / math.sqrt(t * t + df)


def windows_loop(dates, x, y, window_len, alpha):
    """[(end_date, r or None, significant, window_dates)] by brute force."""
    crit = critical_r_scipy(window_len - 2, alpha)
    out = []
    for start in range(len(x) - window_len + 1):
        xs = list(x[start:start + window_len])
        ys = list(y[start:start + window_len])
        r = pearson_loop(xs, ys) if (max(xs) != min(xs) and max(ys) != min(ys)) else None
        sig = r is not None and abs(r) >= crit
        out.append((dates[start + window_len - 1], r, sig, list(dates[start:start + window_len])))
    return out


def weekdays_between(a, b):
    n = 0
    d = a
    while d < b:
        d += dt.timedelta(days=1)
        if d.weekday() < 5:
            n += 1
    return n


def window_events_loop(dates, x, y, counts, window_len, alpha):
    """Three-step window-correlation detector, every step a plain loop."""
    inside = set()
    for _, r, sig, wdates in windows_loop(dates, x, y, window_len, alpha):
        if sig:
            inside.update(wdates)
    mean = sum(counts) / len(counts)
    by_date = dict(zip(dates, counts))
    busy = sorted(d for d in inside if by_date[d] > mean)
    reps = []
    cluster = []
    for d in busy:
        if cluster and weekdays_between(cluster[-1], d) > window_len:
            reps.append(_pick(cluster, by_date))
            cluster = []
        cluster.append(d)
    if cluster:
        reps.append(_pick(cluster, by_date))
    return reps


def _pick(cluster, by_date):
    best = cluster[0]
    for d in cluster[1:]:
        if by_date[d] > by_date[best]:
            best = d
    return best


def top_quantile_loop(dates, counts, q):
    """Sort descending, take ceil(q*N) days, include ties at the cut."""
    order = sorted(counts, reverse=True)
    m = max(1, math.ceil(round(q * len(counts), 9)))
    cut = order[m - 1]
    return [d for d, c in zip(dates, counts) if c >= cut]


def event_study_loop(levels, event_index_in_levels, estimation_len, h, alpha):
    """Mean-adjusted event study from raw levels with explicit loops.

    ``event_index_in_levels`` indexes the event day in ``levels``; returns are
    level[i] / level[i-1] - 1.
    """
    ret = {}
    for i in range(1, len(levels)):
        ret[i] = (levels[i] - levels[i - 1]) / levels[i - 1]
    first_event = event_index_in_levels - h
    est_idx = list(range(first_event - estimation_len, first_event))
    assert est_idx[0] >= 1
    total = 0.0
    for i in est_idx:
        total += ret[i]
    mean = total / estimation_len
    ss = 0.0
    for i in est_idx:
        ss += (ret[i] - mean) ** 2
    s = math.sqrt(ss / (estimation_len - 2))
    tcrit = stats.t.ppf(1 - alpha / 2, estimation_len - 2)
    rows = []
    for k in range(-h, h + 1):
        i = event_index_in_levels + k
        ar = ret[i] - mean
        rows.append((k, ret[i], ar, ar / s, abs(ar / s) >= tcrit))
    return mean, s, rows
