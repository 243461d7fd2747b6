import datetime as dt
import re

_ISO = re.compile(r"^(\d{4})-(\d{2})-(\d{2})$")
_DMY = re.compile(r"^(\d{1,2})/(\d{1,2})/(\d{4})$")


def parse_date(text):
    """Parse ``YYYY-MM-DD`` or ``DD/MM/YYYY``; raise ValueError otherwise."""
    text = text.strip()
    m = _ISO.match(text)
    if m:
        y, mo, d = m.groups()
        return dt.date(int(y), int(mo), int(d))
    m = _DMY.match(text)
    if m:
        d, mo, y = m.groups()
        return dt.date(int(y), int(mo), int(d))
    raise ValueError(f"unrecognised date {text!r}")


def is_weekend(day):
    return day.weekday() >= 5


def calendar_days(start, end):
    n = (end - start).days + 1
    return [start + dt.timedelta(days=i) for i in range(max(n, 0))]


def weekday_distance(a, b):
    """Number of weekdays strictly after ``a`` up to and including ``b``."""
    lo, hi = (a, b) if a <= b else (b, a)
    days = 0
    cur = lo
    while cur < hi:
        cur += dt.timedelta(days=1)
        if not is_weekend(cur):
            days += 1
    return days
