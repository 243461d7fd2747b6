"""
Abnormal returns around the referendum result
=============================================

A mean-adjusted event study on public ECB reference rates: 150 trading days
of estimation ending before day -5, then AR and t for days -5..+5.
"""

import datetime as dt

from eventlens import load_ecb_reference
from eventlens.eventstudy import EventStudyConfig, numeraire_verdict, run_event_study, run_event_study_panel
from eventlens.timeseries import resolve_pair

ecb = load_ecb_reference()
gbp_eur = resolve_pair("GBP/EUR", ecb)

rep = run_event_study(gbp_eur, dt.date(2016, 6, 24), EventStudyConfig())
print(f"estimation {rep.estimation_dates[0]} .. {rep.estimation_dates[1]}, "
      f"mean {rep.estimation_mean:+.5f}, s_AR {rep.s_ar:.5f}, critical t {rep.critical_t:.3f}")
for row in rep.rows:
    star = "*" if row.significant else " "
    print(f"{row.relative_day:+d}  {row.date}  {row.level:.4f}  AR {row.ar:+.4f}  t {row.t_stat:+.3f}{star}")

# GBP/USD and EUR/USD act as controls: which currency moved?
pairs = [resolve_pair(p, ecb) for p in ("GBP/EUR", "GBP/USD", "EUR/USD")]
events = [dt.date(2016, 6, 24), dt.date(2016, 10, 7), dt.date(2016, 12, 9)]
for row in run_event_study_panel(pairs, events):
    cells = "  ".join(f"{p} {c.ar:+.4f}{'*' if c.significant else ' '}" for p, c in row.cells.items())
    print(row.event_date, cells, "->", numeraire_verdict(row).verdict)
