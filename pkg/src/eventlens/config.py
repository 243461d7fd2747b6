"""Run configuration: a flat ``key = value`` text file.

Blank lines and lines starting with ``#`` are ignored. List values are
comma-separated, boilerplate markers are ``|``-separated. Relative paths are
resolved against the config file's directory. Two key families are dynamic:

``rate.<BASE/QUOTE> = path#column``
    a local rate CSV and the column holding that pair's level;
``fetch.<BASE/QUOTE> = url-template``
    an HTTP source for ``fetch-rates`` (placeholders ``{pair}``, ``{base}``,
    ``{quote}``, ``{pair_slug}``, ``{start}``, ``{end}``).
"""

from __future__ import annotations

import dataclasses
import datetime as dt
import os
from dataclasses import dataclass, field
from pathlib import Path

from eventlens._dates import parse_date
from eventlens.errors import ConfigError


@dataclass
class RunConfig:
    study_start: dt.date = dt.date(2016, 1, 1)
    study_end: dt.date = dt.date(2019, 4, 19)
    term: str = "brexit"
    mention_mode: str = "token"
    news_path: Path | None = None
    stopword_path: Path | None = None
    markers: tuple[str, ...] = ()
    primary_pair: str = "GBP/EUR"
    panel_pairs: tuple[str, ...] = ("GBP/EUR", "GBP/USD", "EUR/USD")
    crypto_pairs: tuple[str, ...] = ()
    extra_event_dates: tuple[dt.date, ...] = ()
    weekend_policy: str = "exclude"
    news_metric: str = "mentions"
    rate_mode: str = "level"
    window_len: int = 11
    window_alpha: float = 0.05
    two_tailed: bool = True
    quantile: float = 0.05
    estimation_len: int = 150
    event_half_width: int = 5
    day_alpha: float = 0.10
    panel_alpha: float = 0.05
    variance_window: str = "estimation"
    lda_k: int = 5
    lda_alpha: float | None = None
    lda_eta: float = 0.01
    lda_iterations: int = 1000
    lda_half_width: int = 5
    top_n: int = 20
    tracked_words: tuple[str, ...] = ("brexit", "deal", "delay", "referendum", "theresa", "vote")
    out_dir: Path = Path("out")
    raw_dir: Path = Path("raw")
    seed: int = 0
    parallel: int = 1
    fetch_retries: int = 3
    fetch_timeout: float = 30.0
    fetch_value_column: str = "Value"
    rates: dict = field(default_factory=dict)  # pair -> (path, column)
    fetch: dict = field(default_factory=dict)  # pair -> url template

    def validate(self):
        problems = []
        if self.study_end < self.study_start:
            problems.append("study_end precedes study_start")
        if self.mention_mode not in ("token", "substring"):
            problems.append(f"mention_mode must be token or substring, not {self.mention_mode!r}")
        if self.weekend_policy not in ("exclude", "carry_forward"):
            problems.append(f"weekend_policy must be exclude or carry_forward, not {self.weekend_policy!r}")
        if self.news_metric not in ("mentions", "articles"):
            problems.append(f"bad news_metric {self.news_metric!r}")
        if self.rate_mode not in ("level", "pct", "abs_pct"):
            problems.append(f"bad rate_mode {self.rate_mode!r}")
        if self.variance_window not in ("estimation", "event"):
            problems.append(f"bad variance_window {self.variance_window!r}")
        for name in ("window_alpha", "quantile", "day_alpha", "panel_alpha"):
            if not 0 < getattr(self, name) < 1:
                problems.append(f"{name} must lie in (0, 1)")
        for name, low in (("window_len", 3), ("estimation_len", 3), ("lda_k", 1), ("lda_iterations", 0),
                          ("top_n", 1), ("parallel", 1), ("fetch_retries", 0), ("event_half_width", 0),
                          ("lda_half_width", 0)):
            if getattr(self, name) < low:
                problems.append(f"{name} must be >= {low}")
        if self.lda_alpha is not None and self.lda_alpha <= 0:
            problems.append("lda_alpha must be positive")
        if self.lda_eta <= 0:
            problems.append("lda_eta must be positive")
        if self.term != self.term.lower() or len(self.term.split()) != 1:
            problems.append("term must be a single lowercase token")
        if problems:
            raise ConfigError("; ".join(problems))
        return self


SCALAR_FIELDS = [f for f in dataclasses.fields(RunConfig) if f.name not in ("rates", "fetch")]
_FIELD_TYPES = {
    "study_start": "date", "study_end": "date", "news_path": "path", "stopword_path": "path",
    "out_dir": "path", "raw_dir": "path", "markers": "markers", "panel_pairs": "list",
    "crypto_pairs": "list", "tracked_words": "list", "extra_event_dates": "dates",
    "two_tailed": "bool", "lda_alpha": "optfloat",
}
for _f in SCALAR_FIELDS:
    if _f.name not in _FIELD_TYPES:
        _FIELD_TYPES[_f.name] = {int: "int", float: "float", str: "str"}.get(type(_f.default), "str")


def _convert(key, raw, base_dir):
    kind = _FIELD_TYPES[key]
    raw = raw.strip()
    try:
        if kind == "date":
            return parse_date(raw)
        if kind == "path":
            if not raw:
                return None
            p = Path(os.path.expanduser(raw))
            return p if p.is_absolute() else (base_dir / p)
        if kind == "markers":
            return tuple(m for m in (s.strip() for s in raw.split("|")) if m)
        if kind == "list":
            return tuple(s.strip() for s in raw.split(",") if s.strip())
        if kind == "dates":
            return tuple(parse_date(s) for s in raw.split(",") if s.strip())
        if kind == "bool":
            low = raw.lower()
            if low in ("1", "true", "yes", "on"):
                return True
            if low in ("0", "false", "no", "off"):
                return False
            raise ValueError(f"not a boolean: {raw!r}")
        if kind == "optfloat":
            return None if raw == "" else float(raw)
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
        return raw
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


def apply_setting(cfg: RunConfig, key: str, value: str, base_dir: Path):
    key = key.strip()
    if key.startswith("rate."):
        pair = key[5:].upper()
        path, _, column = value.strip().partition("#")
        p = Path(os.path.expanduser(path.strip()))
        cfg.rates[pair] = (p if p.is_absolute() else base_dir / p, column.strip() or "Value")
        return
    if key.startswith("fetch."):
        cfg.fetch[key[6:].upper()] = value.strip()
        return
    if key not in _FIELD_TYPES:
        raise ConfigError(f"unknown config key {key!r}")
    setattr(cfg, key, _convert(key, value, base_dir))


def parse_config(text: str, base_dir: Path = Path(".")) -> RunConfig:
    cfg = RunConfig()
    cfg.out_dir = base_dir / "out"
    cfg.raw_dir = base_dir / "raw"
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, _, value = stripped.partition("=")
        apply_setting(cfg, key, value, base_dir)
    return cfg


def load_config(path) -> RunConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_config(text, path.resolve().parent)
