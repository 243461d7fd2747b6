"""Generic HTTP client for downloading rate CSVs."""

from __future__ import annotations

import logging
import re
import time
from pathlib import Path

import httpx

from eventlens.errors import HttpStatus, NetworkError
from eventlens.output import atomic_write_bytes
from eventlens.timeseries import split_pair

log = logging.getLogger(__name__)

_PAIR_FIELDS = ("{pair}", "{base}", "{quote}", "{pair_slug}")
_DATE_FIELDS = ("{start}", "{end}")


def pair_slug(pair):
    return re.sub(r"[^A-Za-z0-9]", "", pair).upper()


def render_url(url_template, pair, start, end):
    if not any(f in url_template for f in _PAIR_FIELDS) or not any(f in url_template for f in _DATE_FIELDS):
        raise ValueError(f"url template needs a pair and a date placeholder: {url_template!r}")
    base, quote = split_pair(pair)
    return url_template.format(pair=f"{base}/{quote}", base=base, quote=quote, pair_slug=pair_slug(pair),
                               start=start.isoformat(), end=end.isoformat())


def raw_path(raw_dir, pair, start, end):
    return Path(raw_dir) / f"{pair_slug(pair)}_{start.isoformat()}_{end.isoformat()}.csv"


def fetch_rate_csv(url_template, pair, start, end, raw_dir, retries=3, timeout=30.0,
                   client: httpx.Client | None = None, backoff=0.5, sleep=time.sleep) -> bytes:
    """GET a rate CSV and persist the body verbatim under ``raw_dir``.

    Transport failures are retried ``retries`` times with exponential backoff
    (``backoff * 2**attempt`` seconds). A non-2xx response raises
    :class:`HttpStatus` at once and writes nothing.
    """
    url = render_url(url_template, pair, start, end)
    own_client = client is None
    if own_client:
        client = httpx.Client(timeout=timeout, follow_redirects=True)
    try:
        attempt = 0
        while True:
            try:
                response = client.get(url, timeout=timeout)
                break
            except httpx.TransportError as exc:
                if attempt >= retries:
                    raise NetworkError(f"{pair}: {url} failed after {attempt + 1} attempts: {exc}") from exc
                delay = backoff * 2 ** attempt
                log.warning("%s: %s (attempt %d), retrying in %.1fs", pair, exc, attempt + 1, delay)
                sleep(delay)
                attempt += 1
    finally:
        if own_client:
            client.close()
    if not 200 <= response.status_code < 300:
        raise HttpStatus(response.status_code, pair, url)
    body = response.content
    atomic_write_bytes(raw_path(raw_dir, pair, start, end), body)
    return body
