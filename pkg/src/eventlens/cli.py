"""Command-line entry point: ``eventlens <subcommand> --config run.cfg``."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from eventlens.config import SCALAR_FIELDS, apply_setting, load_config
from eventlens.errors import ConfigError
from eventlens.pipeline import SUBCOMMAND_STAGES, fetch_all, run_pipeline

EXIT_OK, EXIT_STAGE, EXIT_CONFIG = 0, 1, 2
CONFIG_ENV = "EVENTLENS_CONFIG"

# overrides exposed as dedicated flags; out/seed/parallel have short names
_SHORT = {"out_dir": "--out", "seed": "--seed", "parallel": "--parallel"}


def build_parser():
    parser = argparse.ArgumentParser(prog="eventlens", description="News-volume event detection and FX event studies.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in (*SUBCOMMAND_STAGES, "fetch-rates"):
        p = sub.add_parser(name)
        p.add_argument("--config", help=f"flat key=value config file (falls back to ${CONFIG_ENV})")
        p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="override any config key, including rate.<PAIR> and fetch.<PAIR>")
        for f in SCALAR_FIELDS:
            flag = _SHORT.get(f.name, "--" + f.name.replace("_", "-"))
            p.add_argument(flag, dest=f"opt_{f.name}", metavar=f.name.upper(), default=None)
    return parser


def _load(args):
    path = args.config or os.environ.get(CONFIG_ENV)
    if not path:
        raise ConfigError(f"--config is required (or set {CONFIG_ENV})")
    cfg = load_config(path)
    cwd = Path.cwd()
    for f in SCALAR_FIELDS:
        value = getattr(args, f"opt_{f.name}")
        if value is not None:
            apply_setting(cfg, f.name, value, cwd)
    for item in args.set:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        apply_setting(cfg, key, value, cwd)
    return cfg.validate()


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = _load(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.command == "fetch-rates":
        result = fetch_all(cfg)
    else:
        result = run_pipeline(cfg, SUBCOMMAND_STAGES[args.command])
    for stage, message in result.errors.items():
        print(f"{stage}: {message}", file=sys.stderr)
    for stage in result.skipped:
        print(f"{stage}: skipped (upstream failure)", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
