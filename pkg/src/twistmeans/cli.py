"""Command-line front end: run identity suites, counterexamples, and
experiments; emit CSV/JSON reports.

Subcommands: ``verify <id>`` (or ``verify all``), ``counterexamples``,
``injectivity``, ``support``, ``all``. Exit code 0 when every row passes,
1 on a residual failure, 2 on usage errors. A ``key = value`` config file
provides defaults that flags override; the resolved configuration is
embedded in the JSON report. TWISTMEANS_THREADS caps suite parallelism.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .backend import backend_name
from .config import DEFAULT_SEED
from .reporting import write_report
from .suites import REGISTRY, RunConfig, resolve_suite, run_suites


def _parse_config_file(path: str) -> dict:
    out = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad config line (expected key = value): {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def _coerce(value: str, kind):
    if kind is int:
        return int(value)
    if kind is float:
        return float(value)
    return value


_CONFIG_KEYS = {"n": int, "max_k": int, "p": int, "q": int,
                "order": str, "tol": float, "out": str, "seed": int}


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, default=None, help="complex/real dimension")
    sub.add_argument("--max-k", type=int, default=None, dest="max_k",
                     help="degree bound")
    sub.add_argument("--p", type=int, default=None, help="holomorphic weight degree")
    sub.add_argument("--q", type=int, default=None, help="antiholomorphic weight degree")
    sub.add_argument("--order", default=None,
                     help="quadrature order (integer or 'auto')")
    sub.add_argument("--tol", type=float, default=None,
                     help="override the suite residual tolerance")
    sub.add_argument("--out", default=None,
                     help="report base path (writes .csv and .json)")
    sub.add_argument("--seed", type=int, default=None, help="sampling seed")
    sub.add_argument("--config", default=None, help="key = value config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistmeans",
        description="verify spherical-mean identities and run the experiments")
    subs = parser.add_subparsers(dest="command", required=True)

    verify = subs.add_parser("verify", help="run one named suite (or 'all')")
    verify.add_argument("suite_id", help="suite id, e.g. lemma-2.3, eq-1.2, all")
    _add_common(verify)

    for name, help_text in (
            ("counterexamples", "vanishing-mean counterexample gallery"),
            ("injectivity", "radial coefficient recovery experiment"),
            ("support", "support-characterization experiments"),
            ("all", "every suite and experiment")):
        sub = subs.add_parser(name, help=help_text)
        _add_common(sub)
    return parser


def _resolve_settings(args) -> dict:
    settings = {k: None for k in _CONFIG_KEYS}
    settings["seed"] = None
    if args.config:
        file_values = _parse_config_file(args.config)
        for key, value in file_values.items():
            if key not in _CONFIG_KEYS:
                raise ValueError(f"unknown config key {key!r}")
            settings[key] = _coerce(value, _CONFIG_KEYS[key])
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            settings[key] = flag
    if settings["seed"] is None:
        settings["seed"] = DEFAULT_SEED
    if settings["out"] is None:
        settings["out"] = "twistmeans-report"
    if settings["order"] in (None, "auto"):
        settings["order"] = "auto"
    else:
        settings["order"] = int(settings["order"])
    return settings


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0

    try:
        settings = _resolve_settings(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "verify":
        if args.suite_id == "all":
            names = list(REGISTRY)
        else:
            resolved = resolve_suite(args.suite_id)
            if resolved is None:
                valid = ", ".join(REGISTRY)
                print(f"unknown suite id {args.suite_id!r}; valid ids: {valid}",
                      file=sys.stderr)
                return 2
            names = [resolved]
    elif args.command == "all":
        names = list(REGISTRY)
    else:
        names = [args.command]

    threads = int(os.environ.get("TWISTMEANS_THREADS", "1") or "1")
    cfg = RunConfig(n=settings["n"], max_k=settings["max_k"], p=settings["p"],
                    q=settings["q"], order=settings["order"], tol=settings["tol"],
                    seed=settings["seed"], threads=max(1, threads))

    rows = run_suites(names, cfg)
    resolved_config = {
        "command": args.command,
        "suites": names,
        "n": settings["n"],
        "max_k": settings["max_k"],
        "p": settings["p"],
        "q": settings["q"],
        "order": settings["order"],
        "tol": settings["tol"],
        "seed": settings["seed"],
        "threads": cfg.threads,
        "backend": backend_name(),
    }
    csv_path, json_path = write_report(rows, settings["out"], resolved_config)

    failures = [r for r in rows if not r.passed]
    for row in rows:
        status = "pass" if row.passed else "FAIL"
        print(f"[{status}] {row.experiment}: residual={row.residual:.3e} "
              f"tol={row.tolerance:.1e}")
    print(f"{len(rows) - len(failures)}/{len(rows)} rows passed; "
          f"report: {csv_path}, {json_path}")
    return 0 if not failures else 1


if __name__ == "__main__":
    raise SystemExit(main())
